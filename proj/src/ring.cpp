#include "wjf/ring.hpp"

#include <algorithm>
#include <set>

#include "wjf/catalog.hpp"
#include "wjf/linalg.hpp"

namespace wjf {

namespace {

std::string power_name(const char* base, std::int64_t e) {
    if (e == 0) return "";
    std::string s = base;
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

const char* prefactor_name(Prefactor p) {
    switch (p) {
        case Prefactor::None: return "";
        case Prefactor::PhiM1_2: return "phi_m1_2";
        case Prefactor::PhiM1Half: return "phi_m1_half";
        case Prefactor::Phi0_3Half: return "phi_0_3_half";
    }
    return "";
}

}  // namespace

std::string BasisMonomial::name() const {
    std::string out;
    const auto append = [&out](const std::string& part) {
        if (part.empty()) return;
        if (!out.empty()) out += "*";
        out += part;
    };
    append(power_name("E4", a));
    append(power_name("E6", b));
    append(power_name("phi_m2_1", c));
    append(power_name("phi_0_1", d));
    append(prefactor_name(prefactor));
    return out.empty() ? "1" : out;
}

JacobiBasis basis(std::int64_t weight2, std::int64_t index2) {
    if (weight2 % 2 != 0)
        throw std::invalid_argument(
            "basis enumeration requires an integer weight (even weight2)");
    JacobiBasis out{weight2, index2, {}};
    if (index2 < 0) return out;

    Prefactor pre = Prefactor::None;
    std::int64_t rw2 = weight2;
    std::int64_t ri2 = index2;
    const bool odd_weight = ((weight2 % 4) + 4) % 4 == 2;
    const bool half_index = index2 % 2 != 0;
    if (odd_weight && !half_index) {
        pre = Prefactor::PhiM1_2;
        rw2 += 2;
        ri2 -= 4;
    } else if (odd_weight && half_index) {
        pre = Prefactor::PhiM1Half;
        rw2 += 2;
        ri2 -= 1;
    } else if (!odd_weight && half_index) {
        pre = Prefactor::Phi0_3Half;
        ri2 -= 3;
    }
    if (ri2 < 0) return out;

    const std::int64_t m = ri2 / 2;
    for (std::int64_t c = 0; c <= m; ++c) {
        const std::int64_t rhs = rw2 + 4 * c;  // 8a + 12b
        if (rhs < 0) continue;
        for (std::int64_t b = 0; 12 * b <= rhs; ++b) {
            const std::int64_t rem = rhs - 12 * b;
            if (rem % 8 != 0) continue;
            out.monomials.push_back({rem / 8, b, c, m - c, pre});
        }
    }
    std::sort(out.monomials.begin(), out.monomials.end(),
              [](const BasisMonomial& x, const BasisMonomial& y) {
                  return std::tie(x.a, x.b, x.c, x.d) >
                         std::tie(y.a, y.b, y.c, y.d);
              });
    return out;
}

QZSeries monomial_series(const BasisMonomial& mon, std::int64_t trunc24) {
    QZSeries s = make_monomial(0, 0, 1, 0, 0, trunc24);
    if (mon.a > 0) s = mul(s, pow(form("e4", trunc24), static_cast<unsigned>(mon.a)));
    if (mon.b > 0) s = mul(s, pow(form("e6", trunc24), static_cast<unsigned>(mon.b)));
    if (mon.c > 0) s = mul(s, pow(form("phi_m2_1", trunc24), static_cast<unsigned>(mon.c)));
    if (mon.d > 0) s = mul(s, pow(form("phi_0_1", trunc24), static_cast<unsigned>(mon.d)));
    switch (mon.prefactor) {
        case Prefactor::None: break;
        case Prefactor::PhiM1_2: s = mul(s, form("phi_m1_2", trunc24)); break;
        case Prefactor::PhiM1Half: s = mul(s, form("phi_m1_half", trunc24)); break;
        case Prefactor::Phi0_3Half: s = mul(s, form("phi_0_3_half", trunc24)); break;
    }
    return restrict_trunc(s, trunc24);
}

std::vector<std::pair<std::int64_t, std::int64_t>> modular_monomials(
    std::int64_t weight2) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& mon : basis(weight2, 0).monomials)
        out.emplace_back(mon.a, mon.b);
    return out;
}

std::int64_t vanishing_bound(std::int64_t weight2, std::int64_t index2) {
    std::int64_t t = 0;
    while (!basis(weight2 - 24 * t, index2).empty()) ++t;
    return t;
}

ZeroCertificate certify_zero(const QZSeries& phi, int eta_shift24) {
    if (eta_shift24 < 0)
        throw std::invalid_argument("negative eta shift");
    const std::int64_t reduced_w2 = phi.weight2() - eta_shift24;
    if (reduced_w2 % 2 != 0)
        throw std::invalid_argument(
            "certificate requires an integer-weight eta reduction");
    const std::int64_t t0 = vanishing_bound(reduced_w2, phi.index2());
    ZeroCertificate cert;
    cert.weight2 = phi.weight2();
    cert.index2 = phi.index2();
    cert.required_bound24 = 24 * t0 + eta_shift24;
    if (!phi.empty()) {
        cert.verdict = ZeroCertificate::Verdict::NotZero;
        cert.vanish_order24 = phi.ord24();
    } else if (phi.trunc24() < cert.required_bound24) {
        cert.verdict = ZeroCertificate::Verdict::Inconclusive;
        cert.vanish_order24 = phi.trunc24();
    } else {
        cert.verdict = ZeroCertificate::Verdict::CertifiedZero;
        cert.vanish_order24 = phi.trunc24();
    }
    return cert;
}

std::vector<Rational> coordinates(const QZSeries& phi) {
    if (phi.quasi())
        throw std::invalid_argument(
            "coordinates are defined for non-quasi forms only");
    const JacobiBasis b = basis(phi.weight2(), phi.index2());
    const std::int64_t t0 = vanishing_bound(phi.weight2(), phi.index2());
    if (phi.trunc24() < 24 * t0 + 1)
        throw UnderdeterminedError(
            "truncation below the determination bound (need q-slices 0.." +
            std::to_string(t0) + ")");
    if (b.empty()) {
        if (phi.empty()) return {};
        throw NotInSpanError("nonzero series in an empty space");
    }

    const std::int64_t trunc = phi.trunc24();
    std::vector<QZSeries> mons;
    mons.reserve(b.dimension());
    for (const auto& mon : b.monomials) mons.push_back(monomial_series(mon, trunc));

    std::set<TermKey> keys;
    const auto collect = [&keys, t0](const QZSeries& s) {
        for (const auto& [key, c] : s.terms()) {
            if (key.n24 > 24 * t0) break;
            keys.insert(key);
        }
    };
    collect(phi);
    for (const auto& m : mons) collect(m);

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (const auto& key : keys) {
        std::vector<Rational> row;
        row.reserve(mons.size());
        for (const auto& m : mons) row.push_back(m.coeff(key.n24, key.l2));
        rows.push_back(std::move(row));
        rhs.push_back(phi.coeff(key.n24, key.l2));
    }

    const LinearSystemSolution sol = solve_exact(rows, rhs);
    if (!sol.consistent)
        throw NotInSpanError("q-slices are not a combination of the basis");
    if (!sol.nullspace.empty())
        throw UnderdeterminedError("coefficient matrix is rank-deficient");

    // Defense in depth: the solved combination must reproduce phi on every
    // computed slice, not just the ones that entered the system.
    QZSeries recon = QZSeries::zero(phi.weight2(), phi.index2(), trunc);
    for (std::size_t j = 0; j < mons.size(); ++j)
        recon = add(recon, mons[j], 1, sol.particular[j]);
    if (!(recon == phi.with_quasi(false)))
        throw NotInSpanError("series deviates from the basis span beyond the "
                             "determination slices");
    return sol.particular;
}

}  // namespace wjf
