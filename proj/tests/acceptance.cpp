// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Usage: wjf_acceptance [path-to-cli-binary]

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wjf/catalog.hpp"
#include "wjf/cli.hpp"
#include "wjf/mde.hpp"
#include "wjf/operators.hpp"
#include "wjf/render.hpp"

using namespace wjf;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw CheckFailure(what);
}

Slice sym(std::vector<std::pair<std::int64_t, Rational>> terms) {
    Slice s;
    for (const auto& [l2, c] : terms) {
        if (c == 0) continue;
        s[l2] = c;
        if (l2 != 0) s[-l2] = c;
    }
    return s;
}

QZSeries F(const std::string& name, int q_order) {
    return form(name, 24 * q_order);
}

void criterion_generator_expansions() {
    const QZSeries pm = F("phi_m2_1", 2);
    require(q_slice(pm, 0) == sym({{2, 1}, {0, -2}}), "phi_m2_1 q^0");
    require(q_slice(pm, 24) == sym({{4, -2}, {2, 8}, {0, -12}}), "phi_m2_1 q^1");

    const QZSeries p1 = F("phi_0_1", 2);
    require(q_slice(p1, 0) == sym({{2, 1}, {0, 10}}), "phi_0_1 q^0");
    require(q_slice(p1, 24) == sym({{4, 10}, {2, -64}, {0, 108}}),
            "phi_0_1 q^1");

    const QZSeries p2 = F("phi_0_2", 2);
    require(q_slice(p2, 0) == sym({{2, 1}, {0, 4}}), "phi_0_2 q^0");
    require(q_slice(p2, 24) == sym({{6, 1}, {4, -8}, {2, -1}, {0, 16}}),
            "phi_0_2 q^1");

    // phi_0_3 at q^1: the zeta^{+-3} coefficient is -2; the +2 variant is
    // inconsistent with the ring relation, the quintuple product, and the
    // degree-1 heat equation for phi_0_3_half.
    const QZSeries p3 = F("phi_0_3", 2);
    require(q_slice(p3, 0) == sym({{2, 1}, {0, 2}}), "phi_0_3 q^0");
    require(q_slice(p3, 24) == sym({{6, -2}, {4, -2}, {2, 2}, {0, 4}}),
            "phi_0_3 q^1");

    const QZSeries p4 = F("phi_0_4", 2);
    require(q_slice(p4, 0) == sym({{2, 1}, {0, 1}}), "phi_0_4 q^0");
    require(q_slice(p4, 24) == sym({{8, -1}, {6, -1}, {2, 1}, {0, 2}}),
            "phi_0_4 q^1");

    require(q_slice(F("phi_0_5_half", 2), 0) == sym({{3, 1}, {1, 11}}),
            "CY5 genus q^0");
}

void criterion_ledger() {
    const auto& entries = ledger();
    require(entries.size() >= 24, "ledger has at least 24 entries");
    for (const auto& e : entries) {
        const VerifyResult r = verify_equation(e, 24 * 12);
        require(r.status == VerifyStatus::Pass, e.id + " passes");
        require(r.certificate.certified(), e.id + " certificate");
    }
    for (const auto* id :
         {"deq:CY3", "deq:K3", "deq:CY5", "deq:K3-expanded",
          "deq:CY5-expanded", "deq:KZ-E4", "deq:E4_1", "deq:phi_m2_1",
          "deq:theta_sq", "deq:theta_theta2z", "deq:theta_cube",
          "deq:theta_sq_theta2z", "deq:theta_pow4", "deq:phi_0_2",
          "deq:psi_0_2", "deq:rho_0_2", "deq:phi_0_3",
          "id:phi_0_3_cusp_remainder", "deq:phi_0_4", "id:D4_E4", "id:D6_E6",
          "id:eta_kernel", "id:heat_theta", "id:heat_eta_phi_0_3_half"})
        require(find_ledger_entry(id) != nullptr,
                std::string("ledger contains ") + id);
}

void criterion_discovery() {
    struct Expect {
        const char* name;
        int degree;
        std::vector<std::vector<Rational>> coeffs;
    };
    const std::vector<Expect> table = {
        {"phi_0_3_half", 1, {}},
        {"phi_m2_1", 2, {{frac(-5, 4)}}},
        {"theta_sq", 2, {{frac(-5, 4)}}},
        {"theta_cube", 2, {{Rational(-3)}}},
        {"phi_0_1", 3, {{frac(-101, 4)}, {Rational(10)}}},
        {"phi_0_5_half", 3, {{frac(-611, 25)}, {frac(88, 25)}}},
        {"phi_0_2", 3, {{frac(-47, 4)}, {frac(13, 4)}}},
        {"psi_0_2", 3, {{frac(-263, 4)}, {frac(121, 4)}}},
        {"rho_0_2", 3, {{frac(-335, 4)}, {frac(-275, 4)}}},
        {"phi_0_4", 3, {{frac(-107, 16)}, {frac(23, 32)}}},
        {"phi_0_3", 4, {{frac(-29, 2)}, {Rational(22)}, {frac(-119, 16)}}},
    };
    for (const auto& e : table) {
        const DiscoveryOutcome out = discover(e.name, e.degree, 24 * 12);
        require(out.equation.has_value(), std::string(e.name) + " found");
        require(out.equation->degree == e.degree,
                std::string(e.name) + " minimal degree");
        require(out.equation->coeffs == e.coeffs,
                std::string(e.name) + " ledger coefficients");
        require(out.equation->unique && out.extra_solutions.empty(),
                std::string(e.name) + " unique monic solution");
        require(out.equation->certificate.certified(),
                std::string(e.name) + " certificate");
        require(out.infeasible.size() == static_cast<std::size_t>(e.degree - 1),
                std::string(e.name) + " lower degrees infeasible");
    }
}

void criterion_generic_existence() {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 20; ++trial) {
        const long long x = static_cast<long long>(rng() % 13) - 6;
        const long long y = static_cast<long long>(rng() % 13) - 6;
        if (x == 0 && y == 0) continue;
        const QZSeries phi = add(F("phi_0_2", 8), F("psi_0_2", 8), frac(x), frac(y));
        const DiscoveryOutcome out = discover_series(phi, 0, 5);
        require(out.equation.has_value() &&
                    out.equation->certificate.certified(),
                "degree <= 5 for random index-2 form");
    }
    const JacobiBasis b3 = basis(0, 6);
    std::vector<QZSeries> gens;
    for (const auto& m : b3.monomials) gens.push_back(monomial_series(m, 24 * 8));
    int done = 0;
    while (done < 5) {
        QZSeries phi = QZSeries::zero(0, 6, 24 * 8);
        bool nonzero = false;
        for (const auto& g : gens) {
            const long long c = static_cast<long long>(rng() % 9) - 4;
            nonzero = nonzero || c != 0;
            phi = add(phi, g, 1, frac(c));
        }
        if (!nonzero) continue;
        const DiscoveryOutcome out = discover_series(phi, 0, 7);
        require(out.equation.has_value() &&
                    out.equation->certificate.certified() &&
                    out.equation->degree <= 7,
                "degree <= 7 for random index-3 form");
        ++done;
    }
}

void criterion_properties() {
    const int q = 4;
    // Leibniz rule over modular x Jacobi catalog pairs
    std::vector<std::string> jacobi_forms;
    for (const auto& entry : catalog_entries())
        if (entry.index2 > 0) jacobi_forms.push_back(entry.name);
    // Leibniz rule over every (modular, Jacobi) catalog pair
    for (const auto* fn : {"e4", "e6", "e8", "e10", "e14", "delta", "eta"})
        for (const auto& pn : jacobi_forms) {
            const QZSeries f = F(fn, q), p = F(pn, q);
            const QZSeries lhs = heat_k(mul(f, p), f.weight2() + p.weight2());
            const QZSeries rhs =
                add(scaled(mul(serre(f, f.weight2()), p), 12),
                    mul(f, heat_k(p, p.weight2())), 1, 1);
            const std::int64_t t = std::min(lhs.trunc24(), rhs.trunc24());
            require(restrict_trunc(lhs, t) == restrict_trunc(rhs, t),
                    std::string("Leibniz for ") + fn + "*" + pn);
        }
    // eta pull-through over every Jacobi catalog form
    for (const unsigned n : {3u, 6u, 9u, 12u, 18u, 24u})
        for (const auto& pn : jacobi_forms) {
            const QZSeries p = F(pn, q);
            const QZSeries en = pow(eta(24 * q), n);
            const QZSeries lhs = heat_k(
                mul(en, p), static_cast<std::int64_t>(n) + p.weight2());
            const QZSeries rhs = mul(en, heat_k(p, p.weight2()));
            const std::int64_t t = std::min(lhs.trunc24(), rhs.trunc24());
            require(restrict_trunc(lhs, t) == restrict_trunc(rhs, t),
                    "eta pull-through");
        }
    // heat multiplier and q^0 formula on every Jacobi catalog form
    require(heat(F("theta", q)).empty(), "theta in the heat kernel");
    for (const auto& name : jacobi_forms) {
        const QZSeries phi = F(name, q);
        const QZSeries h = heat(phi);
        for (const auto& [key, c] : phi.terms())
            require(h.coeff(key.n24, key.l2) ==
                        c * frac(key.n24 * phi.index2() - 3 * key.l2 * key.l2,
                                 2 * phi.index2()),
                    "heat multiplier");
        Slice expect;
        for (const auto& [l2, c] : q_slice(phi, 0)) {
            const Rational mult = frac(-3 * l2 * l2, 2 * phi.index2()) -
                                  frac(phi.weight2() - 1, 2);
            if (mult * c != 0) expect[l2] = mult * c;
        }
        require(q_slice(heat_k(phi, phi.weight2()), 0) == expect,
                "q^0 slice formula");
    }
    // index-translation symmetry (integral-index, character-free forms)
    for (const auto* name : {"phi_0_1", "phi_0_2", "phi_0_3", "phi_0_4",
                             "psi_0_2", "rho_0_2", "e4_1", "phi_m2_1",
                             "phi_m1_2", "phi_10_1", "phi_12_1"}) {
        const QZSeries s = F(name, 6);
        for (const auto& [key, c] : s.terms())
            for (const std::int64_t lam : {-1, 1, 2}) {
                const std::int64_t n24 =
                    key.n24 + 12 * lam * key.l2 + 12 * lam * lam * s.index2();
                const std::int64_t l2 = key.l2 + 2 * lam * s.index2();
                if (n24 < 0 || n24 >= s.trunc24()) continue;
                require(s.coeff(n24, l2) == c, "index translation symmetry");
            }
    }
    // ring relation
    const QZSeries p2 = F("phi_0_2", 8);
    require(add(mul(F("phi_0_1", 8), F("phi_0_3", 8)), mul(p2, p2), 1, -1) ==
                scaled(F("phi_0_4", 8), 4),
            "4 phi_0_4 = phi_0_1 phi_0_3 - phi_0_2^2");
    // theta: sum vs product
    for (int a = 1; a <= 3; ++a) {
        const std::int64_t t = 24 * 8;
        TermMap seed;
        seed.emplace(TermKey{3, a}, Rational(1));
        seed.emplace(TermKey{3, -a}, Rational(-1));
        QZSeries prod(1, a * a, t, false, std::move(seed));
        for (std::int64_t n = 1; 24 * n < t; ++n) {
            TermMap f1, f2, f3;
            f1.emplace(TermKey{0, 0}, Rational(1));
            f1.emplace(TermKey{24 * n, 2 * a}, Rational(-1));
            f2.emplace(TermKey{0, 0}, Rational(1));
            f2.emplace(TermKey{24 * n, -2 * a}, Rational(-1));
            f3.emplace(TermKey{0, 0}, Rational(1));
            f3.emplace(TermKey{24 * n, 0}, Rational(-1));
            prod = mul(prod, QZSeries(0, 0, t, false, std::move(f1)));
            prod = mul(prod, QZSeries(0, 0, t, false, std::move(f2)));
            prod = mul(prod, QZSeries(0, 0, t, false, std::move(f3)));
        }
        require(restrict_trunc(prod, t) == theta(a, t),
                "theta sum = theta product");
    }
    // quintuple product expansion of eta * phi_0_3_half
    {
        const std::int64_t t = 24 * 12;
        TermMap terms;
        for (std::int64_t n = 1; n * n < t; ++n) {
            const std::int64_t r = n % 12;
            const int sym12 = (r == 1 || r == 11) ? 1
                              : (r == 5 || r == 7) ? -1
                                                   : 0;
            if (sym12 == 0) continue;
            terms.emplace(TermKey{n * n, n}, Rational(sym12));
            terms.emplace(TermKey{n * n, -n}, Rational(sym12));
        }
        require(mul(eta(t), form("phi_0_3_half", t)) ==
                    QZSeries(1, 3, t, false, std::move(terms)),
                "quintuple-product expansion");
    }
    // coordinate round trips
    for (const auto* name : {"phi_0_2", "psi_0_2", "phi_0_4", "e4_1",
                             "phi_12_1", "phi_0_5_half"}) {
        const QZSeries s = F(name, 4);
        const auto coords = coordinates(s);
        const JacobiBasis b = basis(s.weight2(), s.index2());
        QZSeries recon = QZSeries::zero(s.weight2(), s.index2(), s.trunc24());
        for (std::size_t j = 0; j < coords.size(); ++j)
            recon = add(recon, monomial_series(b.monomials[j], s.trunc24()), 1,
                        coords[j]);
        require(recon == s, std::string("coordinates round trip: ") + name);
    }
    // integrality of the Z-generators to q-order 20
    for (const auto* name : {"phi_0_1", "phi_0_2", "phi_0_3", "phi_0_4",
                             "phi_0_3_half"}) {
        const QZSeries s = F(name, 20);
        for (const auto& [key, c] : s.terms())
            require(is_integer(c), std::string("integrality: ") + name);
    }
}

void criterion_genus() {
    const GenusResult k3 = elliptic_genus({2, Rational(24), {}}, 24 * 6);
    require(k3.series == scaled(F("phi_0_1", 6), 2), "K3 genus = 2 phi_0_1");

    const GenusResult cy3 = elliptic_genus({3, Rational(7), {}}, 24 * 4);
    require(cy3.series == scaled(F("phi_0_3_half", 4), frac(7, 2)),
            "CY3 genus = e/2 phi_0_3_half");
    const GenusResult cy5 = elliptic_genus({5, Rational(48), {}}, 24 * 4);
    require(cy5.series == scaled(F("phi_0_5_half", 4), 2),
            "CY5 genus = e/24 phi_0_5_half");

    const GenusResult warn = elliptic_genus({5, Rational(23), {}}, 24 * 4);
    require(!warn.integral && !warn.warnings.empty(),
            "non-integrality warning for e(CY5) = 23");

    // d = 4 round trip over basis(0,2) and rejection of inconsistent data
    const JacobiBasis b = basis(0, 4);
    for (const auto& mon : b.monomials) {
        const QZSeries m = monomial_series(mon, 24 * 4);
        std::vector<Rational> chi(5, Rational(0));
        for (int p = 0; p <= 4; ++p)
            chi[static_cast<std::size_t>(p)] =
                (p % 2 == 0 ? 1 : -1) * m.coeff(0, 4 - 2 * p);
        const GenusResult res = elliptic_genus({4, {}, chi}, 24 * 4);
        require(res.series == m, "d=4 genus round trip");
    }
    bool rejected = false;
    try {
        elliptic_genus({4, {}, std::vector<Rational>{1, 0, 23, 0, 1}}, 24 * 4);
    } catch (const InconsistentHodgeError&) {
        rejected = true;
    }
    require(rejected, "inconsistent chi data rejected");
}

std::string capture_cli(const std::string& cli_path,
                        const std::string& args) {
    if (cli_path.empty()) {
        // in-process fallback
        std::istringstream split(args);
        std::vector<std::string> argv;
        std::string a;
        while (split >> a) argv.push_back(a);
        std::ostringstream out, err;
        cli::run(argv, out, err);
        return out.str();
    }
    const std::string cmd = cli_path + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "popen " + cmd);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    require(status == 0, "exit status of " + cmd);
    return out;
}

void criterion_determinism(const std::string& cli_path) {
    const std::string args = "verify --all --json --q-order 12";
    const std::string first = capture_cli(cli_path, args);
    const std::string second = capture_cli(cli_path, args);
    require(!first.empty(), "verify --all --json produced output");
    require(first == second, "two runs are byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";
    int failures = 0;
    const auto run = [&failures](int num, const char* label,
                                 const std::function<void()>& body) {
        try {
            body();
            std::printf("[PASS] criterion %d: %s\n", num, label);
        } catch (const std::exception& e) {
            std::printf("[FAIL] criterion %d: %s -- %s\n", num, label,
                        e.what());
            ++failures;
        }
        std::fflush(stdout);
    };

    run(1, "generator expansions at q^0 and q^1 (exact)",
        criterion_generator_expansions);
    run(2, "ledger verification: all entries certified at q-order 12",
        criterion_ledger);
    run(3, "discovery reproduces ledger coefficients at minimal degree",
        criterion_discovery);
    run(4, "generic degree-5/7 existence for random index-2/3 forms",
        criterion_generic_existence);
    run(5, "property suites (Leibniz, pull-through, symmetries, oracles)",
        criterion_properties);
    run(6, "elliptic genus normalizations, warnings, round trips",
        criterion_genus);
    run(7, "determinism: verify --all --json is byte-stable",
        [&] { criterion_determinism(cli_path); });

    if (failures != 0)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
