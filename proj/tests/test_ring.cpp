#include <doctest.h>

#include <random>
#include <set>

#include "test_util.hpp"
#include "wjf/linalg.hpp"
#include "wjf/operators.hpp"
#include "wjf/ring.hpp"

using namespace wjf;
using testutil::F;

namespace {

std::vector<std::string> monomial_names(const JacobiBasis& b) {
    std::vector<std::string> out;
    for (const auto& m : b.monomials) out.push_back(m.name());
    return out;
}

}  // namespace

TEST_CASE("basis enumeration") {
    // J_{0,2}
    CHECK(monomial_names(basis(0, 4)) ==
          std::vector<std::string>{"E4*phi_m2_1^2", "phi_0_1^2"});
    // J_{-6,1} is trivial
    CHECK(basis(-12, 2).empty());
    // J_{2,5/2} is one-dimensional
    CHECK(monomial_names(basis(4, 5)) ==
          std::vector<std::string>{"E4*phi_m2_1*phi_0_3_half"});
    // J_{0,3}
    CHECK(monomial_names(basis(0, 6)) ==
          std::vector<std::string>{"E4*phi_m2_1^2*phi_0_1", "E6*phi_m2_1^3",
                                   "phi_0_1^3"});
    // modular forms sit at index 0
    CHECK(monomial_names(basis(0, 0)) == std::vector<std::string>{"1"});
    CHECK(basis(4, 0).empty());   // M_2 = {0}
    CHECK(monomial_names(basis(24, 0)) ==
          std::vector<std::string>{"E4^3", "E6^2"});
    // the structure-theorem answer for weight 2, index 2
    CHECK(monomial_names(basis(4, 4)) ==
          std::vector<std::string>{"E4*phi_m2_1*phi_0_1", "E6*phi_m2_1^2"});
    // odd weight reductions
    CHECK(monomial_names(basis(2, 8)) ==
          std::vector<std::string>{"E4*phi_m2_1*phi_0_1*phi_m1_2",
                                   "E6*phi_m2_1^2*phi_m1_2"});
    CHECK(monomial_names(basis(2, 3)) ==
          std::vector<std::string>{"E4*phi_m2_1*phi_m1_half"});
    CHECK(basis(2, 2).empty());  // J_{1,1} = phi_m1_2 * J_{2,-1}
    CHECK_THROWS_AS(basis(1, 2), std::invalid_argument);
}

TEST_CASE("basis monomials have the right bidegree") {
    for (const auto& [w2, i2] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {0, 4}, {0, 6}, {4, 5}, {2, 3}, {20, 4}, {-12, 6}}) {
        const JacobiBasis b = basis(w2, i2);
        for (const auto& mon : b.monomials) {
            const QZSeries s = monomial_series(mon, 48);
            CHECK(s.weight2() == w2);
            CHECK(s.index2() == i2);
        }
    }
}

TEST_CASE("vanishing bound") {
    CHECK(vanishing_bound(12, 2) == 1);   // weight 6, index 1
    CHECK(vanishing_bound(20, 4) == 2);   // weight 10, index 2
    CHECK(vanishing_bound(0, 0) == 1);    // constants
    CHECK(vanishing_bound(4, 3) == 0);    // J_{2,3/2} is already empty
    CHECK(vanishing_bound(28, 6) == 2);   // weight 14, index 3
    // monotone in Delta-steps wherever the base space is nonempty (spaces
    // that are empty at every weight of a parity class, like J_{odd,1},
    // have bound 0 throughout)
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        const std::int64_t w2 = 2 * (static_cast<std::int64_t>(rng() % 17) - 4);
        const std::int64_t i2 = static_cast<std::int64_t>(rng() % 7);
        const std::int64_t s = static_cast<std::int64_t>(rng() % 3);
        if (basis(w2, i2).empty()) continue;
        CHECK(vanishing_bound(w2 + 24 * s, i2) == vanishing_bound(w2, i2) + s);
    }
}

TEST_CASE("coordinates of catalog forms") {
    const auto c2 = coordinates(F("phi_0_2", 4));
    CHECK(c2 == std::vector<Rational>{frac(-1, 24), frac(1, 24)});
    const auto cpsi = coordinates(F("psi_0_2", 4));
    CHECK(cpsi == std::vector<Rational>{frac(5, 6), frac(1, 6)});
    const auto ce4 = coordinates(F("e4", 4));
    CHECK(ce4 == std::vector<Rational>{Rational(1)});

    // every catalog Jacobi form with trivial character sits in its own space
    for (const auto& entry : catalog_entries()) {
        if (entry.eta_shift24 != 0 || entry.name == "e2") continue;
        const QZSeries s = form(entry.name, 24 * 4);
        const auto coords = coordinates(s);
        const JacobiBasis b = basis(s.weight2(), s.index2());
        QZSeries recon = QZSeries::zero(s.weight2(), s.index2(), s.trunc24());
        for (std::size_t j = 0; j < coords.size(); ++j)
            recon = add(recon, monomial_series(b.monomials[j], s.trunc24()), 1,
                        coords[j]);
        CHECK(recon == s);
    }
}

TEST_CASE("coordinates error paths") {
    CHECK_THROWS_AS(coordinates(F("e2", 4)), std::invalid_argument);
    // deviation beyond the determination slices is caught by re-expansion
    const QZSeries p2 = F("phi_0_2", 4);
    const QZSeries spoiled =
        add(p2, make_monomial(72, 0, 1, 0, 4, p2.trunc24()), 1, 1);
    CHECK_THROWS_AS(coordinates(spoiled), NotInSpanError);
    // truncation below the determination bound
    CHECK_THROWS_AS(coordinates(restrict_trunc(p2, 20)), UnderdeterminedError);
    // nonzero series in an empty space
    CHECK_THROWS_AS(coordinates(make_monomial(0, 0, 1, -12, 2, 48)),
                    NotInSpanError);
}

TEST_CASE("certify_zero verdicts") {
    const QZSeries zero_big = QZSeries::zero(12, 2, 24 * 2);
    const ZeroCertificate ok = certify_zero(zero_big);
    CHECK(ok.certified());
    CHECK(ok.required_bound24 == 24);

    const ZeroCertificate short_cert = certify_zero(QZSeries::zero(12, 2, 12));
    CHECK(short_cert.verdict == ZeroCertificate::Verdict::Inconclusive);

    const QZSeries nz = mul(F("e4", 2), F("phi_m2_1", 2));
    CHECK(certify_zero(nz).verdict == ZeroCertificate::Verdict::NotZero);

    CHECK_THROWS_AS(certify_zero(QZSeries::zero(5, 2, 48)),
                    std::invalid_argument);
    CHECK(certify_zero(QZSeries::zero(5, 2, 48), 3).certified());
}

TEST_CASE("degree-3 remainder for phi_0_3 is 60 Delta phi_m2_1^3") {
    const std::int64_t t = 24 * 6;
    const auto ch = iterate_heat(form("phi_0_3", t), 0, 3);
    QZSeries lhs = add(ch.psi(3), mul(form("e4", t), ch.psi(1)), 1, frac(-33, 4));
    lhs = add(lhs, mul(form("e6", t), ch.psi(0)), 1, frac(3, 2));
    const QZSeries rhs = mul(form("delta", t), pow(form("phi_m2_1", t), 3));
    CHECK(lhs == scaled(rhs, 60));

    const ZeroCertificate cert = certify_zero(lhs);
    CHECK(cert.verdict == ZeroCertificate::Verdict::NotZero);
    CHECK(cert.vanish_order24 == 24);  // first nonzero slice at q^1
}

TEST_CASE("cusp subspaces J_{6,3}(q) and J_{8,3}(q) are one-dimensional") {
    // nullity of the q^0-restriction on basis(w2, 6)
    const auto q0_nullity = [](std::int64_t w2) {
        const JacobiBasis b = basis(w2, 6);
        std::vector<QZSeries> mons;
        for (const auto& m : b.monomials) mons.push_back(monomial_series(m, 48));
        std::set<std::int64_t> ls;
        for (const auto& m : mons)
            for (const auto& [l2, c] : q_slice(m, 0)) ls.insert(l2);
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (const auto l2 : ls) {
            std::vector<Rational> row;
            for (const auto& m : mons) row.push_back(m.coeff(0, l2));
            rows.push_back(std::move(row));
            rhs.push_back(0);
        }
        return solve_exact(rows, rhs).nullspace.size();
    };
    CHECK(q0_nullity(12) == 1);
    CHECK(q0_nullity(16) == 1);

    // and the kernels are spanned by Delta phi_m2_1^3, Delta phi_m2_1^2 phi_0_1
    const std::int64_t t = 24 * 4;
    CHECK(coordinates(restrict_trunc(
              mul(form("delta", t), pow(form("phi_m2_1", t), 3)), t))
              .size() == basis(12, 6).dimension());
    CHECK(coordinates(restrict_trunc(
              mul(form("delta", t),
                  mul(pow(form("phi_m2_1", t), 2), form("phi_0_1", t))), t))
              .size() == basis(16, 6).dimension());
}

TEST_CASE("certify_zero soundness on random combinations") {
    std::mt19937_64 rng(424242);
    const JacobiBasis b = basis(12, 6);
    REQUIRE(b.dimension() >= 2);
    std::vector<QZSeries> mons;
    for (const auto& m : b.monomials) mons.push_back(monomial_series(m, 24 * 3));
    for (int trial = 0; trial < 100; ++trial) {
        QZSeries combo = QZSeries::zero(12, 6, 24 * 3);
        bool nonzero = false;
        for (const auto& m : mons) {
            const long long num = static_cast<long long>(rng() % 21) - 10;
            const long long den = 1 + static_cast<long long>(rng() % 6);
            nonzero = nonzero || num != 0;
            combo = add(combo, m, 1, frac(num, den));
        }
        const ZeroCertificate cert = certify_zero(combo);
        if (nonzero)
            CHECK(cert.verdict == ZeroCertificate::Verdict::NotZero);
        else
            CHECK(cert.certified());
    }
}
