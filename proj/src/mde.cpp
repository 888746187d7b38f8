#include "wjf/mde.hpp"

#include <set>

#include "wjf/catalog.hpp"
#include "wjf/linalg.hpp"

namespace wjf {

namespace {

using Checks = std::vector<LedgerCheck>;

Checks one(QZSeries s, int shift = 0) {
    return {LedgerCheck{std::move(s), shift}};
}

QZSeries e4e6_monomial(std::int64_t a, std::int64_t b, std::int64_t trunc24) {
    QZSeries s = make_monomial(0, 0, 1, 0, 0, trunc24);
    if (a > 0) s = mul(s, pow(form("e4", trunc24), static_cast<unsigned>(a)));
    if (b > 0) s = mul(s, pow(form("e6", trunc24), static_cast<unsigned>(b)));
    return s;
}

// psi_r + sum c_i * coeff_i * psi_{j_i}
QZSeries chain_combo(
    const OperatorChain& ch,
    const std::vector<std::tuple<int, QZSeries, Rational>>& lower) {
    QZSeries s = ch.produced.back();
    for (const auto& [j, coeff, c] : lower) s = add(s, mul(coeff, ch.psi(j)), 1, c);
    return s;
}

const std::vector<LedgerEntry>& ledger_impl() {
    static const std::vector<LedgerEntry> entries = [] {
        std::vector<LedgerEntry> v;

        v.push_back({"deq:CY3",
                     "H_0(phi_0_3_half) = 0 (degree-1 equation behind the CY3 "
                     "elliptic genus)",
                     [](std::int64_t t) {
                         return one(heat_k(form("phi_0_3_half", t), 0));
                     },
                     "", ""});

        v.push_back({"deq:K3",
                     "H_4 H_2 H_0(phi_0_1) - 101/4 E4 H_0(phi_0_1) + 10 E6 "
                     "phi_0_1 = 0",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("phi_0_1", t), 0, 3);
                         return one(chain_combo(
                             ch, {{1, form("e4", t), frac(-101, 4)},
                                  {0, form("e6", t), 10}}));
                     },
                     "", ""});

        v.push_back(
            {"deq:K3-expanded",
             "K3 equation in plain heat powers: H^3(phi_0_1) - 9/2 E2 "
             "H^2(phi_0_1) + (9/4 E2^2 - 99/4 E4) H(phi_0_1) + (3/8 E2^3 - "
             "99/8 E2 E4 + 12 E6) phi_0_1 = 0",
             [](std::int64_t t) {
                 const QZSeries phi = form("phi_0_1", t);
                 const QZSeries e2 = form("e2", t), e4 = form("e4", t),
                                e6 = form("e6", t);
                 const QZSeries h1 = heat(phi), h2 = heat(h1), h3 = heat(h2);
                 const QZSeries c1 = add(mul(e2, e2), e4, frac(9, 4), frac(-99, 4));
                 const QZSeries c0 =
                     add(add(pow(e2, 3), mul(e2, e4), frac(3, 8), frac(-99, 8)),
                         e6, 1, 12);
                 QZSeries s = add(h3, mul(e2, h2), 1, frac(-9, 2));
                 s = add(s, mul(c1, h1), 1, 1);
                 s = add(s, mul(c0, phi), 1, 1);
                 return one(std::move(s));
             },
             "deq:K3",
             "re-expansion check with quasi-modular coefficients; certificate "
             "inherited from deq:K3"});

        v.push_back({"deq:CY5",
                     "H_4 H_2 H_0(phi_0_5_half) - 611/25 E4 H_0(phi_0_5_half) "
                     "+ 88/25 E6 phi_0_5_half = 0",
                     [](std::int64_t t) {
                         const auto ch =
                             iterate_heat(form("phi_0_5_half", t), 0, 3);
                         return one(chain_combo(
                             ch, {{1, form("e4", t), frac(-611, 25)},
                                  {0, form("e6", t), frac(88, 25)}}));
                     },
                     "", ""});

        v.push_back(
            {"deq:CY5-expanded",
             "CY5 equation in plain heat powers: H^3 - 9/2 E2 H^2 + (9/4 E2^2 "
             "- 1197/50 E4) H + (3/8 E2^3 - 1197/100 E2 E4 + 138/25 E6)",
             [](std::int64_t t) {
                 const QZSeries phi = form("phi_0_5_half", t);
                 const QZSeries e2 = form("e2", t), e4 = form("e4", t),
                                e6 = form("e6", t);
                 const QZSeries h1 = heat(phi), h2 = heat(h1), h3 = heat(h2);
                 const QZSeries c1 =
                     add(mul(e2, e2), e4, frac(9, 4), frac(-1197, 50));
                 const QZSeries c0 = add(
                     add(pow(e2, 3), mul(e2, e4), frac(3, 8), frac(-1197, 100)),
                     e6, 1, frac(138, 25));
                 QZSeries s = add(h3, mul(e2, h2), 1, frac(-9, 2));
                 s = add(s, mul(c1, h1), 1, 1);
                 s = add(s, mul(c0, phi), 1, 1);
                 return one(std::move(s));
             },
             "deq:CY5",
             "re-expansion check with quasi-modular coefficients; certificate "
             "inherited from deq:CY5"});

        v.push_back({"deq:KZ-E4",
                     "Kaneko-Zagier equation at k = 4: D_6 D_4(E4) - 1/6 E4^2 "
                     "= 0",
                     [](std::int64_t t) {
                         const QZSeries e4 = form("e4", t);
                         return one(add(serre(serre(e4, 8), 12), mul(e4, e4), 1,
                                        frac(-1, 6)));
                     },
                     "", ""});

        v.push_back({"deq:E4_1",
                     "H_6 H_4(e4_1) - 77/4 E4 e4_1 = 0",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("e4_1", t), 8, 2);
                         return one(chain_combo(
                             ch, {{0, form("e4", t), frac(-77, 4)}}));
                     },
                     "", ""});

        v.push_back({"deq:phi_m2_1",
                     "H_0 H_-2(phi_m2_1) - 5/4 E4 phi_m2_1 = 0",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("phi_m2_1", t), -4, 2);
                         return one(chain_combo(
                             ch, {{0, form("e4", t), frac(-5, 4)}}));
                     },
                     "", ""});

        v.push_back({"deq:theta_sq",
                     "H_3 H_1(theta^2) - 5/4 E4 theta^2 = 0",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("theta_sq", t), 2, 2);
                         return one(chain_combo(
                                        ch, {{0, form("e4", t), frac(-5, 4)}}),
                                    6);
                     },
                     "", ""});

        v.push_back({"deq:phi_10_1",
                     "H_12 H_10(phi_10_1) - 5/4 E4 phi_10_1 = 0",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("phi_10_1", t), 20, 2);
                         return one(chain_combo(
                             ch, {{0, form("e4", t), frac(-5, 4)}}));
                     },
                     "",
                     "operator weights follow the grading of phi_10_1 (weight "
                     "10), giving the chain H_12 H_10"});

        v.push_back({"deq:phi_12_1",
                     "H_16 H_14 H_12(phi_12_1) - 101/4 E4 H_12(phi_12_1) + 10 "
                     "E6 phi_12_1 = 0",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("phi_12_1", t), 24, 3);
                         return one(chain_combo(
                             ch, {{1, form("e4", t), frac(-101, 4)},
                                  {0, form("e6", t), 10}}));
                     },
                     "", ""});

        v.push_back({"deq:theta_theta2z",
                     "H_3 H_1(theta*theta2z) - 11/25 E4 theta*theta2z = 0",
                     [](std::int64_t t) {
                         const auto ch =
                             iterate_heat(form("theta_theta2z", t), 2, 2);
                         return one(chain_combo(
                                        ch, {{0, form("e4", t), frac(-11, 25)}}),
                                    6);
                     },
                     "", ""});

        v.push_back({"deq:theta_cube",
                     "H_5/2 H_3/2(theta^3) - 3 E4 theta^3 = 0",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("theta_cube", t), 3, 2);
                         return one(chain_combo(
                                        ch, {{0, form("e4", t), -3}}),
                                    9);
                     },
                     "", ""});

        v.push_back({"deq:theta_sq_theta2z",
                     "H_7/2 H_3/2(theta^2*theta2z) - 5/4 E4 theta^2*theta2z = 0",
                     [](std::int64_t t) {
                         const auto ch =
                             iterate_heat(form("theta_sq_theta2z", t), 3, 2);
                         return one(chain_combo(
                                        ch, {{0, form("e4", t), frac(-5, 4)}}),
                                    9);
                     },
                     "", ""});

        v.push_back({"deq:theta_pow4",
                     "H_6 H_4 H_2(theta^4) - 23/4 E4 H_2(theta^4) + 81/4 E6 "
                     "theta^4 = 0",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("theta_pow4", t), 4, 3);
                         return one(chain_combo(
                                        ch, {{1, form("e4", t), frac(-23, 4)},
                                             {0, form("e6", t), frac(81, 4)}}),
                                    12);
                     },
                     "",
                     "chain weights 2, 4, 6 are forced by the grading of "
                     "theta^4 (weight 2)"});

        v.push_back({"deq:phi_m2_1_sq",
                     "H_0 H_-2 H_-4(phi_m2_1^2) - 23/4 E4 H_-4(phi_m2_1^2) + "
                     "81/4 E6 phi_m2_1^2 = 0",
                     [](std::int64_t t) {
                         const auto ch =
                             iterate_heat(pow(form("phi_m2_1", t), 2), -8, 3);
                         return one(chain_combo(
                             ch, {{1, form("e4", t), frac(-23, 4)},
                                  {0, form("e6", t), frac(81, 4)}}));
                     },
                     "", ""});

        v.push_back({"deq:phi_0_2",
                     "H_4 H_2 H_0(phi_0_2) - 47/4 E4 H_0(phi_0_2) + 13/4 E6 "
                     "phi_0_2 = 0",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("phi_0_2", t), 0, 3);
                         return one(chain_combo(
                             ch, {{1, form("e4", t), frac(-47, 4)},
                                  {0, form("e6", t), frac(13, 4)}}));
                     },
                     "", ""});

        v.push_back({"deq:psi_0_2",
                     "H_4 H_2 H_0(psi_0_2) - 263/4 E4 H_0(psi_0_2) + 121/4 E6 "
                     "psi_0_2 = 0",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("psi_0_2", t), 0, 3);
                         return one(chain_combo(
                             ch, {{1, form("e4", t), frac(-263, 4)},
                                  {0, form("e6", t), frac(121, 4)}}));
                     },
                     "", ""});

        v.push_back({"deq:rho_0_2",
                     "H_4 H_2 H_0(rho_0_2) - 335/4 E4 H_0(rho_0_2) - 275/4 E6 "
                     "rho_0_2 = 0",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("rho_0_2", t), 0, 3);
                         return one(chain_combo(
                             ch, {{1, form("e4", t), frac(-335, 4)},
                                  {0, form("e6", t), frac(-275, 4)}}));
                     },
                     "", ""});

        v.push_back({"deq:phi_0_3",
                     "H_6 H_4 H_2 H_0(phi_0_3) - 29/2 E4 H_2 H_0(phi_0_3) + 22 "
                     "E6 H_0(phi_0_3) - 119/16 E8 phi_0_3 = 0",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("phi_0_3", t), 0, 4);
                         return one(chain_combo(
                             ch, {{2, form("e4", t), frac(-29, 2)},
                                  {1, form("e6", t), 22},
                                  {0, form("e8", t), frac(-119, 16)}}));
                     },
                     "", ""});

        v.push_back({"id:phi_0_3_cusp_remainder",
                     "H_4 H_2 H_0(phi_0_3) - 33/4 E4 H_0(phi_0_3) + 3/2 E6 "
                     "phi_0_3 = 60 Delta phi_m2_1^3",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("phi_0_3", t), 0, 3);
                         QZSeries s = chain_combo(
                             ch, {{1, form("e4", t), frac(-33, 4)},
                                  {0, form("e6", t), frac(3, 2)}});
                         const QZSeries cusp =
                             mul(form("delta", t), pow(form("phi_m2_1", t), 3));
                         return one(add(s, cusp, 1, -60));
                     },
                     "",
                     "the degree-3 attempt for phi_0_3 leaves a cusp-form "
                     "remainder, so its minimal equation has degree 4"});

        v.push_back({"deq:phi_0_4",
                     "H_4 H_2 H_0(phi_0_4) - 107/16 E4 H_0(phi_0_4) + 23/32 E6 "
                     "phi_0_4 = 0",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("phi_0_4", t), 0, 3);
                         return one(chain_combo(
                             ch, {{1, form("e4", t), frac(-107, 16)},
                                  {0, form("e6", t), frac(23, 32)}}));
                     },
                     "", ""});

        v.push_back({"id:D4_E4",
                     "D_4(E4) = -1/3 E6",
                     [](std::int64_t t) {
                         return one(add(serre(form("e4", t), 8), form("e6", t),
                                        1, frac(1, 3)));
                     },
                     "", ""});

        v.push_back({"id:D6_E6",
                     "D_6(E6) = -1/2 E4^2",
                     [](std::int64_t t) {
                         return one(add(serre(form("e6", t), 12),
                                        pow(form("e4", t), 2), 1, frac(1, 2)));
                     },
                     "", ""});

        v.push_back({"id:eta_kernel",
                     "D_{k/2}(eta^k) = 0 for k = 1..24",
                     [](std::int64_t t) {
                         Checks checks;
                         for (int k = 1; k <= 24; ++k)
                             checks.push_back(
                                 {serre(pow(eta(t), static_cast<unsigned>(k)), k),
                                  k});
                         return checks;
                     },
                     "", ""});

        v.push_back({"id:heat_theta",
                     "H(theta) = 0 (singular weight 1/2)",
                     [](std::int64_t t) { return one(heat(form("theta", t)), 3); },
                     "", ""});

        v.push_back({"id:heat_eta_phi_0_3_half",
                     "H(eta*phi_0_3_half) = 0 (singular weight 1/2)",
                     [](std::int64_t t) {
                         return one(
                             heat(mul(eta(t), form("phi_0_3_half", t))), 1);
                     },
                     "", ""});

        v.push_back({"id:heat_phi_m2_1",
                     "H_-2(phi_m2_1) = -1/2 phi_0_1",
                     [](std::int64_t t) {
                         return one(add(heat_k(form("phi_m2_1", t), -4),
                                        form("phi_0_1", t), 1, frac(1, 2)));
                     },
                     "", ""});

        v.push_back({"id:heat0_phi_0_1",
                     "H_0(phi_0_1) = -5/2 E4 phi_m2_1",
                     [](std::int64_t t) {
                         return one(add(heat_k(form("phi_0_1", t), 0),
                                        mul(form("e4", t), form("phi_m2_1", t)),
                                        1, frac(5, 2)));
                     },
                     "", ""});

        v.push_back({"id:heat2_heat0_phi_0_1",
                     "H_2 H_0(phi_0_1) = 10 E6 phi_m2_1 + 5/4 E4 phi_0_1",
                     [](std::int64_t t) {
                         const auto ch = iterate_heat(form("phi_0_1", t), 0, 2);
                         QZSeries s = add(ch.psi(2),
                                          mul(form("e6", t), form("phi_m2_1", t)),
                                          1, -10);
                         return one(add(s,
                                        mul(form("e4", t), form("phi_0_1", t)),
                                        1, frac(-5, 4)));
                     },
                     "", ""});

        v.push_back({"id:heat0_phi_0_5_half",
                     "H_0(phi_0_5_half) = -11/5 E4 phi_m2_1 phi_0_3_half",
                     [](std::int64_t t) {
                         const QZSeries prod = mul(
                             form("phi_m2_1", t), form("phi_0_3_half", t));
                         return one(add(heat_k(form("phi_0_5_half", t), 0),
                                        mul(form("e4", t), prod), 1,
                                        frac(11, 5)));
                     },
                     "", ""});

        v.push_back({"id:heat_phi_m2_1_phi_0_3_half",
                     "H_-2(phi_m2_1 phi_0_3_half) = -1/5 phi_0_1 phi_0_3_half",
                     [](std::int64_t t) {
                         const QZSeries prod = mul(
                             form("phi_m2_1", t), form("phi_0_3_half", t));
                         const QZSeries rhs = mul(
                             form("phi_0_1", t), form("phi_0_3_half", t));
                         return one(add(heat_k(prod, -4), rhs, 1, frac(1, 5)));
                     },
                     "", ""});

        v.push_back({"id:heat2_heat0_phi_0_5_half",
                     "H_2 H_0(phi_0_5_half) = 44/5 E6 phi_m2_1 phi_0_3_half + "
                     "11/25 E4 phi_0_5_half",
                     [](std::int64_t t) {
                         const auto ch =
                             iterate_heat(form("phi_0_5_half", t), 0, 2);
                         const QZSeries prod = mul(
                             form("phi_m2_1", t), form("phi_0_3_half", t));
                         QZSeries s = add(ch.psi(2), mul(form("e6", t), prod),
                                          1, frac(-44, 5));
                         return one(add(s,
                                        mul(form("e4", t),
                                            form("phi_0_5_half", t)),
                                        1, frac(-11, 25)));
                     },
                     "", ""});

        v.push_back({"id:heat_powers_phi_m2_1",
                     "H_-2n(phi_m2_1^n) = (1/2 - n) phi_m2_1^(n-1) phi_0_1 for "
                     "n = 2, 3, 4",
                     [](std::int64_t t) {
                         Checks checks;
                         const QZSeries pm = form("phi_m2_1", t);
                         const QZSeries p1 = form("phi_0_1", t);
                         for (unsigned n = 2; n <= 4; ++n) {
                             const QZSeries lhs =
                                 heat_k(pow(pm, n), -4 * static_cast<int>(n));
                             const QZSeries rhs = mul(pow(pm, n - 1), p1);
                             checks.push_back(
                                 {add(lhs, rhs, 1, frac(2 * n - 1, 2)), 0});
                         }
                         return checks;
                     },
                     "", ""});

        v.push_back({"id:theta_cube_step1",
                     "H_-3(phi_m1_half phi_m2_1) = -phi_m1_half phi_0_1",
                     [](std::int64_t t) {
                         const QZSeries lhs = heat_k(
                             mul(form("phi_m1_half", t), form("phi_m2_1", t)),
                             -6);
                         const QZSeries rhs = mul(form("phi_m1_half", t),
                                                  form("phi_0_1", t));
                         return one(add(lhs, rhs, 1, 1));
                     },
                     "", ""});

        v.push_back({"id:theta_cube_step2",
                     "H_-1(phi_m1_half phi_0_1) = -3 E4 phi_m1_half phi_m2_1",
                     [](std::int64_t t) {
                         const QZSeries lhs = heat_k(
                             mul(form("phi_m1_half", t), form("phi_0_1", t)),
                             -2);
                         const QZSeries rhs =
                             mul(form("e4", t), mul(form("phi_m1_half", t),
                                                    form("phi_m2_1", t)));
                         return one(add(lhs, rhs, 1, 3));
                     },
                     "", ""});

        v.push_back({"id:theta_sq_theta2z_step1",
                     "H_-3(phi_m1_2 phi_m2_1) = -1/2 phi_m1_2 phi_0_1",
                     [](std::int64_t t) {
                         const QZSeries lhs = heat_k(
                             mul(form("phi_m1_2", t), form("phi_m2_1", t)), -6);
                         const QZSeries rhs =
                             mul(form("phi_m1_2", t), form("phi_0_1", t));
                         return one(add(lhs, rhs, 1, frac(1, 2)));
                     },
                     "", ""});

        v.push_back({"id:theta_sq_theta2z_step2",
                     "H_-1(phi_m1_2 phi_0_1) = -5/2 E4 phi_m1_2 phi_m2_1",
                     [](std::int64_t t) {
                         const QZSeries lhs = heat_k(
                             mul(form("phi_m1_2", t), form("phi_0_1", t)), -2);
                         const QZSeries rhs =
                             mul(form("e4", t), mul(form("phi_m1_2", t),
                                                    form("phi_m2_1", t)));
                         return one(add(lhs, rhs, 1, frac(5, 2)));
                     },
                     "", ""});

        return v;
    }();
    return entries;
}

}  // namespace

const std::vector<LedgerEntry>& ledger() { return ledger_impl(); }

const LedgerEntry* find_ledger_entry(const std::string& id) {
    for (const auto& e : ledger_impl())
        if (e.id == id) return &e;
    return nullptr;
}

VerifyResult verify_equation(const LedgerEntry& entry, std::int64_t trunc24) {
    VerifyResult res{entry.id, VerifyStatus::Inconclusive, {}, entry.note};

    Checks checks;
    try {
        checks = entry.assemble(trunc24);
    } catch (const InsufficientTruncationError& e) {
        res.note = e.what();
        return res;
    }

    if (!entry.companion.empty()) {
        // Re-expansion check: every coefficient up to the truncation must
        // cancel, and the companion entry carries the rigorous certificate.
        bool all_zero = true;
        for (const auto& c : checks) all_zero = all_zero && c.series.empty();
        const VerifyResult comp =
            verify_equation(*find_ledger_entry(entry.companion), trunc24);
        res.certificate = comp.certificate;
        if (!all_zero)
            res.status = VerifyStatus::Fail;
        else
            res.status = comp.status;
        return res;
    }

    bool inconclusive = false;
    for (const auto& c : checks) {
        const ZeroCertificate cert = certify_zero(c.series, c.eta_shift24);
        switch (cert.verdict) {
            case ZeroCertificate::Verdict::NotZero:
                res.status = VerifyStatus::Fail;
                res.certificate = cert;
                return res;
            case ZeroCertificate::Verdict::Inconclusive:
                if (!inconclusive) res.certificate = cert;
                inconclusive = true;
                break;
            case ZeroCertificate::Verdict::CertifiedZero:
                if (!inconclusive &&
                    cert.required_bound24 >= res.certificate.required_bound24)
                    res.certificate = cert;
                break;
        }
    }
    res.status = inconclusive ? VerifyStatus::Inconclusive : VerifyStatus::Pass;
    return res;
}

VerifyResult verify_equation(const std::string& id, std::int64_t trunc24) {
    const LedgerEntry* entry = find_ledger_entry(id);
    if (entry == nullptr)
        throw std::invalid_argument("unknown ledger entry: " + id);
    return verify_equation(*entry, trunc24);
}

DiscoveryOutcome discover(const std::string& form_name, int max_degree,
                          std::int64_t trunc24) {
    const CatalogEntry* entry = find_entry(form_name);
    if (entry == nullptr)
        throw UnknownFormError("unknown form: " + form_name);
    return discover_series(form(form_name, trunc24), entry->eta_shift24,
                           max_degree, form_name);
}

DiscoveryOutcome discover_series(const QZSeries& phi, int eta_shift24,
                                 int max_degree, const std::string& label) {
    if (phi.index2() == 0)
        throw std::invalid_argument("discovery requires a form of nonzero index");
    if (max_degree < 1)
        throw std::invalid_argument("max_degree must be >= 1");

    const std::int64_t trunc24 = phi.trunc24();
    DiscoveryOutcome out;

    for (int r = 1; r <= max_degree; ++r) {
        const OperatorChain chain = iterate_heat(phi, phi.weight2(), r);
        const std::int64_t final_w2 = phi.weight2() + 4 * r;
        const std::int64_t t0 =
            vanishing_bound(final_w2 - eta_shift24, phi.index2());
        const std::int64_t row_bound = 24 * t0 + eta_shift24;
        if (trunc24 <= row_bound) {
            out.inconclusive = true;
            out.message = "truncation too small for the degree-" +
                          std::to_string(r) + " certificate (need trunc24 > " +
                          std::to_string(row_bound) + ")";
            return out;
        }

        std::vector<QZSeries> cols;
        std::vector<std::pair<int, std::size_t>> col_ids;  // (i, monomial idx)
        for (int i = 2; i <= r; ++i) {
            const auto mons = modular_monomials(4 * i);
            for (std::size_t j = 0; j < mons.size(); ++j) {
                const QZSeries g =
                    e4e6_monomial(mons[j].first, mons[j].second, trunc24);
                cols.push_back(mul(g, chain.psi(r - i)));
                col_ids.emplace_back(i, j);
            }
        }

        const QZSeries& target = chain.produced.back();
        std::set<TermKey> keys;
        const auto collect = [&keys, row_bound](const QZSeries& s) {
            for (const auto& [key, c] : s.terms()) {
                if (key.n24 > row_bound) break;
                keys.insert(key);
            }
        };
        collect(target);
        for (const auto& c : cols) collect(c);

        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (const auto& key : keys) {
            std::vector<Rational> row;
            row.reserve(cols.size());
            for (const auto& c : cols) row.push_back(c.coeff(key.n24, key.l2));
            rows.push_back(std::move(row));
            rhs.push_back(-target.coeff(key.n24, key.l2));
        }

        const LinearSystemSolution sol = solve_exact(rows, rhs);
        if (!sol.consistent) {
            out.infeasible.push_back({r, cols.size(), sol.rank, keys.size()});
            continue;
        }

        QZSeries combo = target;
        for (std::size_t j = 0; j < cols.size(); ++j)
            combo = add(combo, cols[j], 1, sol.particular[j]);
        const ZeroCertificate cert = certify_zero(combo, eta_shift24);
        if (cert.verdict == ZeroCertificate::Verdict::Inconclusive) {
            out.inconclusive = true;
            out.message = "solution found at degree " + std::to_string(r) +
                          " but the truncation cannot certify it";
            return out;
        }
        if (cert.verdict == ZeroCertificate::Verdict::NotZero)
            throw std::logic_error(
                "q^0-cancellation solution failed certification; the "
                "determination slices were insufficient");

        MDEquation eq;
        eq.base_form = label;
        eq.weight2 = phi.weight2();
        eq.index2 = phi.index2();
        eq.degree = r;
        eq.coeffs.assign(static_cast<std::size_t>(std::max(0, r - 1)), {});
        for (int i = 2; i <= r; ++i)
            eq.coeffs[static_cast<std::size_t>(i - 2)].assign(
                modular_monomials(4 * i).size(), Rational(0));
        for (std::size_t j = 0; j < col_ids.size(); ++j) {
            const auto [i, mon] = col_ids[j];
            eq.coeffs[static_cast<std::size_t>(i - 2)][mon] = sol.particular[j];
        }
        eq.unique = sol.nullspace.empty();
        eq.certificate = cert;
        out.equation = std::move(eq);
        out.extra_solutions = sol.nullspace;
        return out;
    }
    return out;
}

GenusResult elliptic_genus(const GenusInput& input, std::int64_t trunc24) {
    if (input.dim < 2 || input.dim > 12)
        throw std::invalid_argument("dimension must be in 2..12");
    const int d = input.dim;
    const JacobiBasis space = basis(0, d);

    std::vector<Rational> coords;
    if (input.chi) {
        const auto& chi = *input.chi;
        if (chi.size() != static_cast<std::size_t>(d) + 1)
            throw std::invalid_argument("chi list must have dim+1 entries");
        for (int p = 0; p <= d; ++p) {
            const Rational expect =
                (d % 2 == 0) ? chi[static_cast<std::size_t>(d - p)]
                             : -chi[static_cast<std::size_t>(d - p)];
            if (chi[static_cast<std::size_t>(p)] != expect)
                throw InconsistentHodgeError(
                    "chi_p = (-1)^dim chi_{dim-p} fails at p = " +
                    std::to_string(p));
        }
        if (input.euler) {
            Rational e = 0;
            for (int p = 0; p <= d; ++p)
                e += (p % 2 == 0 ? 1 : -1) * chi[static_cast<std::size_t>(p)];
            if (*input.euler != e)
                throw InconsistentHodgeError(
                    "euler number disagrees with the chi data");
        }

        // q^0-slice target: coefficient (-1)^p chi_p at zeta^{d/2 - p}.
        Slice target;
        for (int p = 0; p <= d; ++p) {
            const Rational c =
                (p % 2 == 0 ? 1 : -1) * chi[static_cast<std::size_t>(p)];
            if (c != 0) target[d - 2 * p] = c;
        }

        std::vector<QZSeries> mons;
        for (const auto& mon : space.monomials)
            mons.push_back(monomial_series(mon, trunc24));

        std::set<std::int64_t> ls;
        for (const auto& [l2, c] : target) ls.insert(l2);
        for (const auto& m : mons)
            for (const auto& [l2, c] : q_slice(m, 0)) ls.insert(l2);

        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (const auto l2 : ls) {
            std::vector<Rational> row;
            for (const auto& m : mons) row.push_back(m.coeff(0, l2));
            rows.push_back(std::move(row));
            const auto it = target.find(l2);
            rhs.push_back(it == target.end() ? Rational(0) : it->second);
        }

        const LinearSystemSolution sol = solve_exact(rows, rhs);
        if (!sol.consistent)
            throw InconsistentHodgeError(
                "chi data violates the linear relations cut out by the space "
                "of weight-0 forms");
        if (!sol.nullspace.empty())
            throw UnderdeterminedError(
                "the q^0-slice does not determine a weight-0 form of index " +
                std::to_string(d) + "/2");
        coords = sol.particular;

        QZSeries series = QZSeries::zero(0, d, trunc24);
        for (std::size_t j = 0; j < mons.size(); ++j)
            series = add(series, mons[j], 1, coords[j]);

        GenusResult res{std::move(series), space, std::move(coords), true, {}};
        for (const auto& [key, c] : res.series.terms())
            if (!is_integer(c)) {
                res.integral = false;
                res.warnings.push_back("non-integral Fourier coefficients");
                break;
            }
        return res;
    }

    if (!input.euler)
        throw std::invalid_argument("need an euler number or a chi list");
    if (d != 2 && d != 3 && d != 5)
        throw std::invalid_argument(
            "euler-only input works only where the space is one-dimensional "
            "(dim 2, 3, 5)");
    // Normalize against the generator's value at z = 0 (the euler number).
    const Rational scale = d == 2   ? *input.euler / 12
                           : d == 3 ? *input.euler / 2
                                    : *input.euler / 24;
    const QZSeries gen = monomial_series(space.monomials.front(), trunc24);
    GenusResult res{scaled(gen, scale), space, {scale}, true, {}};
    for (const auto& [key, c] : res.series.terms())
        if (!is_integer(c)) {
            res.integral = false;
            res.warnings.push_back("non-integral Fourier coefficients");
            break;
        }
    return res;
}

}  // namespace wjf
