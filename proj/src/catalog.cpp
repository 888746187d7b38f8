#include "wjf/catalog.hpp"

#include <functional>
#include <map>

#include "wjf/operators.hpp"

namespace wjf {

namespace {

using Parity = CatalogEntry::Parity;

mpz_class sigma(unsigned power, std::int64_t n) {
    mpz_class s = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), power);
        s += t;
    }
    return s;
}

// (1 + c q^{n24/24} zeta^{l2/2}) as an exact two-term factor.
QZSeries unit_factor(std::int64_t n24, std::int64_t l2, const Rational& c,
                     std::int64_t trunc24) {
    TermMap terms;
    terms.emplace(TermKey{0, 0}, Rational(1));
    terms.emplace(TermKey{n24, l2}, c);
    return QZSeries(0, 0, trunc24, false, std::move(terms));
}

QZSeries finish(const QZSeries& s, std::int64_t trunc24) {
    return restrict_trunc(s, trunc24);
}

QZSeries eta_power(unsigned n, std::int64_t trunc24) {
    return pow(eta(trunc24), n);
}

QZSeries build_phi_m2_1(std::int64_t t) {
    const QZSeries th = theta(1, t + 6);
    return finish(div_exact(mul(th, th), eta_power(6, t + 6)), t);
}

QZSeries build_phi_0_1(std::int64_t t) {
    return scaled(heat_k(build_phi_m2_1(t), -4), -2);
}

// zeta^{1/2} + zeta^{-1/2} times the quintuple product
//   prod_{n>=1} (1+q^n zeta)(1+q^n zeta^{-1})(1-q^{2n-1} zeta^2)(1-q^{2n-1} zeta^{-2}).
QZSeries build_phi_0_3_half(std::int64_t t) {
    TermMap seed;
    seed.emplace(TermKey{0, 1}, Rational(1));
    seed.emplace(TermKey{0, -1}, Rational(1));
    QZSeries s(0, 3, t, false, std::move(seed));
    for (std::int64_t n = 1; 24 * n < t; ++n) {
        s = mul(s, unit_factor(24 * n, 2, 1, t));
        s = mul(s, unit_factor(24 * n, -2, 1, t));
    }
    for (std::int64_t j = 1; 24 * j < t; j += 2) {
        s = mul(s, unit_factor(24 * j, 4, -1, t));
        s = mul(s, unit_factor(24 * j, -4, -1, t));
    }
    return finish(s, t);
}

QZSeries build_phi_0_2(std::int64_t t) {
    const QZSeries p1 = build_phi_0_1(t);
    const QZSeries pm = build_phi_m2_1(t);
    return add(mul(p1, p1), mul(eisenstein(4, t), mul(pm, pm)), frac(1, 24),
               frac(-1, 24));
}

QZSeries build_phi_0_3(std::int64_t t) { return pow(build_phi_0_3_half(t), 2); }

// The weight-0 ring relation pins phi_{0,4}; the quotient definition
// theta(3z)/theta(z) is checked against it in the tests via
// phi_{0,4} * theta(z) = theta(3z).
QZSeries build_phi_0_4(std::int64_t t) {
    const QZSeries p2 = build_phi_0_2(t);
    return add(mul(build_phi_0_1(t), build_phi_0_3(t)), mul(p2, p2),
               frac(1, 4), frac(-1, 4));
}

QZSeries build_psi_0_2(std::int64_t t) {
    const QZSeries p1 = build_phi_0_1(t);
    return add(mul(p1, p1), build_phi_0_2(t), 1, -20);
}

const std::map<std::string, std::function<QZSeries(std::int64_t)>>& recipes() {
    static const std::map<std::string, std::function<QZSeries(std::int64_t)>>
        table = {
            {"eta", [](std::int64_t t) { return eta(t); }},
            {"delta",
             [](std::int64_t t) { return finish(eta_power(24, t), t); }},
            {"e2", [](std::int64_t t) { return eisenstein(2, t); }},
            {"e4", [](std::int64_t t) { return eisenstein(4, t); }},
            {"e6", [](std::int64_t t) { return eisenstein(6, t); }},
            {"e8", [](std::int64_t t) { return pow(eisenstein(4, t), 2); }},
            {"e10",
             [](std::int64_t t) {
                 return mul(eisenstein(4, t), eisenstein(6, t));
             }},
            {"e14",
             [](std::int64_t t) {
                 return mul(pow(eisenstein(4, t), 2), eisenstein(6, t));
             }},
            {"theta", [](std::int64_t t) { return theta(1, t); }},
            {"theta2z", [](std::int64_t t) { return theta(2, t); }},
            {"theta3z", [](std::int64_t t) { return theta(3, t); }},
            {"theta_sq",
             [](std::int64_t t) { return finish(pow(theta(1, t), 2), t); }},
            {"theta_cube",
             [](std::int64_t t) { return finish(pow(theta(1, t), 3), t); }},
            {"theta_pow4",
             [](std::int64_t t) { return finish(pow(theta(1, t), 4), t); }},
            {"theta_theta2z",
             [](std::int64_t t) {
                 return finish(mul(theta(1, t), theta(2, t)), t);
             }},
            {"theta_sq_theta2z",
             [](std::int64_t t) {
                 return finish(mul(pow(theta(1, t), 2), theta(2, t)), t);
             }},
            {"phi_m2_1", build_phi_m2_1},
            {"phi_0_1", build_phi_0_1},
            {"phi_m1_half",
             [](std::int64_t t) {
                 return finish(div_exact(theta(1, t + 3), eta_power(3, t + 3)),
                               t);
             }},
            {"phi_m1_2",
             [](std::int64_t t) {
                 return finish(div_exact(theta(2, t + 3), eta_power(3, t + 3)),
                               t);
             }},
            {"phi_0_3_half", build_phi_0_3_half},
            {"phi_0_2", build_phi_0_2},
            {"phi_0_3", build_phi_0_3},
            {"phi_0_4", build_phi_0_4},
            {"phi_0_5_half",
             [](std::int64_t t) {
                 return mul(build_phi_0_1(t), build_phi_0_3_half(t));
             }},
            {"psi_0_2", build_psi_0_2},
            {"rho_0_2",
             [](std::int64_t t) {
                 return add(build_psi_0_2(t), build_phi_0_2(t), 2, -11);
             }},
            {"e4_1",
             [](std::int64_t t) {
                 return add(mul(eisenstein(4, t), build_phi_0_1(t)),
                            mul(eisenstein(6, t), build_phi_m2_1(t)),
                            frac(1, 12), frac(-1, 12));
             }},
            {"phi_10_1",
             [](std::int64_t t) {
                 return finish(mul(eta_power(24, t), build_phi_m2_1(t)), t);
             }},
            {"phi_12_1",
             [](std::int64_t t) {
                 return finish(mul(eta_power(24, t), build_phi_0_1(t)), t);
             }},
        };
    return table;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"eta", 1, 0, Parity::Even, true, 1, 1, "q^{1/24} prod (1-q^n)"},
        {"delta", 24, 0, Parity::Even, true, 0, 24, "eta^24"},
        {"e2", 4, 0, Parity::Even, true, 0, 24,
         "1 - 24 sum sigma_1(n) q^n (quasi-modular)"},
        {"e4", 8, 0, Parity::Even, true, 0, 24, "1 + 240 sum sigma_3(n) q^n"},
        {"e6", 12, 0, Parity::Even, true, 0, 24, "1 - 504 sum sigma_5(n) q^n"},
        {"e8", 16, 0, Parity::Even, true, 0, 24, "E4^2"},
        {"e10", 20, 0, Parity::Even, true, 0, 24, "E4*E6"},
        {"e14", 28, 0, Parity::Even, true, 0, 24, "E4^2*E6"},
        {"theta", 1, 1, Parity::Odd, true, 3, 3,
         "q^{1/8} sum (-1)^n q^{n(n+1)/2} zeta^{n+1/2}"},
        {"theta2z", 1, 4, Parity::Odd, true, 3, 3, "theta(tau, 2z)"},
        {"theta3z", 1, 9, Parity::Odd, true, 3, 3, "theta(tau, 3z)"},
        {"theta_sq", 2, 2, Parity::Even, true, 6, 3, "theta^2"},
        {"theta_cube", 3, 3, Parity::Odd, true, 9, 3, "theta^3"},
        {"theta_pow4", 4, 4, Parity::Even, true, 12, 3, "theta^4"},
        {"theta_theta2z", 2, 5, Parity::Even, true, 6, 3,
         "theta(z)*theta(2z)"},
        {"theta_sq_theta2z", 3, 6, Parity::Odd, true, 9, 3,
         "theta(z)^2*theta(2z)"},
        {"phi_m2_1", -4, 2, Parity::Even, true, 0, 24, "theta^2 / eta^6"},
        {"phi_0_1", 0, 2, Parity::Even, true, 0, 24, "-2 H_{-2}(phi_m2_1)"},
        {"phi_m1_half", -2, 1, Parity::Odd, true, 0, 24, "theta / eta^3"},
        {"phi_m1_2", -2, 4, Parity::Odd, true, 0, 24, "theta(2z) / eta^3"},
        {"phi_0_3_half", 0, 3, Parity::Even, true, 0, 24,
         "theta(2z)/theta(z) via the quintuple product"},
        {"phi_0_2", 0, 4, Parity::Even, true, 0, 24,
         "(phi_0_1^2 - E4*phi_m2_1^2)/24"},
        {"phi_0_3", 0, 6, Parity::Even, true, 0, 24, "phi_0_3_half^2"},
        {"phi_0_4", 0, 8, Parity::Even, true, 0, 24,
         "(phi_0_1*phi_0_3 - phi_0_2^2)/4 = theta(3z)/theta(z)"},
        {"phi_0_5_half", 0, 5, Parity::Even, true, 0, 24,
         "phi_0_1*phi_0_3_half"},
        {"psi_0_2", 0, 4, Parity::Even, true, 0, 24, "phi_0_1^2 - 20*phi_0_2"},
        {"rho_0_2", 0, 4, Parity::Even, true, 0, 24,
         "2*psi_0_2 - 11*phi_0_2"},
        {"e4_1", 8, 2, Parity::Even, true, 0, 24,
         "(E4*phi_0_1 - E6*phi_m2_1)/12, the index-1 Eisenstein-Jacobi series"},
        {"phi_10_1", 20, 2, Parity::Even, true, 0, 24,
         "delta*phi_m2_1 = eta^18*theta^2 (cusp form)"},
        {"phi_12_1", 24, 2, Parity::Even, true, 0, 24,
         "delta*phi_0_1 (cusp form)"},
    };
    return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return &e;
    return nullptr;
}

QZSeries eta(std::int64_t trunc24) {
    if (trunc24 < 1)
        throw InsufficientTruncationError("eta requires trunc24 >= 1");
    QZSeries s = make_monomial(1, 0, 1, 1, 0, trunc24);
    for (std::int64_t n = 1; 24 * n < trunc24; ++n)
        s = mul(s, unit_factor(24 * n, 0, -1, trunc24));
    return s;
}

QZSeries eisenstein(int k, std::int64_t trunc24) {
    if (trunc24 < 24)
        throw InsufficientTruncationError("eisenstein requires trunc24 >= 24");
    long multiplier = 0;
    unsigned power = 0;
    switch (k) {
        case 2: multiplier = -24; power = 1; break;
        case 4: multiplier = 240; power = 3; break;
        case 6: multiplier = -504; power = 5; break;
        default:
            throw std::invalid_argument(
                "eisenstein supports k in {2,4,6}; higher weights are E4/E6 "
                "monomials");
    }
    TermMap terms;
    terms.emplace(TermKey{0, 0}, Rational(1));
    for (std::int64_t n = 1; 24 * n < trunc24; ++n)
        terms.emplace(TermKey{24 * n, 0}, Rational(multiplier) * sigma(power, n));
    return QZSeries(2 * k, 0, trunc24, /*quasi=*/k == 2, std::move(terms));
}

QZSeries theta(int dilation, std::int64_t trunc24) {
    if (dilation < 1 || dilation > 3)
        throw std::invalid_argument("theta dilation must be in {1,2,3}");
    if (trunc24 < 3)
        throw InsufficientTruncationError("theta requires trunc24 >= 3");
    TermMap terms;
    for (std::int64_t n = 0;; ++n) {
        const std::int64_t n24 = 3 + 12 * n * (n + 1);
        if (n24 >= trunc24) break;
        const Rational sign = (n % 2 == 0) ? 1 : -1;
        terms.emplace(TermKey{n24, dilation * (2 * n + 1)}, sign);
        terms.emplace(TermKey{n24, -dilation * (2 * n + 1)}, -sign);
    }
    return QZSeries(1, dilation * dilation, trunc24, false, std::move(terms));
}

QZSeries form(std::string_view name, std::int64_t trunc24) {
    const CatalogEntry* entry = find_entry(name);
    if (entry == nullptr)
        throw UnknownFormError("unknown form: " + std::string(name));
    if (trunc24 < entry->min_trunc24)
        throw InsufficientTruncationError(
            entry->name + " requires trunc24 >= " +
            std::to_string(entry->min_trunc24));
    return recipes().at(entry->name)(trunc24);
}

}  // namespace wjf
