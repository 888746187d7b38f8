#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "wjf/rational.hpp"

namespace wjf {

// Truncated bigraded Fourier expansion in q and zeta.
//
// Grading conventions, used throughout the project:
//   * q-exponents are stored as integers n24 in units of 1/24, so the
//     monomial q^{1/24} has n24 = 1 and q^1 has n24 = 24.  This makes
//     eta (q^{1/24}...) and theta (q^{1/8}...) integer-graded.
//   * zeta-exponents are stored as integers l2 in units of 1/2.
//   * weight2/index2 are twice the weight/index, so half-integral
//     weights and indices stay integral (theta has weight2 = index2 = 1).
//   * trunc24 is exclusive: coefficients are complete for all exponents
//     with n24 < trunc24.  Operations compute the provably complete
//     truncation of their result; they never pad with unverified zeros.
//
// Zero coefficients are never stored, so zero tests are structural.
// Series are immutable after construction and safe to share.

struct TermKey {
    std::int64_t n24;
    std::int64_t l2;
    friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

using TermMap = std::map<TermKey, Rational>;
using Slice = std::map<std::int64_t, Rational>;  // l2 -> coefficient

class QZSeries {
public:
    QZSeries(std::int64_t weight2, std::int64_t index2, std::int64_t trunc24,
             bool quasi, TermMap terms);

    static QZSeries zero(std::int64_t weight2, std::int64_t index2,
                         std::int64_t trunc24, bool quasi = false) {
        return QZSeries(weight2, index2, trunc24, quasi, TermMap{});
    }

    std::int64_t weight2() const { return weight2_; }
    std::int64_t index2() const { return index2_; }
    std::int64_t trunc24() const { return trunc24_; }
    bool quasi() const { return quasi_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Lowest q-exponent present, in 1/24 units.  The empty series reports
    // its truncation bound: the first exponent that could be nonzero.
    std::int64_t ord24() const {
        return terms_.empty() ? trunc24_ : terms_.begin()->first.n24;
    }

    Rational coeff(std::int64_t n24, std::int64_t l2) const {
        const auto it = terms_.find(TermKey{n24, l2});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Same bidegree, truncation, and coefficients (quasi flag ignored;
    // it is bookkeeping, not series data).
    friend bool operator==(const QZSeries& a, const QZSeries& b) {
        return a.weight2_ == b.weight2_ && a.index2_ == b.index2_ &&
               a.trunc24_ == b.trunc24_ && a.terms_ == b.terms_;
    }

    // Replaces the quasi flag; used by the modular-corrected operators,
    // whose whole point is to cancel the E2 dependence they introduce.
    QZSeries with_quasi(bool q) const {
        QZSeries r = *this;
        r.quasi_ = q;
        return r;
    }

private:
    std::int64_t weight2_;
    std::int64_t index2_;
    std::int64_t trunc24_;
    bool quasi_;
    TermMap terms_;
};

// Single term c * q^{n24/24} zeta^{l2/2}.  Rejects trunc24 <= n24.
QZSeries make_monomial(std::int64_t n24, std::int64_t l2, const Rational& c,
                       std::int64_t weight2, std::int64_t index2,
                       std::int64_t trunc24);

// ca*a + cb*b.  Requires equal bidegree; truncation is the min of the two.
QZSeries add(const QZSeries& a, const QZSeries& b, const Rational& ca,
             const Rational& cb);

QZSeries scaled(const QZSeries& a, const Rational& c);

// Cauchy product.  weight2/index2 add; quasi flags OR; truncation is
// min(a.trunc24 + ord24(b), b.trunc24 + ord24(a)).
QZSeries mul(const QZSeries& a, const QZSeries& b);

QZSeries pow(const QZSeries& a, unsigned exponent);

// Exact quotient a / b for divisors whose lowest q-slice is a single
// monomial (eta powers, Delta, Eisenstein series, ...).  Exponents of the
// result may go negative; weight2/index2 subtract.
QZSeries div_exact(const QZSeries& a, const QZSeries& b);

// Laurent-polynomial slice at the given q-exponent.  Rejects slices at or
// beyond the truncation.
Slice q_slice(const QZSeries& a, std::int64_t n24);

// True iff every stored term with n24 < bound24 is zero.  Rejects bounds
// beyond the truncation: vanishing may not be claimed past computed data.
bool is_zero_to(const QZSeries& a, std::int64_t bound24);

// Drops terms at or beyond new_trunc24 and lowers the truncation.  Only
// shrinking is allowed.
QZSeries restrict_trunc(const QZSeries& a, std::int64_t new_trunc24);

}  // namespace wjf
