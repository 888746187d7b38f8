#include "wjf/qzseries.hpp"

#include <algorithm>
#include <vector>

namespace wjf {

namespace {

// Slice view: n24 -> (l2 -> coefficient), for q-convolutions.
std::map<std::int64_t, Slice> by_slice(const TermMap& terms) {
    std::map<std::int64_t, Slice> out;
    for (const auto& [key, c] : terms) out[key.n24][key.l2] = c;
    return out;
}

void accumulate(TermMap& into, std::int64_t n24, std::int64_t l2,
                const Rational& c) {
    const TermKey key{n24, l2};
    auto it = into.find(key);
    if (it == into.end()) {
        if (c != 0) into.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) into.erase(it);
}

}  // namespace

QZSeries::QZSeries(std::int64_t weight2, std::int64_t index2,
                   std::int64_t trunc24, bool quasi, TermMap terms)
    : weight2_(weight2), index2_(index2), trunc24_(trunc24), quasi_(quasi),
      terms_(std::move(terms)) {
    if (index2_ < 0) throw std::invalid_argument("negative index2");
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.n24 >= trunc24_)
            throw std::invalid_argument("series term at or beyond truncation");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

QZSeries make_monomial(std::int64_t n24, std::int64_t l2, const Rational& c,
                       std::int64_t weight2, std::int64_t index2,
                       std::int64_t trunc24) {
    if (trunc24 <= n24)
        throw std::invalid_argument("monomial exponent at or beyond truncation");
    TermMap terms;
    if (c != 0) terms.emplace(TermKey{n24, l2}, c);
    return QZSeries(weight2, index2, trunc24, false, std::move(terms));
}

QZSeries add(const QZSeries& a, const QZSeries& b, const Rational& ca,
             const Rational& cb) {
    if (a.weight2() != b.weight2() || a.index2() != b.index2())
        throw std::invalid_argument("bidegree mismatch in linear combination");
    const std::int64_t trunc = std::min(a.trunc24(), b.trunc24());
    TermMap terms;
    for (const auto& [key, c] : a.terms()) {
        if (key.n24 >= trunc) break;
        accumulate(terms, key.n24, key.l2, ca * c);
    }
    for (const auto& [key, c] : b.terms()) {
        if (key.n24 >= trunc) break;
        accumulate(terms, key.n24, key.l2, cb * c);
    }
    return QZSeries(a.weight2(), a.index2(), trunc, a.quasi() || b.quasi(),
                    std::move(terms));
}

QZSeries scaled(const QZSeries& a, const Rational& c) {
    TermMap terms;
    if (c != 0)
        for (const auto& [key, v] : a.terms()) terms.emplace(key, c * v);
    return QZSeries(a.weight2(), a.index2(), a.trunc24(), a.quasi(),
                    std::move(terms));
}

QZSeries mul(const QZSeries& a, const QZSeries& b) {
    // Both operands are complete below their truncation and vanish below
    // their lowest exponent, so the product is complete below
    // min(a.trunc + ord(b), b.trunc + ord(a)).
    const std::int64_t trunc =
        std::min(a.trunc24() + b.ord24(), b.trunc24() + a.ord24());
    const auto aslices = by_slice(a.terms());
    const auto bslices = by_slice(b.terms());
    TermMap terms;
    for (const auto& [na, sa] : aslices) {
        for (const auto& [nb, sb] : bslices) {
            const std::int64_t n = na + nb;
            if (n >= trunc) break;  // bslices ascending in nb
            for (const auto& [la, ca] : sa)
                for (const auto& [lb, cb] : sb)
                    accumulate(terms, n, la + lb, ca * cb);
        }
    }
    return QZSeries(a.weight2() + b.weight2(), a.index2() + b.index2(), trunc,
                    a.quasi() || b.quasi(), std::move(terms));
}

QZSeries pow(const QZSeries& a, unsigned exponent) {
    if (exponent == 0)
        return make_monomial(0, 0, 1, 0, 0, a.trunc24());
    QZSeries r = a;
    for (unsigned i = 1; i < exponent; ++i) r = mul(r, a);
    return r;
}

QZSeries div_exact(const QZSeries& a, const QZSeries& b) {
    if (b.empty()) throw std::invalid_argument("division by zero series");
    const std::int64_t s24 = b.ord24();
    auto bslices = by_slice(b.terms());
    const Slice& lead = bslices.begin()->second;
    if (lead.size() != 1)
        throw std::invalid_argument(
            "divisor's lowest q-slice is not a single monomial");
    const std::int64_t t2 = lead.begin()->first;
    const Rational c = lead.begin()->second;
    bslices.erase(bslices.begin());

    const std::int64_t ord_a = a.ord24();
    const std::int64_t trunc =
        std::min(a.trunc24() - s24, b.trunc24() + ord_a - 2 * s24);

    // Long division on q-slices.  The divisor's lowest slice is invertible
    // as a monomial, so every step is exact; the running remainder is only
    // tracked below s24 + trunc, the region the quotient can still reach.
    auto rem = by_slice(a.terms());
    std::map<std::int64_t, Slice> quot;
    while (!rem.empty()) {
        const std::int64_t p = rem.begin()->first;
        if (p - s24 >= trunc) break;
        Slice xs;
        for (const auto& [l2, v] : rem.begin()->second)
            xs[l2 - t2] = v / c;
        rem.erase(rem.begin());
        for (const auto& [nb, sb] : bslices) {
            const std::int64_t n = p - s24 + nb;
            if (n >= s24 + trunc) break;
            Slice& target = rem[n];
            for (const auto& [lx, cx] : xs)
                for (const auto& [lb, cb] : sb) {
                    Rational& t = target[lx + lb];
                    t -= cx * cb;
                    if (t == 0) target.erase(lx + lb);
                }
            if (target.empty()) rem.erase(n);
        }
        quot.emplace(p - s24, std::move(xs));
    }

    TermMap terms;
    for (const auto& [n, slice] : quot)
        for (const auto& [l2, v] : slice) terms.emplace(TermKey{n, l2}, v);
    return QZSeries(a.weight2() - b.weight2(), a.index2() - b.index2(), trunc,
                    a.quasi() || b.quasi(), std::move(terms));
}

Slice q_slice(const QZSeries& a, std::int64_t n24) {
    if (n24 >= a.trunc24())
        throw std::out_of_range("q-slice requested beyond truncation");
    Slice out;
    for (auto it = a.terms().lower_bound(TermKey{n24, INT64_MIN});
         it != a.terms().end() && it->first.n24 == n24; ++it)
        out[it->first.l2] = it->second;
    return out;
}

bool is_zero_to(const QZSeries& a, std::int64_t bound24) {
    if (bound24 > a.trunc24())
        throw std::out_of_range("vanishing claim beyond computed truncation");
    return a.empty() || a.terms().begin()->first.n24 >= bound24;
}

QZSeries restrict_trunc(const QZSeries& a, std::int64_t new_trunc24) {
    if (new_trunc24 > a.trunc24())
        throw std::invalid_argument("cannot extend truncation");
    TermMap terms;
    for (const auto& [key, c] : a.terms()) {
        if (key.n24 >= new_trunc24) break;
        terms.emplace(key, c);
    }
    return QZSeries(a.weight2(), a.index2(), new_trunc24, a.quasi(),
                    std::move(terms));
}

}  // namespace wjf
