#include "wjf/operators.hpp"

#include "wjf/catalog.hpp"

namespace wjf {

QZSeries dq(const QZSeries& f) {
    if (f.index2() != 0)
        throw std::invalid_argument("D acts on pure q-series; use heat for "
                                    "nonzero index");
    TermMap terms;
    for (const auto& [key, c] : f.terms()) {
        const Rational v = c * frac(key.n24, 24);
        if (v != 0) terms.emplace(key, v);
    }
    return QZSeries(f.weight2() + 4, f.index2(), f.trunc24(), true,
                    std::move(terms));
}

QZSeries serre(const QZSeries& f, std::int64_t k2) {
    if (f.index2() != 0)
        throw std::invalid_argument("Serre derivative acts on pure q-series");
    const QZSeries e2 = eisenstein(2, f.trunc24());
    return add(dq(f), mul(e2, f), 1, frac(-k2, 24)).with_quasi(f.quasi());
}

QZSeries heat(const QZSeries& phi) {
    if (phi.index2() == 0)
        throw std::invalid_argument("heat operator requires nonzero index");
    TermMap terms;
    for (const auto& [key, c] : phi.terms()) {
        const Rational v =
            c * frac(key.n24 * phi.index2() - 3 * key.l2 * key.l2,
                     2 * phi.index2());
        if (v != 0) terms.emplace(key, v);
    }
    return QZSeries(phi.weight2() + 4, phi.index2(), phi.trunc24(), true,
                    std::move(terms));
}

QZSeries heat_k(const QZSeries& phi, std::int64_t k2) {
    if (phi.index2() == 0)
        throw std::invalid_argument("heat operator requires nonzero index");
    const QZSeries e2 = eisenstein(2, phi.trunc24());
    return add(heat(phi), mul(e2, phi), 1, frac(-(k2 - 1), 2))
        .with_quasi(phi.quasi());
}

OperatorChain iterate_heat(const QZSeries& phi, std::int64_t k2, int r) {
    if (r < 0) throw std::invalid_argument("chain length must be >= 0");
    OperatorChain chain{k2, phi.index2(), {phi}};
    std::int64_t w2 = k2;
    for (int j = 0; j < r; ++j) {
        chain.produced.push_back(heat_k(chain.produced.back(), w2));
        w2 += 4;
    }
    return chain;
}

}  // namespace wjf
