#pragma once

#include <cstdint>
#include <vector>

#include "wjf/qzseries.hpp"

namespace wjf {

// Differential operators on q- and (q,zeta)-expansions.  Weight metadata
// rises by 2 (4 in weight2 units) under every operator here.

// D = q d/dq, acting termwise by n = n24/24.  Pure q-series only; the
// result is quasi-modular in general.
QZSeries dq(const QZSeries& f);

// Serre derivative D_k(f) = D(f) - (k/12) E2 f with k = k2/2.  Maps
// modular forms of weight k to weight k+2.
QZSeries serre(const QZSeries& f, std::int64_t k2);

// Heat operator H^{(m)} = 12 q d/dq - (3/m) (zeta d/dzeta)^2, acting on a
// term q^n zeta^l by (3/m)(4nm - l^2).  In doubled units the multiplier is
// (n24*index2 - 3*l2^2) / (2*index2), kept exact.
QZSeries heat(const QZSeries& phi);

// Modular correction H_k(phi) = H(phi) - ((2k-1)/2) E2 phi with k = k2/2.
// Maps weak Jacobi forms of weight k to weight k+2, preserving type.
QZSeries heat_k(const QZSeries& phi, std::int64_t k2);

// Iterated heat chain psi_0 = phi, psi_{j+1} = H_{k+2j}(psi_j).
struct OperatorChain {
    std::int64_t base_weight2;
    std::int64_t base_index2;
    std::vector<QZSeries> produced;  // psi_0 .. psi_r

    int length() const { return static_cast<int>(produced.size()) - 1; }
    const QZSeries& psi(int j) const { return produced.at(static_cast<std::size_t>(j)); }
};

OperatorChain iterate_heat(const QZSeries& phi, std::int64_t k2, int r);

}  // namespace wjf
