#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wjf/qzseries.hpp"

namespace wjf {

// Structure-theorem bases for the spaces J_{k,m} of weak Jacobi forms.
//
// Even weight, integral index is the free polynomial ring on E4, E6,
// phi_{-2,1}, phi_{0,1}.  Odd weight and half-integral index reduce to it
// by a single prefactor:
//   odd weight, integral index      -> phi_{-1,2}   * J_{k+1, m-2}
//   odd weight, half-integral index -> phi_{-1,1/2} * J_{k+1, m-1/2}
//   even weight, half-integral index-> phi_{0,3/2}  * J_{k,   m-3/2}
// Prefactors are multiplied into monomials, never divided out of series.

enum class Prefactor { None, PhiM1_2, PhiM1Half, Phi0_3Half };

struct BasisMonomial {
    std::int64_t a = 0;  // E4 power
    std::int64_t b = 0;  // E6 power
    std::int64_t c = 0;  // phi_{-2,1} power
    std::int64_t d = 0;  // phi_{0,1} power
    Prefactor prefactor = Prefactor::None;

    std::string name() const;
};

struct JacobiBasis {
    std::int64_t weight2 = 0;
    std::int64_t index2 = 0;
    std::vector<BasisMonomial> monomials;  // descending lex in (a,b,c,d)

    std::size_t dimension() const { return monomials.size(); }
    bool empty() const { return monomials.empty(); }
};

struct NotInSpanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnderdeterminedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumerates the monomial basis of J_{weight2/2, index2/2}.  weight2 must
// be even (integer weight); an empty basis is a valid answer.  Negative
// index2 yields the empty basis (convenient for the reductions above).
JacobiBasis basis(std::int64_t weight2, std::int64_t index2);

QZSeries monomial_series(const BasisMonomial& mon, std::int64_t trunc24);

// E4^a E6^b monomials spanning M_{weight2/2}, descending lex in (a, b).
std::vector<std::pair<std::int64_t, std::int64_t>> modular_monomials(
    std::int64_t weight2);

// Least t >= 0 such that J_{k - 12t, m} is empty: a weak Jacobi form of
// bidegree (k, m) vanishing to q-order t is identically zero (divide by
// Delta^t and land in the empty space).
std::int64_t vanishing_bound(std::int64_t weight2, std::int64_t index2);

struct ZeroCertificate {
    std::int64_t weight2 = 0;
    std::int64_t index2 = 0;
    std::int64_t vanish_order24 = 0;    // vanishing actually verified below this
    std::int64_t required_bound24 = 0;  // structural requirement
    enum class Verdict { CertifiedZero, NotZero, Inconclusive } verdict =
        Verdict::Inconclusive;

    bool certified() const { return verdict == Verdict::CertifiedZero; }
};

// Rigorous zero test for a series known to be eta^{eta_shift24/...} times a
// weak Jacobi form with integer exponents and trivial character (shift 0
// for honest Jacobi forms).  CertifiedZero demands vanishing on every
// computed slice, not just up to the structural bound.
ZeroCertificate certify_zero(const QZSeries& phi, int eta_shift24 = 0);

// Exact coordinates of phi over basis(phi.weight2, phi.index2), determined
// from q-slices 0..vanishing_bound and verified by re-expansion against
// the full truncation.  Throws NotInSpanError / UnderdeterminedError.
std::vector<Rational> coordinates(const QZSeries& phi);

}  // namespace wjf
