#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wjf/qzseries.hpp"

namespace wjf {

// Thrown when a recipe is asked for less than its declared minimum
// truncation, or for an output truncation its inputs cannot support.
struct InsufficientTruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownFormError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A named modular or Jacobi form with its construction recipe.
//
// eta_shift24 records the eta-power carried by forms with fractional
// q-grading (theta powers, eta itself): the form equals eta^s times a
// weak Jacobi form with integer exponents and trivial character.  It is
// what the zero-certificate machinery needs to reduce such forms to the
// structure theorem.
struct CatalogEntry {
    std::string name;
    std::int64_t weight2;
    std::int64_t index2;
    enum class Parity { Even, Odd } parity;
    bool integral;           // integral Fourier coefficients expected
    int eta_shift24;         // eta-power for fractional q-grading, else 0
    std::int64_t min_trunc24;
    std::string note;        // construction formula, for humans
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* find_entry(std::string_view name);

// Dedekind eta q^{1/24} prod (1-q^n); weight 1/2.
QZSeries eta(std::int64_t trunc24);

// Eisenstein series E2, E4, E6 via divisor sums; E2 is quasi-modular.
// Higher weights (E8, E10, E14) are catalog forms built as E4/E6 monomials.
QZSeries eisenstein(int k, std::int64_t trunc24);

// theta(tau, a*z) for a in {1,2,3}: the alternating sum
// q^{1/8} sum_n (-1)^n q^{n(n+1)/2} zeta^{a(n+1/2)}; weight 1/2, index a^2/2.
QZSeries theta(int dilation, std::int64_t trunc24);

// Constructs any catalog form at the requested truncation.  Recipes
// over-compute their inputs so the result is complete to exactly trunc24.
QZSeries form(std::string_view name, std::int64_t trunc24);

}  // namespace wjf
