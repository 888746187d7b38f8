#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wjf/operators.hpp"
#include "wjf/qzseries.hpp"
#include "wjf/ring.hpp"

namespace wjf {

// A modular differential equation for a Jacobi form phi of weight k:
//   psi_r + sum_{i=2..r} g_{2i} psi_{r-i} = 0,
// where psi_j is the j-th iterate of the corrected heat operator and
// g_{2i} is a modular form of weight 2i written over the E4^a E6^b
// monomial basis.  The equation is monic and has no weight-2 slot
// (M_2 = {0}).
struct MDEquation {
    std::string base_form;
    std::int64_t weight2 = 0;  // of the base form
    std::int64_t index2 = 0;
    int degree = 0;
    std::vector<std::vector<Rational>> coeffs;  // coeffs[i-2] over modular_monomials(4i)
    bool unique = true;
    ZeroCertificate certificate;
};

struct InfeasibilityReport {
    int degree = 0;
    std::size_t unknowns = 0;
    std::size_t rank = 0;
    std::size_t rows = 0;
};

struct DiscoveryOutcome {
    std::optional<MDEquation> equation;
    // Nullspace directions when the solution at the minimal degree is not
    // unique; empty in the expected (unique) case.
    std::vector<std::vector<Rational>> extra_solutions;
    std::vector<InfeasibilityReport> infeasible;
    bool inconclusive = false;
    std::string message;
};

// q^0-cancellation search: for r = 1..max_degree, solve for coefficients
// killing every Fourier coefficient up to the certificate bound, then
// certify the assembled combination against the full truncation.
DiscoveryOutcome discover(const std::string& form_name, int max_degree,
                          std::int64_t trunc24);

// Same search on an explicit series (weight read from the metadata);
// eta_shift24 as in certify_zero.
DiscoveryOutcome discover_series(const QZSeries& phi, int eta_shift24,
                                 int max_degree, const std::string& label = "");

// One combination that must vanish identically, together with the
// eta-power reduction its certificate needs.
struct LedgerCheck {
    QZSeries series;
    int eta_shift24 = 0;
};

struct LedgerEntry {
    std::string id;
    std::string description;
    std::function<std::vector<LedgerCheck>(std::int64_t)> assemble;
    // Entries with quasi-modular (E2-polynomial) coefficients cannot carry
    // a structure-theorem certificate of their own; they are verified
    // coefficientwise to the full truncation and inherit the certificate
    // of the named companion entry.
    std::string companion;
    std::string note;
};

const std::vector<LedgerEntry>& ledger();
const LedgerEntry* find_ledger_entry(const std::string& id);

enum class VerifyStatus { Pass, Fail, Inconclusive };

struct VerifyResult {
    std::string id;
    VerifyStatus status = VerifyStatus::Inconclusive;
    ZeroCertificate certificate;
    std::string note;
};

VerifyResult verify_equation(const LedgerEntry& entry, std::int64_t trunc24);
VerifyResult verify_equation(const std::string& id, std::int64_t trunc24);

struct InconsistentHodgeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Euler number alone works only where dim J_{0,d/2} = 1 (d = 2, 3, 5);
// otherwise pass chi_p = sum_q (-1)^q h^{p,q} for p = 0..d.
struct GenusInput {
    int dim = 0;
    std::optional<Rational> euler;
    std::optional<std::vector<Rational>> chi;
};

struct GenusResult {
    QZSeries series;
    JacobiBasis space;
    std::vector<Rational> coords;
    bool integral = true;
    std::vector<std::string> warnings;
};

// Solves for the weight-0, index-dim/2 weak Jacobi form whose q^0-slice
// carries the chi_y data: the coefficient of zeta^{d/2-p} is (-1)^p chi_p.
GenusResult elliptic_genus(const GenusInput& input, std::int64_t trunc24);

}  // namespace wjf
