#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wjf/qzseries.hpp"

namespace wjf {

// "q^0", "q^1", "q^{1/24}", "q^{-1/2}": integer exponents bare,
// fractional ones as braced reduced fractions.
std::string q_exponent_string(std::int64_t n24);

// "ζ^1", "ζ^-2", "ζ^{3/2}".
std::string zeta_power_string(std::int64_t l2);

// One q-slice as a Laurent polynomial in ascending zeta order, e.g.
// "10ζ^-2 - 64ζ^-1 + 108 - 64ζ^1 + 10ζ^2".  The empty slice renders "0".
std::string slice_string(const Slice& slice);

// One line per nonempty q-slice, ascending: "q^1: ...".  A series with no
// terms renders the single line "0".
std::vector<std::string> series_lines(const QZSeries& s);

// {"weight2": .., "index2": .., "trunc24": .., "terms": [{"n24", "l2", "c"}]}
// with terms in lexicographic (n24, l2) order and coefficients as exact
// "p/q" strings.  Byte-stable across runs.
nlohmann::ordered_json series_to_json(const QZSeries& s);
QZSeries series_from_json(const nlohmann::json& j);

}  // namespace wjf
