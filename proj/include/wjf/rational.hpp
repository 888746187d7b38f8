#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wjf {

// Exact arbitrary-precision rational scalar. GMP keeps values in lowest
// terms with positive denominator; there is no floating point anywhere.
using Rational = mpq_class;

// Builds a canonical rational from an integer fraction.
inline Rational frac(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "p/q" with q > 0 and gcd(p,q) = 1; the denominator is always printed.
inline std::string fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// "p" for integers, "p/q" otherwise.
inline std::string plain_string(const Rational& r) {
    return is_integer(r) ? r.get_num().get_str() : fraction_string(r);
}

// Parses "p" or "p/q"; rejects q <= 0 after sign normalization and junk input.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    try {
        Rational r;
        if (slash == std::string::npos) {
            r = Rational(text);
        } else {
            const std::string num = text.substr(0, slash);
            const std::string den = text.substr(slash + 1);
            if (num.empty() || den.empty())
                throw std::invalid_argument("malformed fraction");
            r = Rational(mpz_class(num), mpz_class(den));
        }
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    }
}

}  // namespace wjf
