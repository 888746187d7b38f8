#include "wjf/render.hpp"

#include <numeric>

namespace wjf {

namespace {

std::string reduced_exponent(std::int64_t num, std::int64_t den) {
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    const std::int64_t p = num / (g == 0 ? 1 : g);
    const std::int64_t q = den / (g == 0 ? 1 : g);
    if (q == 1) return std::to_string(p);
    return "{" + std::to_string(p) + "/" + std::to_string(q) + "}";
}

std::string term_body(const Rational& magnitude, std::int64_t l2) {
    if (l2 == 0) return plain_string(magnitude);
    const std::string z = zeta_power_string(l2);
    if (magnitude == 1) return z;
    if (is_integer(magnitude)) return magnitude.get_num().get_str() + z;
    return "(" + plain_string(magnitude) + ")" + z;
}

}  // namespace

std::string q_exponent_string(std::int64_t n24) {
    return "q^" + reduced_exponent(n24, 24);
}

std::string zeta_power_string(std::int64_t l2) {
    return "ζ^" + reduced_exponent(l2, 2);
}

std::string slice_string(const Slice& slice) {
    if (slice.empty()) return "0";
    std::string out;
    for (const auto& [l2, c] : slice) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += term_body(magnitude, l2);
    }
    return out;
}

std::vector<std::string> series_lines(const QZSeries& s) {
    std::vector<std::string> lines;
    Slice slice;
    std::int64_t current = 0;
    bool open = false;
    const auto flush = [&] {
        if (!open) return;
        lines.push_back(q_exponent_string(current) + ": " + slice_string(slice));
        slice.clear();
        open = false;
    };
    for (const auto& [key, c] : s.terms()) {
        if (!open || key.n24 != current) {
            flush();
            current = key.n24;
            open = true;
        }
        slice[key.l2] = c;
    }
    flush();
    if (lines.empty()) lines.push_back("0");
    return lines;
}

nlohmann::ordered_json series_to_json(const QZSeries& s) {
    nlohmann::ordered_json j;
    j["weight2"] = s.weight2();
    j["index2"] = s.index2();
    j["trunc24"] = s.trunc24();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [key, c] : s.terms()) {
        nlohmann::ordered_json t;
        t["n24"] = key.n24;
        t["l2"] = key.l2;
        t["c"] = fraction_string(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

QZSeries series_from_json(const nlohmann::json& j) {
    TermMap terms;
    for (const auto& t : j.at("terms"))
        terms.emplace(TermKey{t.at("n24").get<std::int64_t>(),
                              t.at("l2").get<std::int64_t>()},
                      parse_rational(t.at("c").get<std::string>()));
    return QZSeries(j.at("weight2").get<std::int64_t>(),
                    j.at("index2").get<std::int64_t>(),
                    j.at("trunc24").get<std::int64_t>(), false,
                    std::move(terms));
}

}  // namespace wjf
