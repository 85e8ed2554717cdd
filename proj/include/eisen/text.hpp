#pragma once

// Text form of ring elements: "a+b√-3" for elements of Z[sqrt(-3)],
// "(m+n√-3)/2" otherwise. The parser also accepts "*sqrt(-3)" and
// "sqrt(-3)" in place of "√-3", and embedded spaces.

#include "eisen/error.hpp"
#include "eisen/integer.hpp"
#include "eisen/ring.hpp"

#include <string>
#include <string_view>

namespace eisen {

inline constexpr std::string_view kSqrtMinus3 = "√-3";

namespace detail {

inline std::string linear_form(const Integer& a, const Integer& b, bool ascii) {
    if (sgn(b) == 0) return to_string(a);
    std::string out;
    if (sgn(a) != 0) out = to_string(a) + (sgn(b) > 0 ? "+" : "-");
    else if (sgn(b) < 0) out = "-";
    const Integer mag = abs(b);
    if (mag != 1) out += to_string(mag) + (ascii ? "*" : "");
    out += ascii ? "sqrt(-3)" : std::string(kSqrtMinus3);
    return out;
}

inline void replace_all(std::string& s, std::string_view from, std::string_view to) {
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
        s.replace(pos, from.size(), to);
}

[[noreturn]] inline void parse_fail(std::string_view text, std::string_view why) {
    throw DomainError(ErrorCode::ParseError, "cannot parse '" + std::string(text) + "': " + std::string(why));
}

// Parses "r", "s#", "r+s#", "r-s#" where '#' marks the radical.
inline std::pair<Integer, Integer> parse_linear(std::string_view body, std::string_view original) {
    if (body.empty()) parse_fail(original, "empty expression");
    Integer rational = 0, radical = 0;
    bool seen_rational = false, seen_radical = false;
    std::size_t i = 0;
    while (i < body.size()) {
        std::size_t j = i + 1;
        while (j < body.size() && body[j] != '+' && body[j] != '-') ++j;
        std::string term(body.substr(i, j - i));
        i = j;
        std::string sign;
        if (term[0] == '+' || term[0] == '-') {
            sign = term.substr(0, 1);
            term.erase(0, 1);
        }
        if (!term.empty() && term.back() == '#') {
            term.pop_back();
            if (seen_radical) parse_fail(original, "two sqrt(-3) terms");
            seen_radical = true;
            if (term.empty()) term = "1";
            auto v = parse_integer(sign + term);
            if (!v) parse_fail(original, "bad coefficient");
            radical = *v;
        } else {
            if (seen_rational || seen_radical) parse_fail(original, "unexpected rational term");
            seen_rational = true;
            auto v = parse_integer(sign + term);
            if (!v) parse_fail(original, "bad integer");
            rational = *v;
        }
    }
    return {rational, radical};
}

}  // namespace detail

inline std::string to_string(const EisensteinInt& z, bool ascii = false) {
    if (auto ab = z.zsqrt3()) return detail::linear_form(ab->first, ab->second, ascii);
    return "(" + detail::linear_form(z.m(), z.n(), ascii) + ")/2";
}

inline EisensteinInt parse_eisenstein(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    detail::replace_all(s, "*sqrt(-3)", "#");
    detail::replace_all(s, "sqrt(-3)", "#");
    detail::replace_all(s, kSqrtMinus3, "#");
    detail::replace_all(s, "*#", "#");
    if (s.size() >= 4 && s.front() == '(' && s.ends_with(")/2")) {
        auto [m, n] = detail::parse_linear(std::string_view(s).substr(1, s.size() - 4), text);
        return EisensteinInt::make(std::move(m), std::move(n));
    }
    auto [a, b] = detail::parse_linear(s, text);
    return EisensteinInt::from_zsqrt3(a, b);
}

}  // namespace eisen
