#include "hyperseq/rational.hpp"

#include <cctype>

namespace hyperseq {

std::string format_rational(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<Integer> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) return std::nullopt;
    Integer v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + (c - '0');
    }
    return neg ? Integer(-v) : v;
}

} // namespace

std::optional<Rational> try_parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto p = parse_int(text);
        if (!p) return std::nullopt;
        return Rational(*p);
    }
    auto p = parse_int(trim(text.substr(0, slash)));
    auto q = parse_int(trim(text.substr(slash + 1)));
    if (!p || !q || *q == 0) return std::nullopt;
    return Rational(*p, *q);
}

Rational parse_rational(std::string_view text) {
    auto r = try_parse_rational(text);
    if (!r) throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    return *r;
}

} // namespace hyperseq
