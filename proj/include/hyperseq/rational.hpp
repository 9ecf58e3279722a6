#ifndef HYPERSEQ_RATIONAL_HPP
#define HYPERSEQ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperseq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& z) { return z.sign(); }

inline Rational rat(long long p, long long q = 1) { return Rational(p, q); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Smallest integer >= q.
inline Integer ceil_int(const Rational& q) {
    Integer n = numerator(q) / denominator(q);
    if (n * denominator(q) < numerator(q)) ++n;
    return n;
}

/// Largest integer <= q.
inline Integer floor_int(const Rational& q) {
    Integer n = numerator(q) / denominator(q);
    if (n * denominator(q) > numerator(q)) --n;
    return n;
}

/// True iff q is an integer.
inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Lowest-terms "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& q);

/// Parses "p", "-p", or "p/q" (whitespace-trimmed). Empty optional on malformed input.
std::optional<Rational> try_parse_rational(std::string_view text);

/// Like try_parse_rational but throws std::invalid_argument.
Rational parse_rational(std::string_view text);

} // namespace hyperseq

#endif
