#ifndef HOLOZETA_RATIONAL_HPP
#define HOLOZETA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace holozeta {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p", "p/q". Throws InputError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// floor(q) as an Integer.
Integer floor(const Rational& q);

}  // namespace holozeta

#endif  // HOLOZETA_RATIONAL_HPP
