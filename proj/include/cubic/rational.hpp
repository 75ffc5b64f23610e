#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace cubic {

// Exact rational scalars. mpq_class keeps values canonical: lowest terms,
// denominator > 0, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::string rational_to_string(const Rational& r);

// Parses "p", "-p", "p/q"; nullopt on malformed input or q == 0.
std::optional<Rational> rational_from_string(const std::string& s);

// Exact cube root when the rational is a perfect cube, else nullopt.
std::optional<Rational> exact_cube_root(const Rational& r);

// r mod p as a least nonnegative residue; nullopt when p divides the
// denominator.
std::optional<std::uint32_t> mod_reduce(const Rational& r, std::uint32_t p);

}  // namespace cubic
