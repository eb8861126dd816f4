#pragma once

#include "supercong/error.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace supercong {

using BigInt = boost::multiprecision::mpz_int;

/// Exact signed fraction, always kept in lowest terms with a positive
/// denominator (GMP canonicalizes after every operation).
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(const BigInt &num, const BigInt &den = 1) {
  if (den == 0)
    throw error("rational with zero denominator");
  // Rational(int, int) reads a negative denominator as unsigned; keep it positive.
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

inline BigInt num(const Rational &q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational &q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational &q) { return den(q) == 1; }

inline std::string to_string(const Rational &q) {
  if (is_integer(q))
    return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

/// Parses "a/b" or "a" with an optional leading sign and no whitespace.
inline Rational parse_rational(std::string_view text) {
  auto digits = [&](std::string_view s, bool allow_sign) {
    if (s.empty())
      return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
      ++i;
    if (i == s.size())
      return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        return false;
    return true;
  };
  auto to_big = [](std::string_view s) {
    if (!s.empty() && s[0] == '+')
      s.remove_prefix(1);
    return BigInt(std::string(s));
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!digits(text, true))
      throw parse_error("malformed rational '" + std::string(text) + "'");
    return Rational(to_big(text));
  }
  auto a = text.substr(0, slash);
  auto b = text.substr(slash + 1);
  if (!digits(a, true) || !digits(b, false))
    throw parse_error("malformed rational '" + std::string(text) + "'");
  BigInt d = to_big(b);
  if (d == 0)
    throw parse_error("zero denominator in '" + std::string(text) + "'");
  return Rational(to_big(a), d);
}

inline Rational ipow(const Rational &base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent) {
    if (exponent & 1u)
      result *= b;
    exponent >>= 1;
    if (exponent)
      b *= b;
  }
  return result;
}

inline int sign_pow(std::int64_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

/// C(n, k) for n >= 0, extended by zero outside 0 <= k <= n.
inline BigInt binom_int(std::int64_t n, std::int64_t k) {
  if (n < 0)
    throw error("binom_int: negative n");
  if (k < 0 || k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  BigInt result;
  mpz_bin_uiui(result.backend().data(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

/// Generalized binomial x(x-1)...(x-k+1)/k! for rational x.
inline Rational binom_gen(const Rational &x, std::int64_t k) {
  if (k < 0)
    throw error("binom_gen: negative k");
  Rational falling = 1;
  BigInt factorial = 1;
  for (std::int64_t j = 0; j < k; ++j) {
    falling *= x - j;
    factorial *= j + 1;
  }
  return falling / factorial;
}

/// Rising factorial (x)_k = x(x+1)...(x+k-1).
inline Rational pochhammer(const Rational &x, std::int64_t k) {
  if (k < 0)
    throw error("pochhammer: negative k");
  Rational result = 1;
  for (std::int64_t j = 0; j < k; ++j)
    result *= x + j;
  return result;
}

inline Rational harmonic(std::int64_t n) {
  if (n < 0)
    throw error("harmonic: negative n");
  Rational h = 0;
  for (std::int64_t j = 1; j <= n; ++j)
    h += Rational(1, j);
  return h;
}

} // namespace supercong
