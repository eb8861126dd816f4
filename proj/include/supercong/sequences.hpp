#pragma once

#include "supercong/error.hpp"
#include "supercong/rational.hpp"
#include "supercong/residue.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace supercong {

/// S_n(x, y) = sum_k C(n,k) C(x,k) C(-1-x,k) y^k, evaluated term by term from
/// the generalized binomials.
inline Rational S_poly(std::int64_t n, const Rational &x, const Rational &y) {
  if (n < 0)
    throw error("S_poly: negative n");
  const Rational reflected = -1 - x;
  Rational sum = 0;
  Rational y_pow = 1;
  for (std::int64_t k = 0; k <= n; ++k) {
    sum += Rational(binom_int(n, k)) * binom_gen(x, k) * binom_gen(reflected, k) * y_pow;
    y_pow *= y;
  }
  return sum;
}

namespace detail {

// sum_k C(n,k) C(x,k) C(x+k,k) c^k with the two binomials advanced
// incrementally: C(x,k) = C(x,k-1)(x-k+1)/k, C(x+k,k) = C(x+k-1,k-1)(x+k)/k.
inline Rational apery_like(std::int64_t n, const Rational &x, const Rational &c) {
  if (n < 0)
    throw error("negative index");
  Rational weight = 1;
  Rational sum = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    weight *= c * (x - (k - 1)) * (x + k) / (BigInt(k) * k);
    if (weight == 0)
      break;
    sum += Rational(binom_int(n, k)) * weight;
  }
  return sum;
}

} // namespace detail

/// t_n(x) = sum_k C(n,k) C(x,k) C(x+k,k) 2^k.
inline Rational t_seq(std::int64_t n, const Rational &x) { return detail::apery_like(n, x, 2); }

/// s_n(x) = S_n(x, -1).
inline Rational s_seq(std::int64_t n, const Rational &x) { return detail::apery_like(n, x, 1); }

/// Kimoto-Wakayama numbers: sum_k C(n,k) (-1)^k C(-1/2,k)^2.
inline Rational j2(std::int64_t n) {
  if (n < 0)
    throw error("j2: negative n");
  const Rational half(-1, 2);
  Rational sum = 0;
  Rational b = 1; // C(-1/2, k)
  for (std::int64_t k = 0; k <= n; ++k) {
    if (k > 0)
      b *= (half - (k - 1)) / k;
    sum += Rational(binom_int(n, k)) * b * b * sign_pow(k);
  }
  return sum;
}

inline bool t_symmetry_check(std::int64_t n, const Rational &x) {
  return t_seq(n, x) == t_seq(n, -1 - x);
}

namespace detail {

inline Rational legendre_poly_sum(std::int64_t n, const Rational &z) {
  Rational sum = 0;
  Rational z_pow = 1;
  for (std::int64_t k = 0; k <= n; ++k) {
    sum += Rational(binom_int(n, k) * binom_int(n + k, k)) * z_pow;
    z_pow *= z;
  }
  return sum;
}

} // namespace detail

/// Pfaff reflection sum C(n,k)C(n+k,k)(-z)^k = (-1)^n sum C(n,k)C(n+k,k)(z-1)^k.
inline bool pfaff_check(std::int64_t n, const Rational &z) {
  if (n < 0)
    throw error("pfaff_check: negative n");
  return detail::legendre_poly_sum(n, -z) == sign_pow(n) * detail::legendre_poly_sum(n, z - 1);
}

/// Table of S_n(x, y) mod p^e for n in [0, count).
template <class Word = std::uint64_t> struct SequenceTable {
  std::int64_t p = 0;
  int e = 0;
  Rational x;
  Rational y;
  std::vector<basic_residue<Word>> values;

  const basic_residue<Word> &operator[](std::size_t n) const { return values.at(n); }
  std::size_t size() const { return values.size(); }
};

/// w_k = C(x,k) C(x+k,k) (-y)^k mod p^e for k in [0, count), built from
/// w_k = w_{k-1} (-y)(x-k+1)(x+k) / k^2.
template <class Word = std::uint64_t>
std::vector<basic_residue<Word>> weight_table(std::int64_t p, int e, const Rational &x,
                                              const Rational &y, std::size_t count) {
  using R = basic_residue<Word>;
  const Word modulus = prime_power<Word>(p, e);
  const R xr = mod_reduce<Word>(x, p, e);
  const R c = mod_reduce<Word>(-y, p, e);
  std::vector<R> w;
  w.reserve(count);
  if (count == 0)
    return w;
  w.emplace_back(1, modulus);
  for (std::size_t k = 1; k < count; ++k) {
    const auto sk = static_cast<std::int64_t>(k);
    if (sk % p == 0)
      throw degenerate("weight recurrence divides by k^2 with p | k (k=" + std::to_string(k) + ")");
    const R factor = c * (xr - R(sk - 1, modulus)) * (xr + R(sk, modulus));
    const R k2 = R(sk, modulus) * R(sk, modulus);
    w.push_back(w.back() * factor * mod_inv(k2));
  }
  return w;
}

/// S_n(x, y) mod p^e for n in [0, count) from S_n = sum_k C(n,k) w_k with a
/// running Pascal row; O(count^2) residue multiplies.
template <class Word = std::uint64_t>
SequenceTable<Word> S_table_mod(std::int64_t p, int e, const Rational &x, const Rational &y,
                                std::optional<std::size_t> count = std::nullopt) {
  require_odd_prime(p);
  if (e < 1 || e > 3)
    throw error("exponent must be 1, 2 or 3");
  using R = basic_residue<Word>;
  const std::size_t len = count.value_or(static_cast<std::size_t>(p));
  const Word modulus = prime_power<Word>(p, e);
  const auto w = weight_table<Word>(p, e, x, y, len);

  SequenceTable<Word> table{p, e, x, y, {}};
  table.values.reserve(len);
  std::vector<R> row{R(1, modulus)};
  row.reserve(len);
  for (std::size_t n = 0; n < len; ++n) {
    if (n > 0) {
      row.emplace_back(1, modulus);
      for (std::size_t k = n - 1; k >= 1; --k)
        row[k] += row[k - 1];
    }
    R acc(0, modulus);
    for (std::size_t k = 0; k <= n; ++k)
      acc += row[k] * w[k];
    table.values.push_back(acc);
  }
  return table;
}

template <class Word = std::uint64_t>
SequenceTable<Word> t_table_mod(std::int64_t p, int e, const Rational &x,
                                std::optional<std::size_t> count = std::nullopt) {
  return S_table_mod<Word>(p, e, x, Rational(-2), count);
}

template <class Word = std::uint64_t>
SequenceTable<Word> s_table_mod(std::int64_t p, int e, const Rational &x,
                                std::optional<std::size_t> count = std::nullopt) {
  return S_table_mod<Word>(p, e, x, Rational(-1), count);
}

/// Exact S_n(x, y) for the rows the oracle recomputes.
inline Rational exact_row(std::int64_t n, const Rational &x, const Rational &y) {
  return detail::apery_like(n, x, -y);
}

/// Recomputes the listed rows exactly and returns the first row whose
/// reduction disagrees with the table.
template <class Word>
std::optional<std::size_t> oracle_mismatch(const SequenceTable<Word> &table,
                                           const std::vector<std::size_t> &rows) {
  for (auto n : rows) {
    const Rational exact = exact_row(static_cast<std::int64_t>(n), table.x, table.y);
    if (widen(mod_reduce<Word>(exact, table.p, table.e)) != widen(table[n]))
      return n;
  }
  return std::nullopt;
}

} // namespace supercong
