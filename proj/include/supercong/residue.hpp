#pragma once

#include "supercong/error.hpp"
#include "supercong/primes.hpp"
#include "supercong/rational.hpp"

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>

namespace supercong {

namespace detail {

template <class Word> struct word_ops;

// Fixed-width path: modulus < 2^63 so sums never wrap, products go through
// 128-bit intermediates.
template <> struct word_ops<std::uint64_t> {
  static std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
  }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
  }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return mulmod64(a, b, m);
  }
  static std::uint64_t from_big(const BigInt &v, std::uint64_t m) {
    BigInt r = v % m;
    if (r < 0)
      r += m;
    return r.convert_to<std::uint64_t>();
  }
  static BigInt to_big(std::uint64_t v) { return BigInt(v); }
};

template <> struct word_ops<BigInt> {
  static BigInt add(const BigInt &a, const BigInt &b, const BigInt &m) {
    BigInt s = a + b;
    if (s >= m)
      s -= m;
    return s;
  }
  static BigInt sub(const BigInt &a, const BigInt &b, const BigInt &m) {
    BigInt s = a - b;
    if (s < 0)
      s += m;
    return s;
  }
  static BigInt mul(const BigInt &a, const BigInt &b, const BigInt &m) { return a * b % m; }
  static BigInt from_big(const BigInt &v, const BigInt &m) {
    BigInt r = v % m;
    if (r < 0)
      r += m;
    return r;
  }
  static BigInt to_big(const BigInt &v) { return v; }
};

} // namespace detail

/// Element of Z/(p^e)Z. `Word` is std::uint64_t on the fast path and BigInt
/// when the modulus does not fit below 2^63; both expose the same interface.
template <class Word> class basic_residue {
  using ops = detail::word_ops<Word>;

public:
  using word_type = Word;

  basic_residue() : value_(0), modulus_(1) {}

  basic_residue(const BigInt &value, const Word &modulus)
      : value_(ops::from_big(value, modulus)), modulus_(modulus) {}

  template <std::integral I>
  basic_residue(I value, const Word &modulus)
      : value_(reduce_integral(value, modulus)), modulus_(modulus) {}

  const Word &value() const noexcept { return value_; }
  const Word &modulus() const noexcept { return modulus_; }

  BigInt big_value() const { return ops::to_big(value_); }
  BigInt big_modulus() const { return ops::to_big(modulus_); }

  bool is_zero() const { return value_ == 0; }

  basic_residue &operator+=(const basic_residue &o) {
    check(o);
    value_ = ops::add(value_, o.value_, modulus_);
    return *this;
  }
  basic_residue &operator-=(const basic_residue &o) {
    check(o);
    value_ = ops::sub(value_, o.value_, modulus_);
    return *this;
  }
  basic_residue &operator*=(const basic_residue &o) {
    check(o);
    value_ = ops::mul(value_, o.value_, modulus_);
    return *this;
  }

  friend basic_residue operator+(basic_residue a, const basic_residue &b) { return a += b; }
  friend basic_residue operator-(basic_residue a, const basic_residue &b) { return a -= b; }
  friend basic_residue operator*(basic_residue a, const basic_residue &b) { return a *= b; }
  friend basic_residue operator-(const basic_residue &a) {
    return basic_residue(Word(0), a.modulus_) - a;
  }

  friend bool operator==(const basic_residue &a, const basic_residue &b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

  basic_residue pow(std::uint64_t exp) const {
    basic_residue result(Word(1), modulus_);
    basic_residue base = *this;
    while (exp) {
      if (exp & 1u)
        result *= base;
      base *= base;
      exp >>= 1;
    }
    return result;
  }

  std::string str() const { return big_value().str(); }

private:
  template <std::integral I> static Word reduce_integral(I v, const Word &m) {
    if constexpr (std::is_same_v<Word, std::uint64_t>) {
      if constexpr (std::is_signed_v<I>) {
        auto r = static_cast<std::int64_t>(v) % static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
      } else {
        return static_cast<std::uint64_t>(v) % m;
      }
    } else {
      return ops::from_big(BigInt(v), m);
    }
  }

  void check(const basic_residue &o) const {
    if (o.modulus_ != modulus_)
      throw error("residue modulus mismatch");
  }

  Word value_;
  Word modulus_;
};

using Residue = basic_residue<std::uint64_t>;
using BigResidue = basic_residue<BigInt>;

template <class Word> BigResidue widen(const basic_residue<Word> &r) {
  return BigResidue(r.big_value(), r.big_modulus());
}

inline BigInt prime_power_big(std::int64_t p, int e) {
  BigInt q = 1;
  for (int i = 0; i < e; ++i)
    q *= p;
  return q;
}

/// True when p^e stays below 2^63 and the fixed-width kernels apply.
inline bool fits_word(std::int64_t p, int e) {
  return prime_power_big(p, e) < (BigInt(1) << 63);
}

template <class Word> Word prime_power(std::int64_t p, int e) {
  if constexpr (std::is_same_v<Word, BigInt>) {
    return prime_power_big(p, e);
  } else {
    if (!fits_word(p, e))
      throw error("p^e exceeds the fixed-width range");
    return prime_power_big(p, e).template convert_to<std::uint64_t>();
  }
}

template <class Word> basic_residue<Word> mod_inv(const basic_residue<Word> &a) {
  BigInt m = a.big_modulus();
  BigInt r0 = m, r1 = a.big_value();
  BigInt s0 = 0, s1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1)
    throw not_invertible(a.str() + " is not invertible mod " + m.str());
  return basic_residue<Word>(s0, a.modulus());
}

/// Reduces a p-integral rational into Z/(p^e)Z.
template <class Word = std::uint64_t>
basic_residue<Word> mod_reduce(const Rational &q, std::int64_t p, int e) {
  const BigInt d = den(q);
  if (d % p == 0)
    throw non_p_integral(to_string(q) + " is not " + std::to_string(p) + "-integral");
  const Word modulus = prime_power<Word>(p, e);
  basic_residue<Word> n(num(q), modulus);
  return n * mod_inv(basic_residue<Word>(d, modulus));
}

/// p-adic valuation of a nonzero integer.
inline int valuation(BigInt n, std::int64_t p) {
  if (n == 0)
    throw error("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

class LegendreValue {
public:
  constexpr explicit LegendreValue(int v) : value_(v) {}
  constexpr int value() const noexcept { return value_; }
  friend constexpr bool operator==(LegendreValue, LegendreValue) = default;

private:
  int value_;
};

/// Legendre symbol (a/p) via Euler's criterion.
inline LegendreValue legendre(std::int64_t a, std::int64_t p) {
  require_odd_prime(p);
  const auto up = static_cast<std::uint64_t>(p);
  std::int64_t r = a % p;
  if (r < 0)
    r += p;
  if (r == 0)
    return LegendreValue(0);
  const auto e = detail::powmod64(static_cast<std::uint64_t>(r), (up - 1) / 2, up);
  return LegendreValue(e == 1 ? 1 : -1);
}

} // namespace supercong
