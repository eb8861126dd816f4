#pragma once

#include "supercong/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace supercong {

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1u)
      result = mulmod64(result, base, m);
    base = mulmod64(base, base, m);
    exp >>= 1;
  }
  return result;
}

} // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases cover all of
/// 64-bit input.
inline bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : small) {
    if (n % q == 0)
      return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : small) {
    std::uint64_t x = detail::powmod64(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

inline void require_odd_prime(std::int64_t p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
    throw invalid_prime(std::to_string(p) + " is not an odd prime");
}

/// Segmented sieve of Eratosthenes walking the primes of [lo, hi] in
/// ascending order, one fixed-size window at a time.
class PrimeSieve {
public:
  PrimeSieve(std::uint64_t lo, std::uint64_t hi, std::uint64_t window = 1u << 15)
      : next_lo_(std::max<std::uint64_t>(lo, 2)), hi_(hi), window_(window) {
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
    std::vector<bool> composite(root + 1, false);
    for (std::uint64_t i = 2; i <= root; ++i) {
      if (composite[i])
        continue;
      base_.push_back(i);
      for (std::uint64_t j = i * i; j <= root; j += i)
        composite[j] = true;
    }
  }

  std::optional<std::uint64_t> next() {
    while (pos_ >= segment_.size()) {
      if (next_lo_ > hi_)
        return std::nullopt;
      fill_segment();
    }
    return segment_[pos_++];
  }

  std::vector<std::uint64_t> collect() {
    std::vector<std::uint64_t> out;
    while (auto q = next())
      out.push_back(*q);
    return out;
  }

private:
  void fill_segment() {
    const std::uint64_t lo = next_lo_;
    const std::uint64_t hi = std::min(hi_, lo + window_ - 1);
    std::vector<bool> composite(hi - lo + 1, false);
    for (auto q : base_) {
      if (q * q > hi)
        break;
      std::uint64_t start = std::max(q * q, (lo + q - 1) / q * q);
      for (std::uint64_t j = start; j <= hi; j += q)
        composite[j - lo] = true;
    }
    segment_.clear();
    pos_ = 0;
    for (std::uint64_t v = lo; v <= hi; ++v)
      if (!composite[v - lo])
        segment_.push_back(v);
    next_lo_ = hi + 1;
  }

  std::uint64_t next_lo_;
  std::uint64_t hi_;
  std::uint64_t window_;
  std::vector<std::uint64_t> base_;
  std::vector<std::uint64_t> segment_;
  std::size_t pos_ = 0;
};

inline std::vector<std::uint64_t> odd_primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  PrimeSieve sieve(std::max<std::uint64_t>(lo, 3), hi);
  while (auto q = sieve.next())
    out.push_back(*q);
  return out;
}

} // namespace supercong
