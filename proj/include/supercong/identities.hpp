#pragma once

#include "supercong/error.hpp"
#include "supercong/rational.hpp"
#include "supercong/sequences.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace supercong {

namespace detail {

// C(n,k) C(n+k,k) for k in [0, n].
inline std::vector<BigInt> shifted_legendre_coeffs(std::int64_t n) {
  std::vector<BigInt> a;
  a.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k)
    a.push_back(binom_int(n, k) * binom_int(n + k, k));
  return a;
}

template <class Kernel> Rational symmetric_double_sum(std::int64_t n, Kernel kernel) {
  const auto a = shifted_legendre_coeffs(n);
  Rational sum = 0;
  for (std::int64_t k = 0; k <= n; ++k)
    for (std::int64_t l = 0; l <= n; ++l)
      sum += Rational(a[k] * a[l]) * kernel(k, l);
  return sum;
}

} // namespace detail

/// sum_{k,l<=n} C(n,k)C(n+k,k)C(n,l)C(n+l,l) (-2)^{k+l} / ((k+l+1) C(k+l,k))
inline Rational lemma22_double_sum(std::int64_t n) {
  if (n < 0)
    throw error("lemma22_double_sum: negative n");
  return detail::symmetric_double_sum(n, [](std::int64_t k, std::int64_t l) {
    const BigInt pow2 = BigInt(1) << static_cast<unsigned>(k + l);
    return Rational(sign_pow(k + l) * pow2, (k + l + 1) * binom_int(k + l, k));
  });
}

inline Rational lemma22_closed_form(std::int64_t n) { return Rational(sign_pow(n), 2 * n + 1); }

/// sum_{k,l<=n} C(n,k)C(n+k,k)C(n,l)C(n+l,l) (-2)^{k+l} / C(k+l+2,k+1)
inline Rational lemma32_double_sum(std::int64_t n) {
  if (n < 0)
    throw error("lemma32_double_sum: negative n");
  return detail::symmetric_double_sum(n, [](std::int64_t k, std::int64_t l) {
    const BigInt pow2 = BigInt(1) << static_cast<unsigned>(k + l);
    return Rational(sign_pow(k + l) * pow2, binom_int(k + l + 2, k + 1));
  });
}

inline Rational lemma32_closed_form(std::int64_t n) {
  return Rational(1, 4) - Rational(sign_pow(n) * (2 * n * n + 2 * n - 1), 8 * n + 4);
}

/// The intermediate sum C(n,k)C(n+k,k)C(n,l)C(n+l,l)(-1)^l/(k+l+1), whose
/// value is (-1)^n/(2n+1) as well.
inline Rational alternating_reciprocal_double_sum(std::int64_t n) {
  return detail::symmetric_double_sum(n, [](std::int64_t k, std::int64_t l) {
    return Rational(sign_pow(l), k + l + 1);
  });
}

inline Rational pfd_lhs(std::int64_t n, const Rational &x) {
  Rational sum = 0;
  for (std::int64_t l = 0; l <= n; ++l)
    sum += Rational(sign_pow(l) * binom_int(n + l, l) * binom_int(n, l)) / (x + l);
  return sum;
}

inline Rational pfd_rhs(std::int64_t n, const Rational &x) {
  return pochhammer(1 - x, n) / pochhammer(x, n + 1);
}

/// sum_l (-1)^l C(n+l,l)C(n,l)/(x+l) = (1-x)_n / (x)_{n+1}
inline bool pfd_check(std::int64_t n, const Rational &x) {
  if (n < 0)
    throw error("pfd_check: negative n");
  if (is_integer(x) && x <= 0 && x >= -n)
    throw pole_error("x = " + to_string(x) + " is a pole for n = " + std::to_string(n));
  return pfd_lhs(n, x) == pfd_rhs(n, x);
}

/// sum_{n<=k+l} (-1)^n/(n+2) C(n,l) C(l,n-k)
inline Rational lemma31_sum(std::int64_t k, std::int64_t l) {
  Rational sum = 0;
  for (std::int64_t n = 0; n <= k + l; ++n)
    sum += Rational(sign_pow(n) * binom_int(n, l) * binom_int(l, n - k), n + 2);
  return sum;
}

inline Rational lemma31_closed_form(std::int64_t k, std::int64_t l) {
  return Rational(BigInt(sign_pow(k + l)), binom_int(k + l + 2, l + 1));
}

/// sum_{n<=k+l} (-1)^n/(n+1) C(n,l) C(l,n-k)
inline Rational liu22_sum(std::int64_t k, std::int64_t l) {
  Rational sum = 0;
  for (std::int64_t n = 0; n <= k + l; ++n)
    sum += Rational(sign_pow(n) * binom_int(n, l) * binom_int(l, n - k), n + 1);
  return sum;
}

inline Rational liu22_closed_form(std::int64_t k, std::int64_t l) {
  return Rational(BigInt(sign_pow(k + l)), (l + k + 1) * binom_int(l + k, l));
}

/// Both sides of sum_{n<N} C(n,k)C(n,l) = N sum_{n<=k+l} C(n,l)C(l,n-k)C(N-1,n)/(n+1).
inline std::pair<Rational, Rational> binom_conv_sum(std::int64_t N, std::int64_t k,
                                                    std::int64_t l) {
  if (N < 1)
    throw error("binom_conv_sum: N must be positive");
  Rational lhs = 0;
  for (std::int64_t n = 0; n < N; ++n)
    lhs += Rational(binom_int(n, k) * binom_int(n, l));
  Rational rhs = 0;
  for (std::int64_t n = 0; n <= k + l; ++n)
    rhs += Rational(binom_int(n, l) * binom_int(l, n - k) * binom_int(N - 1, n), n + 1);
  return {lhs, rhs * N};
}

/// Both sides of sum_{n<N} (n+1)C(n,k)C(n,l)
///   = sum_{n<=k+l} N(N+1)/(n+2) C(n,l)C(l,n-k)C(N-1,n).
inline std::pair<Rational, Rational> weighted_binom_conv_sum(std::int64_t N, std::int64_t k,
                                                             std::int64_t l) {
  if (N < 1)
    throw error("weighted_binom_conv_sum: N must be positive");
  Rational lhs = 0;
  for (std::int64_t n = 0; n < N; ++n)
    lhs += Rational((n + 1) * binom_int(n, k) * binom_int(n, l));
  Rational rhs = 0;
  for (std::int64_t n = 0; n <= k + l; ++n)
    rhs += Rational(binom_int(n, l) * binom_int(l, n - k) * binom_int(N - 1, n), n + 2);
  return {lhs, rhs * (BigInt(N) * (N + 1))};
}

/// z-derivative of the Pfaff reflection.
inline bool pfaff_derivative_check(std::int64_t n, const Rational &z) {
  if (n < 1)
    throw error("pfaff_derivative_check: n must be positive");
  Rational lhs = 0, rhs = 0;
  Rational lhs_pow = 1, rhs_pow = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    const Rational c(binom_int(n, k) * binom_int(n + k, k) * k);
    lhs += c * lhs_pow;
    rhs += c * rhs_pow;
    lhs_pow *= -z;
    rhs_pow *= z - 1;
  }
  return lhs == sign_pow(n - 1) * rhs;
}

struct IdentityResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool pass() const { return failures == 0; }
};

struct IdentitySuiteOptions {
  std::int64_t double_sum_nmax = 40;
  std::int64_t kl_max = 15;
  std::int64_t conv_N_max = 12;
  std::int64_t conv_kl_max = 8;
  std::int64_t conv_prime_max = 31;
  std::int64_t pfaff_nmax = 30;
  std::int64_t pfaff_derivative_nmax = 25;
  std::int64_t pfd_nmax = 20;
  std::int64_t intermediate_nmax = 25;
  std::size_t random_points = 20;
  std::uint64_t seed = 20240521;
};

namespace detail {

/// Reproducible rationals a/b with |a| <= bound, 1 <= b <= bound.
inline std::vector<Rational> sample_rationals(std::mt19937_64 &rng, std::size_t count,
                                              std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> num(-bound, bound);
  std::uniform_int_distribution<std::int64_t> den(1, bound);
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational q(num(rng), den(rng));
    bool fresh = true;
    for (const auto &o : out)
      fresh = fresh && o != q;
    if (fresh)
      out.push_back(q);
  }
  return out;
}

class IdentityTally {
public:
  explicit IdentityTally(std::string name) { result_.name = std::move(name); }

  void record(bool ok, const std::function<std::string()> &describe) {
    ++result_.cases;
    if (!ok) {
      if (result_.failures == 0)
        result_.first_failure = describe();
      ++result_.failures;
    }
  }

  IdentityResult done() { return std::move(result_); }

private:
  IdentityResult result_;
};

} // namespace detail

/// Runs every standalone identity over its grid in exact arithmetic.
inline std::vector<IdentityResult> run_identity_suite(const IdentitySuiteOptions &opt = {}) {
  std::vector<IdentityResult> out;
  std::mt19937_64 rng(opt.seed);

  {
    detail::IdentityTally tally("lemma22_double_sum");
    for (std::int64_t n = 0; n <= opt.double_sum_nmax; ++n)
      tally.record(lemma22_double_sum(n) == lemma22_closed_form(n),
                   [&] { return "n=" + std::to_string(n); });
    out.push_back(tally.done());
  }
  {
    detail::IdentityTally tally("lemma32_double_sum");
    for (std::int64_t n = 0; n <= opt.double_sum_nmax; ++n)
      tally.record(lemma32_double_sum(n) == lemma32_closed_form(n),
                   [&] { return "n=" + std::to_string(n); });
    out.push_back(tally.done());
  }
  {
    detail::IdentityTally tally("alternating_reciprocal_double_sum");
    for (std::int64_t n = 0; n <= opt.intermediate_nmax; ++n)
      tally.record(alternating_reciprocal_double_sum(n) == lemma22_closed_form(n),
                   [&] { return "n=" + std::to_string(n); });
    out.push_back(tally.done());
  }
  {
    detail::IdentityTally tally("pfd");
    for (std::int64_t n = 0; n <= opt.kl_max; ++n) {
      // x = k+1 covers the vanishing (k < n) and the diagonal (k = n) cases.
      for (std::int64_t k = 0; k <= opt.kl_max; ++k)
        tally.record(pfd_check(n, Rational(k + 1)),
                     [&] { return "n=" + std::to_string(n) + " x=" + std::to_string(k + 1); });
    }
    for (std::int64_t n = 0; n <= opt.pfd_nmax; ++n) {
      std::size_t used = 0;
      for (const auto &x : detail::sample_rationals(rng, 2 * opt.random_points, 30)) {
        if (used == opt.random_points)
          break;
        if (is_integer(x) && x <= 0 && x >= -n)
          continue;
        ++used;
        tally.record(pfd_check(n, x),
                     [&] { return "n=" + std::to_string(n) + " x=" + to_string(x); });
      }
    }
    out.push_back(tally.done());
  }
  {
    detail::IdentityTally l31("lemma31_sum");
    detail::IdentityTally liu("liu22_sum");
    for (std::int64_t k = 0; k <= opt.kl_max; ++k)
      for (std::int64_t l = 0; l <= opt.kl_max; ++l) {
        auto where = [&] { return "k=" + std::to_string(k) + " l=" + std::to_string(l); };
        l31.record(lemma31_sum(k, l) == lemma31_closed_form(k, l), where);
        liu.record(liu22_sum(k, l) == liu22_closed_form(k, l), where);
      }
    out.push_back(l31.done());
    out.push_back(liu.done());
  }
  {
    detail::IdentityTally plain("binom_conv_sum");
    detail::IdentityTally weighted("weighted_binom_conv_sum");
    auto run = [&](std::int64_t N, std::int64_t kl_max) {
      for (std::int64_t k = 0; k <= kl_max; ++k)
        for (std::int64_t l = 0; l <= kl_max; ++l) {
          auto where = [&] {
            return "N=" + std::to_string(N) + " k=" + std::to_string(k) + " l=" +
                   std::to_string(l);
          };
          auto [a, b] = binom_conv_sum(N, k, l);
          plain.record(a == b, where);
          auto [c, d] = weighted_binom_conv_sum(N, k, l);
          weighted.record(c == d, where);
        }
    };
    for (std::int64_t N = 1; N <= opt.conv_N_max; ++N)
      run(N, opt.conv_kl_max);
    for (auto p : odd_primes(3, static_cast<std::uint64_t>(opt.conv_prime_max)))
      run(static_cast<std::int64_t>(p), static_cast<std::int64_t>(p) - 1);
    out.push_back(plain.done());
    out.push_back(weighted.done());
  }
  {
    detail::IdentityTally tally("pfaff");
    for (std::int64_t n = 0; n <= opt.pfaff_nmax; ++n) {
      std::vector<Rational> points = {Rational(17, 5), Rational(1, 2)};
      // n+1 distinct points already pin a degree-n polynomial.
      for (std::int64_t j = 0; j <= n + 1; ++j)
        points.emplace_back(2 * j - 5, 3);
      for (const auto &z : detail::sample_rationals(rng, opt.random_points, 25))
        points.push_back(z);
      for (const auto &z : points)
        tally.record(pfaff_check(n, z),
                     [&] { return "n=" + std::to_string(n) + " z=" + to_string(z); });
    }
    out.push_back(tally.done());
  }
  {
    detail::IdentityTally tally("pfaff_derivative");
    for (std::int64_t n = 1; n <= opt.pfaff_derivative_nmax; ++n) {
      std::vector<Rational> points = {Rational(3, 7), Rational(-2)};
      for (std::int64_t j = 0; j <= n + 1; ++j)
        points.emplace_back(3 * j - 7, 4);
      for (const auto &z : points)
        tally.record(pfaff_derivative_check(n, z),
                     [&] { return "n=" + std::to_string(n) + " z=" + to_string(z); });
    }
    out.push_back(tally.done());
  }
  {
    detail::IdentityTally tally("t_symmetry");
    const auto xs = detail::sample_rationals(rng, opt.random_points, 20);
    for (std::int64_t n = 0; n <= opt.pfaff_nmax; ++n) {
      for (const auto &x : xs)
        tally.record(t_symmetry_check(n, x),
                     [&] { return "n=" + std::to_string(n) + " x=" + to_string(x); });
    }
    out.push_back(tally.done());
  }
  return out;
}

} // namespace supercong
