#include "oracles.hpp"
#include "supercong/primes.hpp"
#include "supercong/rational.hpp"
#include "supercong/residue.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace supercong;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binom_int(5, 2), 10);
  EXPECT_EQ(binom_int(4, 7), 0);
  EXPECT_EQ(binom_int(4, -1), 0);
  EXPECT_EQ(binom_int(0, 0), 1);
  EXPECT_THROW(binom_int(-1, 0), error);
}

TEST(Binomial, PascalTriangle) {
  const auto table = oracle::pascal(60);
  for (std::int64_t n = 0; n <= 60; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      ASSERT_EQ(binom_int(n, k), table[n][k]) << n << " " << k;
  EXPECT_EQ(binom_int(40, 20), table[40][20]);
  EXPECT_EQ(binom_int(40, 20), BigInt("137846528820"));
  for (std::int64_t n = 1; n <= 60; ++n)
    for (std::int64_t k = 1; k <= n; ++k)
      ASSERT_EQ(binom_int(n, k), binom_int(n - 1, k - 1) + binom_int(n - 1, k));
}

TEST(Binomial, Generalized) {
  EXPECT_EQ(binom_gen(Rational(-1, 2), 0), 1);
  EXPECT_EQ(binom_gen(Rational(-1, 2), 1), Rational(-1, 2));
  EXPECT_EQ(binom_gen(Rational(-1, 2), 2), Rational(3, 8));
  for (std::int64_t m = 0; m <= 40; ++m)
    for (std::int64_t k = 0; k <= 45; ++k)
      ASSERT_EQ(binom_gen(Rational(m), k), Rational(binom_int(m, k))) << m << " " << k;
}

TEST(Binomial, GeneralizedMatchesFallingFactorialOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational x = oracle::random_rational(rng, 30);
    for (std::int64_t k = 0; k < 12; ++k)
      ASSERT_EQ(binom_gen(x, k), oracle::falling_binom(x, k));
  }
}

TEST(Pochhammer, Values) {
  EXPECT_EQ(pochhammer(Rational(3), 2), 12);
  EXPECT_EQ(pochhammer(Rational(-2), 3), 0);
  EXPECT_EQ(pochhammer(Rational(1, 2), 3), Rational(15, 8));
  EXPECT_EQ(pochhammer(Rational(7, 3), 0), 1);
}

TEST(Harmonic, Values) {
  EXPECT_EQ(harmonic(0), 0);
  EXPECT_EQ(harmonic(3), Rational(11, 6));
}

TEST(Harmonic, Wolstenholme) {
  for (std::int64_t p : {5, 7, 11, 13})
    EXPECT_EQ(num(harmonic(p - 1)) % (p * p), 0) << p;
  for (auto p : odd_primes(5, 50))
    EXPECT_TRUE(mod_reduce(harmonic(static_cast<std::int64_t>(p) - 1),
                           static_cast<std::int64_t>(p), 2)
                    .is_zero())
        << p;
  // p = 3 is the exception: H_2 = 3/2.
  EXPECT_FALSE(mod_reduce(harmonic(2), 3, 2).is_zero());
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(-1, 5).value(), 1);
  EXPECT_EQ(legendre(-1, 7).value(), -1);
  EXPECT_EQ(legendre(0, 11).value(), 0);
  EXPECT_THROW(legendre(1, 9), invalid_prime);
  EXPECT_THROW(legendre(1, 2), invalid_prime);
  EXPECT_THROW(legendre(1, 1), invalid_prime);
}

TEST(Legendre, EulerAgreesWithSquareEnumeration) {
  for (auto up : odd_primes(3, 97)) {
    const auto p = static_cast<std::int64_t>(up);
    std::vector<bool> square(static_cast<std::size_t>(p), false);
    for (std::int64_t y = 1; y < p; ++y)
      square[(y * y) % p] = true;
    for (std::int64_t a = 0; a < p; ++a) {
      const int want = a == 0 ? 0 : (square[a] ? 1 : -1);
      ASSERT_EQ(legendre(a, p).value(), want) << a << " mod " << p;
      ASSERT_EQ(legendre(a - 5 * p, p).value(), want);
    }
  }
}

TEST(ModReduce, Examples) {
  EXPECT_EQ(mod_reduce(Rational(1, 2), 5, 2).value(), 13u);
  EXPECT_EQ(mod_reduce(Rational(10), 5, 2).value(), 10u);
  EXPECT_EQ(mod_reduce(Rational(-1), 5, 2).value(), 24u);
  EXPECT_EQ(mod_reduce(Rational(-1, 3), 7, 1).value(), 2u);
  EXPECT_THROW(mod_reduce(Rational(1, 5), 5, 2), non_p_integral);
  EXPECT_THROW(mod_reduce(Rational(3, 10), 5, 1), non_p_integral);
}

TEST(ModReduce, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(11);
  for (std::int64_t p : {3, 5, 7}) {
    for (int e = 1; e <= 3; ++e) {
      for (int trial = 0; trial < 30; ++trial) {
        const Rational q = oracle::random_rational(rng, 200);
        if (den(q) % p == 0)
          continue;
        ASSERT_EQ(mod_reduce(q, p, e).big_value(), oracle::reduce(q, p, e)) << to_string(q);
      }
    }
  }
}

TEST(ModReduce, IsRingMorphism) {
  std::mt19937_64 rng(3);
  for (std::int64_t p : {3, 5, 7, 11}) {
    for (int e = 1; e <= 3; ++e) {
      int checked = 0;
      while (checked < 200) {
        const Rational a = oracle::random_rational(rng, 1000);
        const Rational b = oracle::random_rational(rng, 1000);
        if (den(a) % p == 0 || den(b) % p == 0)
          continue;
        ++checked;
        const auto ra = mod_reduce(a, p, e), rb = mod_reduce(b, p, e);
        ASSERT_EQ(mod_reduce(a + b, p, e), ra + rb);
        ASSERT_EQ(mod_reduce(a * b, p, e), ra * rb);
        ASSERT_EQ(mod_reduce(a - b, p, e), ra - rb);
        ASSERT_EQ(mod_reduce(-a, p, e), -ra);
      }
    }
  }
}

TEST(ModReduce, WideAndNarrowPathsAgree) {
  std::mt19937_64 rng(5);
  for (std::int64_t p : {3, 13, 199}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Rational a = oracle::random_rational(rng, 1 << 20);
      const Rational b = oracle::random_rational(rng, 1 << 20);
      if (den(a) % p == 0 || den(b) % p == 0)
        continue;
      const auto narrow = mod_reduce<std::uint64_t>(a, p, 3) * mod_reduce<std::uint64_t>(b, p, 3);
      const auto wide = mod_reduce<BigInt>(a, p, 3) * mod_reduce<BigInt>(b, p, 3);
      ASSERT_EQ(widen(narrow), wide);
    }
  }
}

TEST(ModInverse, Examples) {
  EXPECT_EQ(mod_inv(Residue(2, 25)).value(), 13u);
  EXPECT_EQ(oracle::inverse(2, 25), 13);
  EXPECT_EQ(mod_inv(Residue(1, 343)).value(), 1u);
  EXPECT_THROW(mod_inv(Residue(7, 49)), not_invertible);
  EXPECT_THROW(mod_inv(Residue(0, 9)), not_invertible);
}

TEST(ModInverse, ExhaustiveSmallModuli) {
  for (std::int64_t m : {9, 25, 27, 49, 121, 125, 343}) {
    for (std::int64_t a = 1; a < m; ++a) {
      const Residue r(a, static_cast<std::uint64_t>(m));
      if (std::gcd(a, m) != 1) {
        EXPECT_THROW(mod_inv(r), not_invertible);
        continue;
      }
      ASSERT_EQ((r * mod_inv(r)).value(), 1u);
      ASSERT_EQ(mod_inv(r).big_value(), oracle::inverse(a, m));
    }
  }
}

TEST(Residue, Arithmetic) {
  const Residue a(20, 25), b(9, 25);
  EXPECT_EQ((a + b).value(), 4u);
  EXPECT_EQ((b - a).value(), 14u);
  EXPECT_EQ((a * b).value(), 5u);
  EXPECT_EQ(Residue(-1, 25).value(), 24u);
  EXPECT_EQ(Residue(2, 125).pow(10).value(), 1024u % 125u);
  EXPECT_THROW(a + Residue(1, 27), error);
}

TEST(Residue, FitsWord) {
  EXPECT_TRUE(fits_word(199, 3));
  EXPECT_TRUE(fits_word(2097143, 3)); // below 2^21, cube below 2^63
  EXPECT_FALSE(fits_word(4294967311, 2));
  EXPECT_THROW(prime_power<std::uint64_t>(4294967311, 2), error);
  EXPECT_EQ(prime_power<BigInt>(4294967311, 2), BigInt(4294967311) * 4294967311);
}

TEST(Primes, MillerRabinMatchesTrialDivision) {
  auto trial = [](std::uint64_t n) {
    if (n < 2)
      return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0)
        return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 20000; ++n)
    ASSERT_EQ(is_prime(n), trial(n)) << n;
  EXPECT_TRUE(is_prime(2305843009213693951ull)); // 2^61 - 1
  EXPECT_FALSE(is_prime(3215031751ull));         // strong pseudoprime to 2, 3, 5, 7
  EXPECT_TRUE(is_prime(18446744073709551557ull));
}

TEST(Primes, SegmentedSieve) {
  PrimeSieve small_windows(3, 2000, 64);
  const auto primes = small_windows.collect();
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 3; n <= 2000; ++n)
    if (is_prime(n))
      expected.push_back(n);
  EXPECT_EQ(primes, expected);
  EXPECT_EQ(odd_primes(3, 50).size(), 14u);
  EXPECT_TRUE(odd_primes(10, 5).empty());
  EXPECT_EQ(odd_primes(1, 10), (std::vector<std::uint64_t>{3, 5, 7}));
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+3"), 3);
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("12345678901234567890/3"),
            Rational(BigInt("12345678901234567890"), 3));
  for (const char *bad : {"", "1/0", "a", "1/-2", " 1/2", "1/2 ", "1//2", "-", "/3"})
    EXPECT_THROW(parse_rational(bad), parse_error) << bad;
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(make_rational(-6, -4), Rational(3, 2));
  EXPECT_THROW(make_rational(1, 0), error);
  EXPECT_EQ(to_string(Rational(0)), "0");
}
