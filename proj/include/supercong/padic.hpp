#pragma once

#include "supercong/error.hpp"
#include "supercong/primes.hpp"
#include "supercong/rational.hpp"
#include "supercong/residue.hpp"

#include <cstdint>

namespace supercong {

/// A p-integral rational split as x = m + p t with m = <x>_p in [0, p).
/// t is kept exact; its residues are taken on demand.
struct PadicRational {
  Rational x;
  std::int64_t p = 0;
  std::int64_t m = 0;
  Rational t;

  template <class Word = std::uint64_t> basic_residue<Word> t_mod(int e) const {
    return mod_reduce<Word>(t, p, e);
  }

  /// True when 2x = -1 (mod p), i.e. m = (p-1)/2.
  bool is_half_class() const { return 2 * m + 1 == p; }

  bool lower_half() const { return 2 * m <= p - 1; }
  bool strictly_lower_half() const { return 2 * m < p - 1; }
};

inline PadicRational padic_split(const Rational &x, std::int64_t p) {
  require_odd_prime(p);
  const auto r = mod_reduce<BigInt>(x, p, 1);
  const auto m = r.value().convert_to<std::int64_t>();
  return PadicRational{x, p, m, (x - m) / p};
}

/// x -> -1 - x, which maps <x>_p = m to p - 1 - m.
inline PadicRational reflect(const PadicRational &px) { return padic_split(-1 - px.x, px.p); }

/// Returns px itself when m <= (p-1)/2, otherwise its reflection.
inline PadicRational to_lower_half(const PadicRational &px) {
  return px.lower_half() ? px : reflect(px);
}

} // namespace supercong
