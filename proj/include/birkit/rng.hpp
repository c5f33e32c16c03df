#ifndef BIRKIT_RNG_HPP
#define BIRKIT_RNG_HPP

#include <cstdint>

#include "birkit/poly.hpp"

namespace birkit {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic generator; trial i of a batch seeded with seed s uses
/// Rng(splitmix64(s ^ (i + 1))) so parallel and serial runs agree.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed ? seed : 0x2545f4914f6cdd1dULL) {}

  uint64_t next() {
    s_ = splitmix64(s_);
    return s_;
  }
  /// Uniform in [0, n).
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  /// Uniform field element; over QQ a small integer in [-9, 9].
  Coeff coeff(const Field& F) {
    if (F.is_prime_field()) return Coeff(static_cast<long>(below(F.modulus())));
    return Coeff(range(-9, 9));
  }
  Coeff nonzero_coeff(const Field& F) {
    while (true) {
      Coeff c = coeff(F);
      if (!F.is_zero(c)) return c;
    }
  }

 private:
  uint64_t s_;
};

/// Random homogeneous form of degree d (possibly zero unless force_nonzero).
inline Poly random_form(const RingPtr& ring, int d, Rng& rng, bool force_nonzero = false) {
  while (true) {
    std::vector<Term> terms;
    for (const Monomial& m : monomials_of_degree(*ring, d)) {
      Coeff c = rng.coeff(ring->F);
      if (!ring->F.is_zero(c)) terms.push_back({m, c});
    }
    Poly f = Poly::from_terms(ring, std::move(terms));
    if (!force_nonzero || !f.is_zero()) return f;
  }
}

}  // namespace birkit

#endif
