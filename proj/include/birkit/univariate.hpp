#ifndef BIRKIT_UNIVARIATE_HPP
#define BIRKIT_UNIVARIATE_HPP

#include <cstdint>
#include <vector>

#include "birkit/rng.hpp"

namespace birkit {

/// Dense univariate polynomial over GF(p), coefficient of x^i at index i.
using UniPoly = std::vector<long>;

UniPoly uni_trim(UniPoly f);
int uni_degree(const UniPoly& f);  // -1 for zero
UniPoly uni_mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& mod, long p);
UniPoly uni_rem(UniPoly a, const UniPoly& b, long p);
UniPoly uni_gcd(UniPoly a, UniPoly b, long p);
/// (x + shift)^e mod f.
UniPoly uni_powmod_linear(long shift, const mpz_class& e, const UniPoly& f, long p);

/// All roots in GF(p), ascending, without multiplicity.
std::vector<long> uni_roots(const UniPoly& f, long p, Rng& rng);

}  // namespace birkit

#endif
