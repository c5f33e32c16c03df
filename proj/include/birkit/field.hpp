#ifndef BIRKIT_FIELD_HPP
#define BIRKIT_FIELD_HPP

#include <gmpxx.h>

#include <string>

#include "birkit/errors.hpp"

namespace birkit {

// All coefficient arithmetic is exact. Over the rationals a coefficient is an
// arbitrary mpq; over a prime field it is an integer in [0, p) with
// denominator 1.
using Coeff = mpq_class;

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  long p = 0;  // prime modulus, set iff kind == PrimeField

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec prime(long p);

  bool operator==(const FieldSpec&) const = default;
  std::string name() const;
};

bool is_prime_long(long n);
long mod_inverse(long a, long p);

/// Coefficient operations for a fixed FieldSpec.
class Field {
 public:
  Field() : spec_(FieldSpec::rationals()) {}
  explicit Field(FieldSpec s) : spec_(s) {}

  const FieldSpec& spec() const { return spec_; }
  bool is_prime_field() const { return spec_.kind == FieldKind::PrimeField; }
  long modulus() const { return spec_.p; }

  Coeff zero() const { return Coeff(0); }
  Coeff one() const { return Coeff(1); }
  bool is_zero(const Coeff& a) const { return sgn(a) == 0; }

  /// Canonical representative (identity over QQ, value mod p otherwise).
  Coeff reduce(const Coeff& a) const;
  Coeff from_long(long v) const { return reduce(Coeff(v)); }
  Coeff from_mpz(const mpz_class& v) const { return reduce(Coeff(v)); }

  Coeff add(const Coeff& a, const Coeff& b) const { return reduce(a + b); }
  Coeff sub(const Coeff& a, const Coeff& b) const { return reduce(a - b); }
  Coeff mul(const Coeff& a, const Coeff& b) const { return reduce(a * b); }
  Coeff neg(const Coeff& a) const { return reduce(-a); }
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const;

 private:
  FieldSpec spec_;
};

/// Exact decimal string, "n" or "n/d".
std::string coeff_to_string(const Coeff& a);

}  // namespace birkit

#endif
