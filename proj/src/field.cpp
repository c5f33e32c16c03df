#include "birkit/field.hpp"

namespace birkit {

bool is_prime_long(long n) {
  if (n < 2) return false;
  for (long q : {2L, 3L, 5L, 7L, 11L, 13L}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // deterministic Miller-Rabin for n < 3·10^18 with these bases
  auto mulmod = [](unsigned long a, unsigned long b, unsigned long m) {
    return (unsigned long)((__uint128_t)a * b % m);
  };
  auto powmod = [&](unsigned long a, unsigned long e, unsigned long m) {
    unsigned long r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  unsigned long d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (unsigned long a : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
    if (a % n == 0) continue;
    unsigned long x = powmod(a, d, n);
    if (x == 1 || x == (unsigned long)n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == (unsigned long)n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

long mod_inverse(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (r != 1) throw Error(ErrorKind::NonIntegerCoefficient, "element has no inverse mod " + std::to_string(p));
  return t < 0 ? t + p : t;
}

FieldSpec FieldSpec::prime(long p) {
  if (p >= (1L << 31))
    throw Error(ErrorKind::Schema, "prime modulus must be < 2^31, got " + std::to_string(p));
  if (!is_prime_long(p))
    throw Error(ErrorKind::Schema, std::to_string(p) + " is not prime");
  return {FieldKind::PrimeField, p};
}

std::string FieldSpec::name() const {
  return kind == FieldKind::Rationals ? "QQ" : "GF(" + std::to_string(p) + ")";
}

Coeff Field::reduce(const Coeff& a) const {
  if (spec_.kind == FieldKind::Rationals) return a;
  // a is num/den with den coprime to characteristic after construction;
  // fold the denominator in via its modular inverse.
  mpz_class num = a.get_num();
  mpz_class den = a.get_den();
  mpz_class p(spec_.p);
  mpz_class n = num % p;
  if (n < 0) n += p;
  if (den != 1) {
    mpz_class d = den % p;
    if (d < 0) d += p;
    if (d == 0)
      throw Error(ErrorKind::NonIntegerCoefficient,
                  "denominator divisible by " + std::to_string(spec_.p));
    long dinv = mod_inverse(d.get_si(), spec_.p);
    n = (n * dinv) % p;
  }
  return Coeff(n);
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw Error(ErrorKind::Internal, "division by zero");
  if (spec_.kind == FieldKind::Rationals) return 1 / a;
  Coeff r = reduce(a);
  return Coeff(mod_inverse(r.get_num().get_si(), spec_.p));
}

Coeff Field::div(const Coeff& a, const Coeff& b) const {
  if (is_zero(b)) throw Error(ErrorKind::Internal, "division by zero");
  if (spec_.kind == FieldKind::Rationals) return a / b;
  return mul(a, inv(b));
}

std::string coeff_to_string(const Coeff& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

}  // namespace birkit
