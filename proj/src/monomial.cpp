#include "birkit/monomial.hpp"

#include <algorithm>

namespace birkit {

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
  return r;
}

Monomial mono_quot(const Monomial& b, const Monomial& a) {
  Monomial r = b;
  for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= a.exps[i];
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > 0 && b.exps[i] > 0) return false;
  return true;
}

namespace {

// Graded reverse lex restricted to index range [lo, hi): higher total degree
// wins; ties compare from the last variable backwards, smaller exponent wins.
int grevlex_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  int da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) { da += a.exps[i]; db += b.exps[i]; }
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = hi; i-- > lo;) {
    int32_t d = a.exps[i] - b.exps[i];
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.exps.size(); ++i) {
    int32_t d = a.exps[i] - b.exps[i];
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

int mono_cmp(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
  size_t n = a.exps.size();
  switch (o.kind) {
    case MonomialOrder::Kind::Lex:
      return lex_cmp(a, b);
    case MonomialOrder::Kind::GrevLex:
      return grevlex_range(a, b, 0, n);
    case MonomialOrder::Kind::BlockElim: {
      size_t k = static_cast<size_t>(o.block);
      int c = grevlex_range(a, b, 0, std::min(k, n));
      if (c != 0) return c;
      return k < n ? grevlex_range(a, b, k, n) : 0;
    }
  }
  return 0;
}

}  // namespace birkit
