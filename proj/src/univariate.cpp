#include "birkit/univariate.hpp"

#include <algorithm>

#include "birkit/errors.hpp"
#include "birkit/field.hpp"

namespace birkit {

namespace {

long mulp(long a, long b, long p) {
  return static_cast<long>((__int128)a * b % p);
}

// quotient and in-place remainder of a by monic-normalizable b
UniPoly divmod(UniPoly& a, const UniPoly& b, long p) {
  long inv = mod_inverse(b.back(), p);
  UniPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    long c = mulp(a.back(), inv, p);
    size_t shift = a.size() - b.size();
    if (c != 0) {
      q[shift] = c;
      for (size_t i = 0; i < b.size(); ++i) {
        long v = a[shift + i] - mulp(c, b[i], p);
        a[shift + i] = v < 0 ? v + p : v;
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return q;
}

}  // namespace

UniPoly uni_trim(UniPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int uni_degree(const UniPoly& f) { return static_cast<int>(f.size()) - 1; }

UniPoly uni_rem(UniPoly a, const UniPoly& b, long p) {
  a = uni_trim(std::move(a));
  UniPoly d = uni_trim(b);
  if (d.empty()) throw Error(ErrorKind::Internal, "univariate division by zero");
  divmod(a, d, p);
  return a;
}

UniPoly uni_mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& mod, long p) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulp(a[i], b[j], p)) % p;
  }
  return uni_rem(std::move(r), mod, p);
}

UniPoly uni_gcd(UniPoly a, UniPoly b, long p) {
  a = uni_trim(std::move(a));
  b = uni_trim(std::move(b));
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long inv = mod_inverse(a.back(), p);
    for (auto& c : a) c = mulp(c, inv, p);
  }
  return a;
}

UniPoly uni_powmod_linear(long shift, const mpz_class& e, const UniPoly& f, long p) {
  UniPoly base = uni_rem(UniPoly{((shift % p) + p) % p, 1}, f, p);
  UniPoly acc = uni_rem(UniPoly{1}, f, p);
  mpz_class n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = uni_mulmod(acc, base, f, p);
    base = uni_mulmod(base, base, f, p);
    n >>= 1;
  }
  return acc;
}

namespace {

// Equal-degree splitting of a monic product of distinct linear factors.
void split_linear(const UniPoly& g, long p, Rng& rng, std::vector<long>& out) {
  int d = uni_degree(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back((p - g[0]) % p);
    return;
  }
  mpz_class half = (mpz_class(p) - 1) / 2;
  while (true) {
    long a = static_cast<long>(rng.below(static_cast<uint64_t>(p)));
    UniPoly h = uni_powmod_linear(a, half, g, p);
    if (h.empty()) h = {0};
    h[0] = (h[0] - 1 + p) % p;
    UniPoly q = uni_gcd(uni_trim(std::move(h)), g, p);
    int dq = uni_degree(q);
    if (dq <= 0 || dq >= d) continue;
    UniPoly rest = g;
    UniPoly quot = divmod(rest, q, p);
    split_linear(q, p, rng, out);
    split_linear(uni_trim(std::move(quot)), p, rng, out);
    return;
  }
}

}  // namespace

std::vector<long> uni_roots(const UniPoly& f, long p, Rng& rng) {
  UniPoly g = uni_trim(f);
  std::vector<long> out;
  if (g.empty()) throw Error(ErrorKind::Precondition, "root finding needs a nonzero polynomial");
  if (uni_degree(g) == 0) return out;
  if (p <= (1 << 16)) {
    for (long v = 0; v < p; ++v) {
      long acc = 0;
      for (size_t i = g.size(); i-- > 0;) acc = (mulp(acc, v, p) + g[i]) % p;
      if (acc == 0) out.push_back(v);
    }
    return out;
  }
  // gcd with x^p - x isolates the GF(p)-rational roots
  UniPoly xp = uni_powmod_linear(0, mpz_class(p), g, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = (xp[1] - 1 + p) % p;
  UniPoly lin = uni_gcd(uni_trim(std::move(xp)), g, p);
  split_linear(lin, p, rng, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace birkit
