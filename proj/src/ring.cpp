#include "birkit/ring.hpp"

#include <algorithm>
#include <set>

#include "birkit/errors.hpp"

namespace birkit {

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars, MonomialOrder order) {
  if (vars.empty()) throw Error(ErrorKind::Schema, "ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !(isalpha(static_cast<unsigned char>(v[0]))))
      throw Error(ErrorKind::Schema, "invalid variable name '" + v + "'");
    for (char c : v)
      if (!isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw Error(ErrorKind::Schema, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw Error(ErrorKind::Schema, "duplicate variable name '" + v + "'");
  }
  return std::make_shared<PolyRingCtx>(field, std::move(vars), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field == b->field && a->vars == b->vars && a->order == b->order;
}

bool same_ring_vars(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field == b->field && a->vars == b->vars;
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order == order) return ring;
  return std::make_shared<PolyRingCtx>(ring->field, ring->vars, order);
}

static void enumerate_exps(int nvars, int pos, int rem, std::vector<int32_t>& cur,
                           std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[pos] = rem;
    out.emplace_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int e = rem; e >= 0; --e) {
    cur[pos] = e;
    enumerate_exps(nvars, pos + 1, rem - e, cur, out);
  }
  cur[pos] = 0;
}

std::vector<Monomial> monomials_of_degree(const PolyRingCtx& ring, int d) {
  if (d < 0) throw Error(ErrorKind::Precondition, "degree must be >= 0");
  std::vector<Monomial> out;
  std::vector<int32_t> cur(ring.nvars(), 0);
  enumerate_exps(ring.nvars(), 0, d, cur, out);
  std::sort(out.begin(), out.end(), [&ring](const Monomial& a, const Monomial& b) {
    return mono_cmp(ring.order, a, b) > 0;
  });
  return out;
}

mpz_class monomial_count(int nvars, int d) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(nvars - 1 + d),
               static_cast<unsigned long>(d));
  return r;
}

std::vector<std::string> fresh_var_names(const std::vector<std::string>& taken,
                                         const std::string& base, int count) {
  std::set<std::string> used(taken.begin(), taken.end());
  std::vector<std::string> out;
  std::string prefix = base;
  while (true) {
    bool clash = false;
    for (int i = 0; i < count; ++i)
      if (used.count(prefix + std::to_string(i))) { clash = true; break; }
    if (!clash) break;
    prefix += "_";
  }
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace birkit
