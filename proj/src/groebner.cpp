#include "birkit/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "birkit/errors.hpp"

namespace birkit {

Ideal make_ideal(RingPtr ring, std::vector<Poly> gens) {
  Ideal I{std::move(ring), {}};
  for (auto& g : gens) {
    if (!same_ring(g.ring(), I.ring))
      throw Error(ErrorKind::RingMismatch, "generator lives in a different ring");
    if (g.is_zero()) continue;
    I.gens.push_back(projective_normal(g));
  }
  return I;
}

Ideal make_ideal(RingPtr ring, const std::vector<std::string>& texts) {
  std::vector<Poly> gens;
  for (const auto& t : texts) gens.push_back(poly_parse(t, ring));
  return make_ideal(ring, std::move(gens));
}

bool ideal_is_homogeneous(const Ideal& I) {
  for (const auto& g : I.gens)
    if (!g.is_homogeneous()) return false;
  return true;
}

int max_generator_degree(const Ideal& I) {
  int d = 0;
  for (const auto& g : I.gens) d = std::max(d, g.degree());
  return d;
}

GroebnerBasis::GroebnerBasis(Ideal source, RingPtr order_ring, std::vector<Poly> elems)
    : source_(std::move(source)), ring_(std::move(order_ring)), elems_(std::move(elems)) {
  lms_.reserve(elems_.size());
  for (const auto& g : elems_) lms_.push_back(g.leading_monomial());
}

bool GroebnerBasis::contains_unit() const {
  return elems_.size() == 1 && elems_[0].degree() == 0;
}

int GroebnerBasis::max_degree() const {
  int d = 0;
  for (const auto& g : elems_) d = std::max(d, g.degree());
  return d;
}

namespace {

// Remainder of f on division by basis; leading terms not divisible by any
// basis leading monomial migrate to the remainder.
Poly reduce_full(const Poly& f, const std::vector<Poly>& basis,
                 std::vector<Poly>* cofactors = nullptr) {
  const RingPtr& ring = f.ring();
  const Field& F = ring->F;
  Poly h = f;
  std::vector<Term> rem;
  if (cofactors) cofactors->assign(basis.size(), Poly::zero(ring));
  while (!h.is_zero()) {
    bool reduced = false;
    const Term& lt = h.leading();
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!mono_divides(basis[i].leading_monomial(), lt.mono)) continue;
      Monomial q = mono_quot(lt.mono, basis[i].leading_monomial());
      Coeff c = F.div(lt.coeff, basis[i].leading_coeff());
      h = h - basis[i].times_term(q, c);
      if (cofactors)
        (*cofactors)[i] = (*cofactors)[i] + Poly::monomial(ring, q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(h.leading());
      h = h - Poly::monomial(ring, lt.mono, lt.coeff);
    }
  }
  return Poly::from_terms(ring, std::move(rem));
}

Poly spoly(const Poly& f, const Poly& g) {
  const Field& F = f.ring()->F;
  Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = f.times_term(mono_quot(l, f.leading_monomial()), F.inv(f.leading_coeff()));
  Poly b = g.times_term(mono_quot(l, g.leading_monomial()), F.inv(g.leading_coeff()));
  return a - b;
}

struct PairKey {
  int deg;
  size_t i, j;
  bool operator>(const PairKey& o) const {
    if (deg != o.deg) return deg > o.deg;
    if (j != o.j) return j > o.j;
    return i > o.i;
  }
};

}  // namespace

GroebnerBasis buchberger(const Ideal& I, MonomialOrder order, const ResourceLimits& lim) {
  RingPtr gring = with_order(I.ring, order);
  std::vector<Poly> basis;
  for (const auto& g : I.gens) {
    Poly h = projective_normal(reorder(g, gring));
    if (!h.is_zero()) basis.push_back(std::move(h));
  }

  std::priority_queue<PairKey, std::vector<PairKey>, std::greater<PairKey>> queue;
  std::set<std::pair<size_t, size_t>> treated;
  auto push_pairs = [&](size_t t) {
    for (size_t i = 0; i < t; ++i)
      queue.push({mono_lcm(basis[i].leading_monomial(), basis[t].leading_monomial()).degree(),
                  i, t});
  };
  for (size_t t = 1; t < basis.size(); ++t) push_pairs(t);

  long processed = 0;
  while (!queue.empty()) {
    PairKey pk = queue.top();
    queue.pop();
    if (++processed > lim.max_pairs)
      throw Error(ErrorKind::ResourceLimit,
                  "pair limit exceeded (" + std::to_string(lim.max_pairs) + ")");
    if (pk.deg > lim.max_degree)
      throw Error(ErrorKind::ResourceLimit,
                  "degree limit exceeded (" + std::to_string(lim.max_degree) + ")");
    const Poly& fi = basis[pk.i];
    const Poly& fj = basis[pk.j];
    Monomial l = mono_lcm(fi.leading_monomial(), fj.leading_monomial());
    // product criterion
    if (mono_coprime(fi.leading_monomial(), fj.leading_monomial())) {
      treated.insert({pk.i, pk.j});
      continue;
    }
    // chain criterion: some k with lm_k | lcm and both sub-pairs treated
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!mono_divides(basis[k].leading_monomial(), l)) continue;
      auto p1 = std::minmax(pk.i, k);
      auto p2 = std::minmax(pk.j, k);
      if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second}))
        skip = true;
    }
    treated.insert({pk.i, pk.j});
    if (skip) continue;
    Poly r = reduce_full(spoly(fi, fj), basis);
    if (!r.is_zero()) {
      basis.push_back(projective_normal(r));
      push_pairs(basis.size() - 1);
    }
  }

  // minimalize: drop elements whose leading monomial is divisible by another's
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool drop = false;
    for (size_t j = 0; j < basis.size() && !drop; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (mj == mi) {
        drop = j < i;  // keep one representative of equal leading monomials
      } else if (mono_divides(mj, mi)) {
        drop = true;
      }
    }
    if (!drop) minimal.push_back(basis[i]);
  }

  // tail-reduce to the reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Poly r = projective_normal(reduce_full(minimal[i], others));
      if (r != minimal[i]) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
    return mono_cmp(gring->order, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return GroebnerBasis(I, gring, std::move(minimal));
}

GroebnerBasis buchberger(const Ideal& I, const ResourceLimits& lim) {
  return buchberger(I, I.ring->order, lim);
}

Poly normal_form(const Poly& f, const GroebnerBasis& G, std::vector<Poly>* cofactors) {
  if (!same_ring_vars(f.ring(), G.ring()))
    throw Error(ErrorKind::RingMismatch, "polynomial and basis rings differ");
  Poly fr = reorder(f, G.ring());
  Poly r = reduce_full(fr, G.elements(), cofactors);
  if (cofactors)
    for (auto& q : *cofactors) q = reorder(q, f.ring());
  return reorder(r, f.ring());
}

bool ideal_membership(const Poly& f, const GroebnerBasis& G) {
  return normal_form(f, G).is_zero();
}

bool ideal_membership(const Poly& f, const Ideal& I, const ResourceLimits& lim) {
  if (I.gens.empty()) return f.is_zero();
  return ideal_membership(f, buchberger(I, lim));
}

bool certify_buchberger(const GroebnerBasis& G, const ResourceLimits& lim) {
  const auto& els = G.elements();
  long count = 0;
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t j = i + 1; j < els.size(); ++j) {
      if (++count > lim.max_pairs) throw Error(ErrorKind::ResourceLimit, "pair limit exceeded");
      if (!reduce_full(spoly(els[i], els[j]), els).is_zero()) return false;
    }
  return true;
}

Ideal intersect_ideals(const Ideal& I, const Ideal& J, const ResourceLimits& lim) {
  if (!same_ring(I.ring, J.ring)) throw Error(ErrorKind::RingMismatch, "ideals in different rings");
  if (I.gens.empty()) return I;
  if (J.gens.empty()) return J;
  const RingPtr& R = I.ring;
  int n = R->nvars();
  // k[t, x...]: t * I + (1 - t) * J, eliminate t
  std::vector<std::string> tn = fresh_var_names(R->vars, "t", 1);
  std::vector<std::string> vars = {tn[0]};
  vars.insert(vars.end(), R->vars.begin(), R->vars.end());
  RingPtr ext = make_ring(R->field, vars, MonomialOrder::block_elim(1));
  std::vector<int> up(n);
  for (int i = 0; i < n; ++i) up[i] = i + 1;
  Poly t = Poly::variable(ext, 0);
  Poly one = Poly::constant(ext, Coeff(1));
  std::vector<Poly> gens;
  for (const auto& f : I.gens) gens.push_back(t * transport(f, ext, up));
  for (const auto& g : J.gens) gens.push_back((one - t) * transport(g, ext, up));
  GroebnerBasis G = buchberger(make_ideal(ext, std::move(gens)), lim);
  std::vector<Poly> kept;
  std::vector<int> down(n + 1, -1);
  for (int i = 0; i < n; ++i) down[i + 1] = i;
  for (const auto& g : G.elements()) {
    bool uses_t = false;
    for (const auto& term : g.terms())
      if (term.mono.exps[0] != 0) { uses_t = true; break; }
    if (!uses_t) kept.push_back(transport(g, R, down));
  }
  return make_ideal(R, std::move(kept));
}

Poly poly_exact_div(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  const RingPtr& ring = f.ring();
  const Field& F = ring->F;
  Poly h = f;
  Poly q = Poly::zero(ring);
  while (!h.is_zero()) {
    const Term& lt = h.leading();
    if (!mono_divides(g.leading_monomial(), lt.mono))
      throw Error(ErrorKind::Internal, "inexact polynomial division");
    Monomial m = mono_quot(lt.mono, g.leading_monomial());
    Coeff c = F.div(lt.coeff, g.leading_coeff());
    q = q + Poly::monomial(ring, m, c);
    h = h - g.times_term(m, c);
  }
  return q;
}

Ideal colon_ideal(const Ideal& I, const Ideal& J, const ResourceLimits& lim) {
  if (!same_ring(I.ring, J.ring)) throw Error(ErrorKind::RingMismatch, "ideals in different rings");
  if (J.gens.empty())  // I : (0) = (1)
    return make_ideal(I.ring, std::vector<Poly>{Poly::constant(I.ring, Coeff(1))});
  std::optional<Ideal> acc;
  for (const auto& b : J.gens) {
    Ideal inter = intersect_ideals(I, make_ideal(I.ring, std::vector<Poly>{b}), lim);
    std::vector<Poly> quot;
    for (const auto& h : inter.gens) quot.push_back(poly_exact_div(h, b));
    Ideal part = make_ideal(I.ring, std::move(quot));
    acc = acc ? intersect_ideals(*acc, part, lim) : part;
  }
  return *acc;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const ResourceLimits& lim) {
  if (!same_ring(I.ring, J.ring)) throw Error(ErrorKind::RingMismatch, "ideals in different rings");
  GroebnerBasis GI = buchberger(I, lim);
  GroebnerBasis GJ = buchberger(J, lim);
  if (GI.elements().size() != GJ.elements().size()) return false;
  for (size_t i = 0; i < GI.elements().size(); ++i)
    if (GI.elements()[i] != GJ.elements()[i]) return false;
  return true;
}

Ideal saturate(const Ideal& I, const Ideal& J, const ResourceLimits& lim) {
  Ideal cur = I;
  for (long it = 0; it < lim.max_iterations; ++it) {
    Ideal next = colon_ideal(cur, J, lim);
    if (ideal_equal(next, cur, lim)) return cur;
    cur = std::move(next);
  }
  throw Error(ErrorKind::ResourceLimit, "saturation did not stabilize");
}

Ideal eliminate(const Ideal& I, const std::vector<int>& keep, const ResourceLimits& lim) {
  const RingPtr& R = I.ring;
  int n = R->nvars();
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw Error(ErrorKind::Precondition, "keep index out of range");
    kept[k] = true;
  }
  std::vector<int> elim_vars, keep_vars;
  for (int i = 0; i < n; ++i) (kept[i] ? keep_vars : elim_vars).push_back(i);

  // permuted ring: eliminated block first, block order
  std::vector<std::string> vars;
  for (int i : elim_vars) vars.push_back(R->vars[i]);
  for (int i : keep_vars) vars.push_back(R->vars[i]);
  RingPtr ext = make_ring(R->field, vars,
                          MonomialOrder::block_elim(static_cast<int>(elim_vars.size())));
  std::vector<int> up(n, -1);
  for (size_t j = 0; j < elim_vars.size(); ++j) up[elim_vars[j]] = static_cast<int>(j);
  for (size_t j = 0; j < keep_vars.size(); ++j)
    up[keep_vars[j]] = static_cast<int>(elim_vars.size() + j);

  std::vector<Poly> gens;
  for (const auto& g : I.gens) gens.push_back(transport(g, ext, up));
  GroebnerBasis G = buchberger(make_ideal(ext, std::move(gens)), lim);

  std::vector<std::string> keep_names;
  for (int i : keep_vars) keep_names.push_back(R->vars[i]);
  RingPtr target = make_ring(R->field, keep_names, MonomialOrder::grevlex());
  std::vector<int> down(ext->nvars(), -1);
  for (size_t j = 0; j < keep_vars.size(); ++j)
    down[elim_vars.size() + j] = static_cast<int>(j);

  std::vector<Poly> kept_polys;
  for (const auto& g : G.elements()) {
    bool uses_elim = false;
    for (const auto& term : g.terms())
      for (size_t j = 0; j < elim_vars.size() && !uses_elim; ++j)
        if (term.mono.exps[j] != 0) uses_elim = true;
    if (!uses_elim) kept_polys.push_back(transport(g, target, down));
  }
  return make_ideal(target, std::move(kept_polys));
}

}  // namespace birkit
