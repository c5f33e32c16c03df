#include <algorithm>

#include "birkit/birational.hpp"
#include "birkit/errors.hpp"
#include "birkit/rng.hpp"
#include "birkit/univariate.hpp"

namespace birkit {

namespace {

long pick_probe_prime(Rng& rng) {
  while (true) {
    long c = 10007 + static_cast<long>(rng.below(20000));
    if (c % 2 == 0) ++c;
    while (!is_prime_long(c)) c += 2;
    return c;
  }
}

// Triangular back-solver for a zero-dimensional affine ideal over GF(p).
// Works on any 0-dim ideal: the lex basis always contains a univariate
// element in the last variable; specialization stays 0-dim or empty.
bool solve_zero_dim(const Ideal& I, long p, Rng& rng, const ResourceLimits& lim,
                    std::vector<long>& out) {
  const RingPtr& R = I.ring;
  int m = R->nvars();
  GroebnerBasis G = buchberger(I, MonomialOrder::lex(), lim);
  if (G.contains_unit()) return false;

  const Poly* uni = nullptr;
  for (const auto& g : G.elements()) {
    bool only_last = true;
    for (const auto& t : g.terms())
      for (int i = 0; i + 1 < m && only_last; ++i)
        if (t.mono.exps[i] != 0) only_last = false;
    if (only_last) { uni = &g; break; }
  }
  if (!uni) return false;  // not zero-dimensional

  UniPoly f;
  for (const auto& t : uni->terms()) {
    int e = t.mono.exps[m - 1];
    if (static_cast<int>(f.size()) <= e) f.resize(e + 1, 0);
    f[e] = t.coeff.get_num().get_si();
  }
  std::vector<long> roots = uni_roots(f, p, rng);
  if (roots.empty()) return false;
  size_t start = rng.below(roots.size());

  for (size_t k = 0; k < roots.size(); ++k) {
    long rho = roots[(start + k) % roots.size()];
    if (m == 1) {
      out.assign(1, rho);
      return true;
    }
    std::vector<std::string> sub_vars(R->vars.begin(), R->vars.end() - 1);
    RingPtr sub = make_ring(R->field, sub_vars, MonomialOrder::grevlex());
    std::vector<Poly> images;
    for (int i = 0; i + 1 < m; ++i) images.push_back(Poly::variable(sub, i));
    images.push_back(Poly::constant(sub, Coeff(rho)));
    std::vector<Poly> specialized;
    for (const auto& g : G.elements()) specialized.push_back(poly_substitute(g, images));
    std::vector<long> rest;
    if (solve_zero_dim(make_ideal(sub, std::move(specialized)), p, rng, lim, rest)) {
      out = std::move(rest);
      out.push_back(rho);
      return true;
    }
  }
  return false;
}

std::optional<std::vector<long>> random_point_on_variety(const VarietyPresentation& V, long p,
                                                         Rng& rng) {
  const RingPtr& R = V.ring();
  int n1 = R->nvars();
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Poly> gens = V.defining_ideal().gens;
    for (int i = 0; i < V.dim_x(); ++i) gens.push_back(random_form(R, 1, rng, true));
    // dehomogenize at a random coordinate
    int k = static_cast<int>(rng.below(static_cast<uint64_t>(n1)));
    std::vector<std::string> avars;
    for (int i = 0; i < n1; ++i)
      if (i != k) avars.push_back(R->vars[i]);
    RingPtr aff = make_ring(R->field, avars, MonomialOrder::grevlex());
    std::vector<Poly> images;
    int j = 0;
    for (int i = 0; i < n1; ++i)
      images.push_back(i == k ? Poly::constant(aff, Coeff(1)) : Poly::variable(aff, j++));
    std::vector<Poly> agens;
    for (const auto& g : gens) agens.push_back(poly_substitute(g, images));
    std::vector<long> sol;
    if (!solve_zero_dim(make_ideal(aff, std::move(agens)), p, rng, V.limits(), sol)) continue;
    std::vector<long> pt(n1, 0);
    j = 0;
    for (int i = 0; i < n1; ++i) pt[i] = (i == k) ? 1 : sol[j++];
    // guard: the point really lies on X
    bool on_x = true;
    for (const auto& g : V.defining_ideal().gens) {
      std::vector<Poly> consts;
      for (int i = 0; i < n1; ++i) consts.push_back(Poly::constant(R, Coeff(pt[i])));
      if (!poly_substitute(g, consts).is_zero()) { on_x = false; break; }
    }
    if (on_x) return pt;
  }
  return std::nullopt;
}

// degree of the fiber of h over the point q: saturate the rank-one locus by
// the base ideal and the irrelevant ideal, then read the multiplicity
std::optional<int> fiber_degree_at(const VarietyPresentation& V, const RationalMap& h_reduced,
                                   const std::vector<long>& q) {
  const RingPtr& R = V.ring();
  int n1 = R->nvars();
  std::vector<Poly> gens = V.defining_ideal().gens;
  for (int i = 0; i < n1; ++i)
    for (int j = i + 1; j < n1; ++j) {
      Poly cross = h_reduced.forms[i].scaled(Coeff(q[j])) - h_reduced.forms[j].scaled(Coeff(q[i]));
      if (!cross.is_zero()) gens.push_back(cross);
    }
  Ideal F = make_ideal(R, std::move(gens));
  Ideal base = make_ideal(R, h_reduced.forms);
  Ideal sat = saturate(F, base, V.limits());
  std::vector<Poly> mvars;
  for (int i = 0; i < n1; ++i) mvars.push_back(Poly::variable(R, i));
  sat = saturate(sat, make_ideal(R, std::move(mvars)), V.limits());
  GroebnerBasis G = buchberger(sat, MonomialOrder::grevlex(), V.limits());
  if (G.contains_unit()) return std::nullopt;  // point missed the image
  HilbertData hd = hilbert_from_leading_terms(G.leading_monomials(), n1);
  if (hd.dim != 1) return std::nullopt;  // not a finite fiber
  if (!hd.multiplicity.fits_sint_p()) return std::nullopt;
  return static_cast<int>(hd.multiplicity.get_si());
}

}  // namespace

std::optional<int> probe_generic_fiber_degree(const RationalMap& h, uint64_t seed, int points) {
  Rng rng(splitmix64(seed ^ 0x9d2c5680cafe1234ULL));
  const VarietyPresentation& V = *h.X;

  VarietyPtr Vp;
  RationalMap hp;
  if (V.ring()->F.is_prime_field()) {
    Vp = h.X;
    hp = h;
  } else {
    for (int tries = 0; tries < 5 && !Vp; ++tries) {
      long p = pick_probe_prime(rng);
      try {
        RingPtr ring_p = make_ring(FieldSpec::prime(p), V.ring()->vars, V.ring()->order);
        std::vector<Poly> gens;
        for (const auto& g : V.defining_ideal().gens) {
          Poly gp = poly_mod_p(g, ring_p);
          if (gp.is_zero()) throw Error(ErrorKind::Internal, "generator vanished mod p");
          gens.push_back(gp);
        }
        auto cand = make_variety(ring_p, make_ideal(ring_p, std::move(gens)), V.limits());
        if (cand->r() != V.r()) continue;  // bad reduction
        std::vector<Poly> forms;
        bool ok = true;
        for (const auto& f : h.forms) {
          Poly fp = poly_mod_p(f, ring_p);
          if (fp.is_zero()) { ok = false; break; }
          forms.push_back(fp);
        }
        if (!ok) continue;
        hp = make_map(cand, std::move(forms));
        Vp = cand;
      } catch (const Error&) {
        continue;
      }
    }
    if (!Vp) return std::nullopt;
  }

  long p = Vp->ring()->F.modulus();
  std::vector<int> degrees;
  for (int k = 0; k < points; ++k) {
    auto pt = random_point_on_variety(*Vp, p, rng);
    if (!pt) continue;
    if (auto deg = fiber_degree_at(*Vp, hp, *pt)) degrees.push_back(*deg);
  }
  if (degrees.size() < 2) return std::nullopt;
  for (size_t i = 1; i < degrees.size(); ++i)
    if (degrees[i] != degrees[0]) return std::nullopt;
  return degrees[0];
}

}  // namespace birkit
