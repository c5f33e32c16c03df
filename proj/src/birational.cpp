#include "birkit/birational.hpp"

#include <algorithm>

#include "birkit/errors.hpp"
#include "birkit/rng.hpp"

namespace birkit {

namespace {

// Tuple-level boundary normalization: one common scalar for the whole tuple.
void normalize_tuple(std::vector<Poly>& forms, const RingPtr& ring) {
  const Field& F = ring->F;
  if (F.is_prime_field()) {
    for (const auto& f : forms)
      if (!f.is_zero()) {
        Coeff inv = F.inv(f.leading_coeff());
        for (auto& g : forms) g = g.scaled(inv);
        return;
      }
    return;
  }
  mpz_class g = 0, l = 1;
  for (const auto& f : forms)
    for (const auto& t : f.terms()) {
      g = gcd(g, t.coeff.get_num());
      l = lcm(l, t.coeff.get_den());
    }
  if (g == 0) return;
  mpq_class s(g, l);
  s.canonicalize();
  for (const auto& f : forms)
    if (!f.is_zero()) {
      if (sgn(f.leading_coeff()) < 0) s = -s;
      break;
    }
  for (auto& f : forms) f = f.scaled(Coeff(1) / s);
}

int anchor_variable(const VarietyPresentation& V) {
  for (int i = 0; i < V.ring()->nvars(); ++i)
    if (!normal_form(Poly::variable(V.ring(), i), V.gb()).is_zero()) return i;
  throw Error(ErrorKind::Internal, "every variable vanishes on X");
}

int anchor_form(const VarietyPresentation& V, const std::vector<Poly>& forms) {
  for (size_t i = 0; i < forms.size(); ++i)
    if (!normal_form(forms[i], V.gb()).is_zero()) return static_cast<int>(i);
  return -1;
}

}  // namespace

RationalMap make_map(VarietyPtr X, std::vector<Poly> forms) {
  if (static_cast<int>(forms.size()) != X->ring()->nvars())
    throw Error(ErrorKind::Schema,
                "a map on X needs " + std::to_string(X->ring()->nvars()) + " forms");
  int d = -1;
  for (auto& f : forms) {
    if (!same_ring(f.ring(), X->ring()))
      throw Error(ErrorKind::RingMismatch, "form lives in a different ring");
    if (!f.is_homogeneous())
      throw Error(ErrorKind::Homogeneity, "map form is not homogeneous: " + f.to_string());
    if (f.is_zero()) continue;
    if (d < 0) d = f.degree();
    else if (f.degree() != d)
      throw Error(ErrorKind::Homogeneity, "map forms have mixed degrees");
  }
  if (d < 0) throw Error(ErrorKind::Precondition, "all map forms are zero");
  bool all_in_p = true;
  for (const auto& f : forms)
    if (!normal_form(f, X->gb()).is_zero()) { all_in_p = false; break; }
  if (all_in_p)
    throw Error(ErrorKind::Precondition, "all map forms vanish on X (zero map)");
  normalize_tuple(forms, X->ring());
  RationalMap h;
  h.X = std::move(X);
  h.forms = std::move(forms);
  h.degree = d;
  return h;
}

RationalMap make_map(VarietyPtr X, const std::vector<std::string>& texts) {
  std::vector<Poly> forms;
  for (const auto& t : texts) forms.push_back(poly_parse(t, X->ring()));
  return make_map(std::move(X), std::move(forms));
}

bool is_well_defined(const RationalMap& h) {
  {
    std::lock_guard<std::mutex> lock(h.cache->mu);
    if (h.cache->well_defined) return *h.cache->well_defined;
  }
  bool ok = true;
  for (const auto& p : h.X->defining_ideal().gens) {
    Poly comp = poly_substitute(p, h.forms);
    if (!ideal_membership(comp, h.X->gb())) { ok = false; break; }
  }
  std::lock_guard<std::mutex> lock(h.cache->mu);
  if (!h.cache->well_defined) h.cache->well_defined = ok;
  return ok;
}

bool same_map(const RationalMap& h, const RationalMap& hp) {
  if (h.X.get() != hp.X.get()) {
    bool same_variety = same_ring(h.X->ring(), hp.X->ring()) &&
                        h.X->gb().elements() == hp.X->gb().elements();
    if (!same_variety)
      throw Error(ErrorKind::RingMismatch, "maps live on different varieties");
  }
  const auto& G = h.X->gb();
  size_t n1 = h.forms.size();
  for (size_t i = 0; i < n1; ++i)
    for (size_t j = i + 1; j < n1; ++j) {
      Poly cross = h.forms[i] * hp.forms[j] - h.forms[j] * hp.forms[i];
      if (!ideal_membership(cross, G)) return false;
    }
  return true;
}

std::vector<std::vector<Poly>> representatives_of_degree(const RationalMap& h, int e) {
  if (e < 1) throw Error(ErrorKind::Precondition, "representative degree must be >= 1");
  const VarietyPresentation& V = *h.X;
  const RingPtr& R = V.ring();
  const Field& F = R->F;
  int n1 = R->nvars();
  int a = anchor_form(V, h.forms);
  if (a < 0) throw Error(ErrorKind::Internal, "zero map slipped through");

  const auto& mons = monomials_of_degree(*R, e);
  int target_deg = e + h.degree;
  const auto& std_mons = V.standard_monomials(target_deg);
  int s = static_cast<int>(std_mons.size());
  int block = static_cast<int>(mons.size());

  // Anchored conditions: g_i h_a - g_a h_i in p for i != a. In the domain R
  // this pins the full pairwise system.
  std::vector<int> others;
  for (int i = 0; i < n1; ++i)
    if (i != a) others.push_back(i);

  // precompute coefficient vectors of NF(mu * h_i)
  std::vector<std::vector<std::vector<Coeff>>> nf_cols(n1);
  for (int i = 0; i < n1; ++i) {
    nf_cols[i].reserve(mons.size());
    for (const auto& mu : mons)
      nf_cols[i].push_back(nf_coeff_vector(V, h.forms[i].times_term(mu, Coeff(1)), target_deg));
  }

  DenseMatrix M(static_cast<int>(others.size()) * s, n1 * block);
  for (int slot = 0; slot < n1; ++slot) {
    for (int c = 0; c < block; ++c) {
      int col = slot * block + c;
      for (size_t oi = 0; oi < others.size(); ++oi) {
        int i = others[oi];
        int row0 = static_cast<int>(oi) * s;
        if (slot == i)
          for (int r = 0; r < s; ++r) M.at(row0 + r, col) = nf_cols[a][c][r];
        else if (slot == a)
          for (int r = 0; r < s; ++r) M.at(row0 + r, col) = F.neg(nf_cols[i][c][r]);
      }
    }
  }

  std::vector<std::vector<Poly>> basis;
  for (const auto& v : mat_nullspace(std::move(M), F)) {
    std::vector<Poly> tuple;
    for (int slot = 0; slot < n1; ++slot) {
      std::vector<Term> terms;
      for (int c = 0; c < block; ++c)
        if (!F.is_zero(v[slot * block + c])) terms.push_back({mons[c], v[slot * block + c]});
      tuple.push_back(Poly::from_terms(R, std::move(terms)));
    }
    basis.push_back(std::move(tuple));
  }
  return basis;
}

bool is_dominant(const RationalMap& h) {
  {
    std::lock_guard<std::mutex> lock(h.cache->mu);
    if (h.cache->dominant) return *h.cache->dominant;
  }
  // the criterion is purely about the base ideal: maximal analytic spread
  bool dom = analytic_spread(*h.X, h.forms) == h.X->r();
  std::lock_guard<std::mutex> lock(h.cache->mu);
  if (!h.cache->dominant) h.cache->dominant = dom;
  return dom;
}

ClearDegree clear_degree_check(const RationalMap& h, int trials, uint64_t seed) {
  if (!is_well_defined(h))
    throw Error(ErrorKind::Precondition, "clear degree needs a well-defined map");
  const VarietyPresentation& V = *h.X;

  auto grade_ok = [&](const std::vector<Poly>& forms) {
    bool nonzero = false;
    for (const auto& f : forms)
      if (!normal_form(f, V.gb()).is_zero()) { nonzero = true; break; }
    if (!nonzero) return false;
    return grade_at_least_2(V, make_ideal(V.ring(), forms));
  };

  if (grade_ok(h.forms)) return ClearDegree::Yes;

  std::vector<std::vector<Poly>> basis = representatives_of_degree(h, h.degree);
  // drop tuples that vanish identically on X; they represent the zero map
  std::vector<std::vector<Poly>> genuine;
  for (auto& tuple : basis)
    if (anchor_form(V, tuple) >= 0) genuine.push_back(tuple);

  if (genuine.size() == 1 && basis.size() == 1)
    return grade_ok(genuine.front()) ? ClearDegree::Yes : ClearDegree::No;

  Rng rng(seed);
  const Field& F = V.ring()->F;
  for (int t = 0; t < trials; ++t) {
    std::vector<Poly> cand(V.ring()->nvars(), Poly::zero(V.ring()));
    for (const auto& tuple : basis) {
      Coeff c = rng.coeff(F);
      if (F.is_zero(c)) continue;
      for (size_t i = 0; i < cand.size(); ++i) cand[i] = cand[i] + tuple[i].scaled(c);
    }
    int deg = -1;
    for (const auto& f : cand) deg = std::max(deg, f.degree());
    if (deg != h.degree) continue;  // degenerate draw
    if (anchor_form(V, cand) < 0) continue;
    if (grade_ok(cand)) return ClearDegree::Yes;
  }
  return basis.size() <= 1 ? ClearDegree::No : ClearDegree::Unknown;
}

InverseBound inverse_degree_bound(const VarietyPresentation& V, int d) {
  if (d < 1) throw Error(ErrorKind::Precondition, "degree must be >= 1");
  if (!V.nondegenerate())
    throw Error(ErrorKind::Precondition, "the bound needs a non-degenerate X");
  InverseBound b;
  b.n = V.n();
  b.m = V.n();
  b.d = d;
  b.d0 = V.d0();
  b.delta = std::max(d + 1, V.d0());
  int dimx = V.dim_x();
  long inner_exp = 2L * (b.n + b.m + 1 - dimx) * (b.n + b.m + 1 - dimx);
  mpz_class delta(b.delta);
  mpz_class pow_term;
  mpz_pow_ui(pow_term.get_mpz_t(), delta.get_mpz_t(), static_cast<unsigned long>(inner_exp));
  // bracket = ceil(delta^inner / 2 + delta)
  mpz_class bracket = pow_term + 2 * delta;  // = 2*(half + delta)
  mpz_class half_up = (bracket + 1) / 2;     // ceiling
  unsigned long outer = 1UL << (dimx + 2);
  mpz_pow_ui(b.value.get_mpz_t(), half_up.get_mpz_t(), outer);
  b.value *= 2 * b.n;
  mpz_class dd(d);
  mpz_pow_ui(b.gabber.get_mpz_t(), dd.get_mpz_t(), static_cast<unsigned long>(b.n - 1));
  b.exceeds_gabber = b.value > b.gabber;
  return b;
}

std::vector<Poly> compose_forms(const std::vector<Poly>& outer, const std::vector<Poly>& inner) {
  std::vector<Poly> out;
  out.reserve(outer.size());
  for (const auto& f : outer) out.push_back(poly_substitute(f, inner));
  return out;
}

bool verify_inverse_pair(const RationalMap& f, const RationalMap& g) {
  if (!is_well_defined(f) || !is_well_defined(g))
    throw Error(ErrorKind::Precondition, "both maps must be well-defined");
  const VarietyPresentation& V = *f.X;
  auto multiple_of_identity = [&](const std::vector<Poly>& comp) {
    bool some_nonzero = false;
    for (const auto& c : comp)
      if (!ideal_membership(c, V.gb())) { some_nonzero = true; break; }
    if (!some_nonzero) return false;
    int n1 = V.ring()->nvars();
    for (int i = 0; i < n1; ++i)
      for (int j = i + 1; j < n1; ++j) {
        Poly cross = comp[i] * Poly::variable(V.ring(), j) -
                     comp[j] * Poly::variable(V.ring(), i);
        if (!ideal_membership(cross, V.gb())) return false;
      }
    return true;
  };
  return multiple_of_identity(compose_forms(g.forms, f.forms)) &&
         multiple_of_identity(compose_forms(f.forms, g.forms));
}

std::optional<RationalMap> find_inverse(const RationalMap& h, int degree_cap) {
  if (!is_well_defined(h) || !is_dominant(h))
    throw Error(ErrorKind::Precondition, "inverse search needs a well-defined dominant map");
  const VarietyPresentation& V = *h.X;
  const RingPtr& R = V.ring();
  const Field& F = R->F;
  int n1 = R->nvars();
  int xa = anchor_variable(V);

  for (int e = 1; e <= degree_cap; ++e) {
    const auto& mons = monomials_of_degree(*R, e);
    int block = static_cast<int>(mons.size());
    int comp_deg = e * h.degree;
    int target_deg = comp_deg + 1;
    const auto& std_mons = V.standard_monomials(target_deg);
    int s = static_cast<int>(std_mons.size());
    long cells = static_cast<long>(n1 - 1) * s * n1 * block;
    if (cells > V.limits().max_matrix_cells)
      throw Error(ErrorKind::ResourceLimit,
                  "inverse search matrix too large at degree " + std::to_string(e));

    // NF of mu(f) for each degree-e monomial mu
    std::vector<Poly> comp_nf;
    comp_nf.reserve(mons.size());
    for (const auto& mu : mons)
      comp_nf.push_back(
          normal_form(poly_substitute(Poly::monomial(R, mu, Coeff(1)), h.forms), V.gb()));

    // conditions: (g_i ∘ f) x_a - (g_a ∘ f) x_i in p for i != xa's slot —
    // anchored on the variable x_a, linear in g's coefficients
    std::vector<int> others;
    for (int i = 0; i < n1; ++i)
      if (i != xa) others.push_back(i);

    std::vector<std::vector<std::vector<Coeff>>> cols(n1);
    for (int i = 0; i < n1; ++i) {
      Monomial xi(static_cast<size_t>(n1));
      xi.exps[i] = 1;
      cols[i].reserve(mons.size());
      for (int c = 0; c < block; ++c)
        cols[i].push_back(
            nf_coeff_vector(V, comp_nf[c].times_term(xi, Coeff(1)), target_deg));
    }

    DenseMatrix M(static_cast<int>(others.size()) * s, n1 * block);
    for (int slot = 0; slot < n1; ++slot)
      for (int c = 0; c < block; ++c) {
        int col = slot * block + c;
        for (size_t oi = 0; oi < others.size(); ++oi) {
          int i = others[oi];
          int row0 = static_cast<int>(oi) * s;
          if (slot == i)
            for (int r = 0; r < s; ++r) M.at(row0 + r, col) = cols[xa][c][r];
          else if (slot == xa)
            for (int r = 0; r < s; ++r) M.at(row0 + r, col) = F.neg(cols[i][c][r]);
        }
      }

    for (const auto& v : mat_nullspace(std::move(M), F)) {
      std::vector<Poly> tuple;
      for (int slot = 0; slot < n1; ++slot) {
        std::vector<Term> terms;
        for (int c = 0; c < block; ++c)
          if (!F.is_zero(v[slot * block + c])) terms.push_back({mons[c], v[slot * block + c]});
        tuple.push_back(Poly::from_terms(R, std::move(terms)));
      }
      // genuine left inverse iff the composition is nonzero mod p
      bool nonzero = false;
      for (const auto& g : tuple)
        if (!ideal_membership(poly_substitute(g, h.forms), V.gb())) { nonzero = true; break; }
      if (!nonzero) continue;
      // reduce mod p for a canonical-ish representative
      for (auto& g : tuple) g = normal_form(g, V.gb());
      RationalMap inv = make_map(h.X, std::move(tuple));
      if (verify_inverse_pair(h, inv)) return inv;
      throw Error(ErrorKind::Internal, "left inverse failed pair verification");
    }
  }
  return std::nullopt;
}

int default_inverse_cap(const VarietyPresentation& V, int d) {
  mpz_class cap;
  mpz_class dd(d);
  mpz_pow_ui(cap.get_mpz_t(), dd.get_mpz_t(), static_cast<unsigned long>(std::max(0, V.n() - 1)));
  cap += 2;
  if (cap > 64) return 64;  // hard practical ceiling
  return static_cast<int>(cap.get_si());
}

BirationalVerdict is_birational(const RationalMap& h, std::optional<int> cap, uint64_t seed) {
  {
    std::lock_guard<std::mutex> lock(h.cache->mu);
    if (h.cache->birational && !cap) return *h.cache->birational;
  }
  BirationalVerdict v;
  v.search_cap = cap ? *cap : default_inverse_cap(*h.X, h.degree);
  auto done = [&](BirationalVerdict out) {
    std::lock_guard<std::mutex> lock(h.cache->mu);
    if (!h.cache->birational) h.cache->birational = out;
    return out;
  };
  bool wd = is_well_defined(h);
  bool dom = is_dominant(h);
  if (!wd || !dom) {
    v.kind = BirKind::No;
    if (!wd) v.reason = "not well-defined on X";
    if (!dom) v.reason += (wd ? std::string() : "; ") + "not dominant (analytic spread below dim R)";
    return done(v);
  }
  bool search_limited = false;
  try {
    if (auto inv = find_inverse(h, v.search_cap)) {
      v.kind = BirKind::Yes;
      v.inverse = std::make_shared<RationalMap>(*inv);
      v.inverse_degree = inv->degree;
      return done(v);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ResourceLimit) throw;
    search_limited = true;
    v.reason = "inverse search hit a resource limit; ";
  }
  if (auto deg = probe_generic_fiber_degree(h, seed, 3)) {
    if (*deg >= 2) {
      v.kind = BirKind::No;
      v.reason += "generic fiber degree " + std::to_string(*deg) + " (probabilistic probe)";
      return done(v);
    }
    v.kind = BirKind::Indeterminate;
    v.reason += "fiber probe saw degree 1 but no inverse up to degree " +
                std::to_string(v.search_cap);
    return done(v);
  }
  v.kind = BirKind::Indeterminate;
  v.reason += search_limited ? "probe inconclusive" : "no inverse up to the cap; probe inconclusive";
  return done(v);
}

MapVerdict bir_xd_membership(const RationalMap& h, std::optional<int> cap, int trials,
                             uint64_t seed) {
  MapVerdict mv;
  mv.well_defined = is_well_defined(h);
  mv.dominant = is_dominant(h);
  if (!mv.well_defined || !mv.dominant) {
    if (!mv.well_defined) mv.notes.push_back("fails well-definedness: some p_i(f) not in p");
    if (!mv.dominant) mv.notes.push_back("not dominant");
    mv.birational.kind = BirKind::No;
    mv.birational.reason = mv.well_defined ? "not dominant (analytic spread below dim R)"
                                           : "not well-defined on X";
    return mv;
  }
  mv.birational = is_birational(h, cap, seed);
  if (mv.birational.kind != BirKind::Yes) {
    mv.notes.push_back("birationality not established");
    return mv;
  }
  mv.clear_degree = clear_degree_check(h, trials, seed);
  {
    std::lock_guard<std::mutex> lock(h.cache->mu);
    if (!h.cache->clear_degree) h.cache->clear_degree = mv.clear_degree;
  }
  mv.in_bir_xd = mv.well_defined && mv.dominant && mv.birational.kind == BirKind::Yes &&
                 mv.clear_degree == ClearDegree::Yes;
  if (mv.clear_degree != ClearDegree::Yes)
    mv.notes.push_back("no clear-degree representative found at this degree");
  return mv;
}

std::vector<Coeff> canonical_coordinates(const RationalMap& h, bool assume_clear) {
  if (!assume_clear) {
    if (!is_well_defined(h))
      throw Error(ErrorKind::Precondition, "canonical coordinates need a well-defined map");
    if (clear_degree_check(h) != ClearDegree::Yes)
      throw Error(ErrorKind::Precondition,
                  "canonical coordinates need a clear-degree representative "
                  "(pass assume_clear to override)");
  }
  const VarietyPresentation& V = *h.X;
  const Field& F = V.ring()->F;
  std::vector<Coeff> coords;
  for (const auto& f : h.forms) {
    std::vector<Coeff> v = nf_coeff_vector(V, f, h.degree);
    coords.insert(coords.end(), v.begin(), v.end());
  }
  for (const auto& c : coords)
    if (!F.is_zero(c)) {
      Coeff inv = F.inv(c);
      for (auto& x : coords) x = F.mul(x, inv);
      break;
    }
  return coords;
}

SuvReport suv_check(const RationalMap& h) {
  if (!is_dominant(h))
    throw Error(ErrorKind::Precondition, "the multiplicity check needs a dominant map");
  const VarietyPresentation& V = *h.X;
  SuvReport rep;
  rep.r = V.r();

  std::vector<Poly> gens = V.defining_ideal().gens;
  gens.insert(gens.end(), h.forms.begin(), h.forms.end());
  int dim_ri = krull_dim(make_ideal(V.ring(), std::move(gens)), V.limits());
  rep.g = rep.r - dim_ri;  // height of the base ideal in R
  rep.applicable = (dim_ri <= 0);
  rep.r_le_g_plus_1 = rep.r <= rep.g + 1;

  const HilbertData& hd = V.hilbert_data();
  rep.lhs = hd.multiplicity;
  mpz_class dpow;
  mpz_class dd(h.degree);
  mpz_pow_ui(dpow.get_mpz_t(), dd.get_mpz_t(), static_cast<unsigned long>(rep.r - 1));
  rep.rhs = hd.multiplicity * dpow;
  rep.equality = rep.lhs == rep.rhs;

  if (!rep.applicable) {
    rep.note = "base locus meets X (N nonempty): the correction terms are out of scope";
    return rep;
  }
  if (rep.r_le_g_plus_1) {
    BirationalVerdict bv = is_birational(h);
    if (bv.kind != BirKind::Indeterminate)
      rep.birational_consistent = (rep.equality == (bv.kind == BirKind::Yes));
  }
  return rep;
}

EdimBoundReport edim_bound(const VarietyPresentation& V, int d) {
  if (d < 1) throw Error(ErrorKind::Precondition, "degree must be >= 1");
  EdimBoundReport r;
  r.hf_rd = V.hilbert_function(d);
  r.bound = mpz_class(V.ring()->nvars()) * r.hf_rd - 1;
  r.c1_quasi_projective = (V.hf_ideal(d) == 0);
  return r;
}

}  // namespace birkit
