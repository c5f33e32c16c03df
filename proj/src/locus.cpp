#include "birkit/locus.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "birkit/errors.hpp"
#include "birkit/rng.hpp"

namespace birkit {

CompositionTemplate make_template(Poly p, Ideal target, int arg_degree) {
  if (!p.is_homogeneous())
    throw Error(ErrorKind::Homogeneity, "template polynomial must be homogeneous");
  if (arg_degree < 1) throw Error(ErrorKind::Precondition, "argument degree must be >= 1");
  CompositionTemplate T;
  T.arity = p.ring()->nvars();
  T.p = std::move(p);
  T.target = std::move(target);
  T.arg_degree = arg_degree;
  return T;
}

LocusEquations locus_equations(const CompositionTemplate& T, const ResourceLimits& lim) {
  const RingPtr& xring = T.target.ring;
  int nx = xring->nvars();
  int m = T.arity;
  std::vector<Monomial> basis_mons = monomials_of_degree(*xring, T.arg_degree);
  int N = static_cast<int>(basis_mons.size());
  if (static_cast<long>(m) * N > 512)
    throw Error(ErrorKind::ResourceLimit, "too many parameter variables");

  // parameter ring k[a<i>_<j>] and the combined ring k[a..., x...]
  std::vector<std::string> anames;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= N; ++j) anames.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
  RingPtr aring = make_ring(xring->field, anames, MonomialOrder::grevlex());
  std::vector<std::string> cvars = anames;
  cvars.insert(cvars.end(), xring->vars.begin(), xring->vars.end());
  RingPtr cring = make_ring(xring->field, cvars, MonomialOrder::grevlex());
  int na = m * N;

  // generic forms f_i = sum_j a_ij M_j inside the combined ring
  std::vector<int> xup(nx);
  for (int i = 0; i < nx; ++i) xup[i] = na + i;
  std::vector<Poly> generic;
  for (int i = 0; i < m; ++i) {
    Poly f = Poly::zero(cring);
    for (int j = 0; j < N; ++j) {
      Monomial mono(static_cast<size_t>(cring->nvars()));
      mono.exps[i * N + j] = 1;
      for (int v = 0; v < nx; ++v) mono.exps[na + v] = basis_mons[j].exps[v];
      f = f + Poly::monomial(cring, mono, Coeff(1));
    }
    generic.push_back(std::move(f));
  }

  Poly expanded = poly_substitute(T.p, generic);

  // split each term into x-part and a-part, group by x-monomial
  std::map<std::vector<int32_t>, std::vector<Term>> by_x;
  for (const auto& t : expanded.terms()) {
    std::vector<int32_t> xexp(nx, 0);
    Monomial apart(static_cast<size_t>(na));
    for (int v = 0; v < na; ++v) apart.exps[v] = t.mono.exps[v];
    for (int v = 0; v < nx; ++v) xexp[v] = t.mono.exps[na + v];
    by_x[xexp].push_back({std::move(apart), t.coeff});
  }

  if (by_x.empty()) return {aring, {}};  // zero template

  GroebnerBasis G = buchberger(T.target, MonomialOrder::grevlex(), lim);
  int deg = T.p.degree() * T.arg_degree;
  std::vector<Monomial> target_mons;
  for (const auto& mon : monomials_of_degree(*xring, deg)) {
    bool in_lt = false;
    for (const auto& lm : G.leading_monomials())
      if (mono_divides(lm, mon)) { in_lt = true; break; }
    if (!in_lt) target_mons.push_back(mon);
  }
  std::map<std::vector<int32_t>, int> row_of;
  for (size_t i = 0; i < target_mons.size(); ++i) row_of[target_mons[i].exps] = static_cast<int>(i);

  // NF is k-linear: reduce each x-monomial once, then aggregate the
  // parametric coefficients. No branching on parametric leading terms.
  std::vector<Poly> eqs(target_mons.size(), Poly::zero(aring));
  for (const auto& [xexp, aterms] : by_x) {
    Poly nf = normal_form(Poly::monomial(xring, Monomial(xexp), Coeff(1)), G);
    if (nf.is_zero()) continue;
    Poly acoef = Poly::from_terms(aring, std::vector<Term>(aterms));
    for (const auto& t : nf.terms()) {
      auto it = row_of.find(t.mono.exps);
      if (it == row_of.end())
        throw Error(ErrorKind::Internal, "normal form escaped the degree piece");
      eqs[it->second] = eqs[it->second] + acoef.scaled(t.coeff);
    }
  }

  LocusEquations L;
  L.parameter_ring = aring;
  for (auto& e : eqs)
    if (!e.is_zero()) L.equations.push_back(projective_normal(e));
  return L;
}

std::vector<Poly> vpz_basis(const Ideal& b, int d) {
  return degree_piece_basis(b, d);
}

namespace {

Poly det_lagrange(const std::vector<std::vector<Poly>>& a, std::vector<int> cols,
                  const RingPtr& ring) {
  // cofactor expansion; toy sizes by construction
  size_t k = cols.size();
  size_t row = a.size() - k;
  if (k == 1) return a[row][cols[0]];
  Poly acc = Poly::zero(ring);
  for (size_t i = 0; i < k; ++i) {
    std::vector<int> rest;
    for (size_t j = 0; j < k; ++j)
      if (j != i) rest.push_back(cols[j]);
    Poly minor = det_lagrange(a, rest, ring);
    Poly term = a[row][cols[i]] * minor;
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

Ideal tau_minor_ideal(const VarietyPresentation& V, int d, int m, const ResourceLimits& lim) {
  int r = V.r();
  std::vector<Monomial> basis_mons = monomials_of_degree(*V.ring(), d);
  int N = static_cast<int>(basis_mons.size());
  if (m < tau_floor(V, d))
    throw Error(ErrorKind::Precondition, "m below the tau floor");
  if (static_cast<long>(r) * N > 64)
    throw Error(ErrorKind::ResourceLimit, "symbolic tau matrix too large");

  std::vector<std::string> anames;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= N; ++j) anames.push_back("a" + std::to_string(i) + std::to_string(j));
  RingPtr aring = make_ring(V.ring()->field, anames, MonomialOrder::grevlex());

  const auto& row_mons = V.standard_monomials(m);
  const auto& col_mons = V.standard_monomials(m - d);
  int rows = static_cast<int>(row_mons.size());
  int cols = r * static_cast<int>(col_mons.size());
  if (rows > 6 || cols > 12)
    throw Error(ErrorKind::ResourceLimit, "symbolic tau matrix too large");
  if (cols < rows) return make_ideal(aring, std::vector<Poly>{});  // no maximal minors

  std::map<std::vector<int32_t>, int> row_of;
  for (int i = 0; i < rows; ++i) row_of[row_mons[i].exps] = i;

  // entries are linear forms in the a_ij
  std::vector<std::vector<Poly>> entry(rows, std::vector<Poly>(cols, Poly::zero(aring)));
  int c = 0;
  for (int i = 0; i < r; ++i) {
    for (const auto& mu : col_mons) {
      for (int j = 0; j < N; ++j) {
        Poly nf = normal_form(
            Poly::monomial(V.ring(), mono_mul(mu, basis_mons[j]), Coeff(1)), V.gb());
        Monomial avar(static_cast<size_t>(aring->nvars()));
        avar.exps[i * N + j] = 1;
        for (const auto& t : nf.terms())
          entry[row_of.at(t.mono.exps)][c] =
              entry[row_of.at(t.mono.exps)][c] + Poly::monomial(aring, avar, t.coeff);
      }
      ++c;
    }
  }

  // all rows x (rows-subsets of columns) minors
  std::vector<Poly> minors;
  std::vector<int> pick(rows);
  std::vector<int> idx(rows);
  for (int i = 0; i < rows; ++i) idx[i] = i;
  // enumerate column subsets of size `rows`
  std::vector<int> comb(rows);
  for (int i = 0; i < rows; ++i) comb[i] = i;
  long count = 0;
  while (true) {
    if (++count > lim.max_pairs) throw Error(ErrorKind::ResourceLimit, "too many minors");
    Poly det = det_lagrange(entry, comb, aring);
    if (!det.is_zero()) minors.push_back(projective_normal(det));
    int i = rows - 1;
    while (i >= 0 && comb[i] == cols - rows + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < rows; ++j) comb[j] = comb[j - 1] + 1;
  }
  return make_ideal(aring, std::move(minors));
}

std::string DensityReport::locus_name() const {
  switch (kind) {
    case LocusKind::PrincipalClass: return "C" + std::to_string(count);
    case LocusKind::Grade2: return "G2";
    case LocusKind::MaxSpread: return "N" + std::to_string(count);
  }
  return "?";
}

std::string DensityReport::csv_row() const {
  return locus_name() + "," + std::to_string(prime) + "," + std::to_string(trials) + "," +
         std::to_string(hits) + "," + std::to_string(seed);
}

VarietyPtr reduce_variety_mod_p(const VarietyPresentation& V, long p) {
  if (V.ring()->F.is_prime_field()) {
    if (V.ring()->F.modulus() != p)
      throw Error(ErrorKind::Precondition,
                  "presentation is over GF(" + std::to_string(V.ring()->F.modulus()) +
                      "), cannot sample over GF(" + std::to_string(p) + ")");
    return make_variety(V.ring(), V.defining_ideal(), V.limits());
  }
  RingPtr ring_p = make_ring(FieldSpec::prime(p), V.ring()->vars, V.ring()->order);
  std::vector<Poly> gens;
  for (const auto& g : V.defining_ideal().gens) {
    Poly gp = poly_mod_p(g, ring_p);
    if (gp.is_zero())
      throw Error(ErrorKind::Precondition, "a defining equation vanishes mod " + std::to_string(p));
    gens.push_back(gp);
  }
  return make_variety(ring_p, make_ideal(ring_p, std::move(gens)), V.limits());
}

DensityReport sample_locus(const VarietyPresentation& V, LocusKind kind, int count, int d,
                           long trials, long prime, uint64_t seed, int jobs) {
  if (trials < 1) throw Error(ErrorKind::Precondition, "trials must be >= 1");
  if (count < 1) throw Error(ErrorKind::Precondition, "need at least one form");
  if (kind == LocusKind::Grade2 && count != 2)
    throw Error(ErrorKind::Precondition, "the regular-sequence locus draws exactly 2 forms");
  VarietyPtr Vp = reduce_variety_mod_p(V, prime);
  if (kind == LocusKind::PrincipalClass && count > Vp->r())
    throw Error(ErrorKind::Precondition, "principal-class locus needs count <= dim R");

  auto classify = [&](uint64_t trial_seed) -> bool {
    Rng rng(trial_seed);
    std::vector<Poly> forms;
    for (int i = 0; i < count; ++i) forms.push_back(random_form(Vp->ring(), d, rng, false));
    switch (kind) {
      case LocusKind::PrincipalClass: {
        for (const auto& f : forms)
          if (f.is_zero()) return false;
        return principal_class_test(*Vp, forms);
      }
      case LocusKind::Grade2: {
        std::vector<Poly> nonzero;
        for (const auto& f : forms)
          if (!f.is_zero()) nonzero.push_back(f);
        if (nonzero.size() < 2) return false;
        return grade_at_least_2(*Vp, make_ideal(Vp->ring(), nonzero));
      }
      case LocusKind::MaxSpread: {
        std::vector<Poly> nonzero;
        for (const auto& f : forms)
          if (!f.is_zero()) nonzero.push_back(f);
        if (nonzero.empty()) return false;
        return analytic_spread(*Vp, nonzero) == Vp->r();
      }
    }
    return false;
  };

  std::atomic<long> hits{0};
  int workers = std::max(1, jobs);
  std::vector<std::thread> pool;
  std::atomic<long> next{0};
  auto work = [&]() {
    while (true) {
      long i = next.fetch_add(1);
      if (i >= trials) break;
      uint64_t ts = splitmix64(seed ^ static_cast<uint64_t>(i + 1));
      if (classify(ts)) hits.fetch_add(1);
    }
  };
  if (workers == 1) {
    work();
  } else {
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  DensityReport rep;
  rep.kind = kind;
  rep.count = count;
  rep.degree = d;
  rep.prime = prime;
  rep.trials = trials;
  rep.hits = hits.load();
  rep.seed = seed;
  return rep;
}

}  // namespace birkit
