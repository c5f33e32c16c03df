#include "birkit/invariants.hpp"

#include <algorithm>

#include "birkit/errors.hpp"

namespace birkit {

namespace {

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Monomial> min;
  for (const auto& m : gens) {
    bool covered = false;
    for (const auto& g : min)
      if (mono_divides(g, m)) { covered = true; break; }
    if (!covered) min.push_back(m);
  }
  return min;
}

std::vector<mpz_class> poly_mul_1d(const std::vector<mpz_class>& a,
                                   const std::vector<mpz_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpz_class> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<mpz_class> poly_add_1d(std::vector<mpz_class> a,
                                   const std::vector<mpz_class>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<mpz_class> one_minus_t_pow(int d) {
  // 1 - t^d
  std::vector<mpz_class> r(d + 1, 0);
  r[0] = 1;
  r[d] = -1;
  return r;
}

}  // namespace

std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().degree() == 0) return {};  // unit ideal, N = 0

  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!mono_coprime(gens[i], gens[j])) coprime = false;
  if (coprime) {
    std::vector<mpz_class> r = {1};
    for (const auto& g : gens) r = poly_mul_1d(r, one_minus_t_pow(g.degree()));
    return r;
  }

  // pivot on the most shared variable: N(I) = N(I + (v)) + t * N(I : v)
  std::vector<int> freq(nvars, 0);
  for (const auto& g : gens)
    for (int i = 0; i < nvars; ++i)
      if (g.exps[i] > 0) ++freq[i];
  int v = 0;
  for (int i = 1; i < nvars; ++i)
    if (freq[i] > freq[v]) v = i;

  std::vector<Monomial> plus;  // I + (v): generators not divisible by v, plus v
  std::vector<Monomial> quot;  // I : v
  Monomial vm((size_t)nvars);
  vm.exps[v] = 1;
  for (const auto& g : gens) {
    Monomial q = g;
    if (q.exps[v] > 0) q.exps[v] -= 1;
    quot.push_back(std::move(q));
    if (g.exps[v] == 0) plus.push_back(g);
  }
  plus.push_back(vm);

  std::vector<mpz_class> a = hilbert_numerator(std::move(plus), nvars);
  std::vector<mpz_class> b = hilbert_numerator(std::move(quot), nvars);
  b.insert(b.begin(), 0);  // multiply by t
  return poly_add_1d(std::move(a), b);
}

HilbertData hilbert_from_leading_terms(const std::vector<Monomial>& lms, int nvars) {
  HilbertData hd;
  hd.numerator = hilbert_numerator(lms, nvars);
  std::vector<mpz_class> red = hd.numerator;
  int k = 0;
  auto value_at_one = [](const std::vector<mpz_class>& p) {
    mpz_class s = 0;
    for (const auto& c : p) s += c;
    return s;
  };
  if (red.empty()) {
    // zero ring
    hd.dim = 0;
    hd.multiplicity = 0;
    return hd;
  }
  while (value_at_one(red) == 0) {
    // divide by (1 - t): q(t) with red = (1-t) q; q_i = sum_{j<=i} red_j
    std::vector<mpz_class> q(red.size() - 1, 0);
    mpz_class run = 0;
    for (size_t i = 0; i + 1 < red.size(); ++i) {
      run += red[i];
      q[i] = run;
    }
    red = std::move(q);
    ++k;
    if (red.empty()) break;
  }
  hd.reduced_numerator = red;
  hd.dim = nvars - k;
  hd.multiplicity = value_at_one(red);
  return hd;
}

int krull_dim_monomial(const std::vector<Monomial>& lms, int nvars) {
  if (nvars > 24) throw Error(ErrorKind::ResourceLimit, "too many variables for dimension search");
  std::vector<Monomial> gens = minimalize_monomials(lms);
  if (!gens.empty() && gens.front().degree() == 0) return -1;  // unit ideal
  std::vector<uint32_t> supports;
  for (const auto& g : gens) {
    uint32_t s = 0;
    for (int i = 0; i < nvars; ++i)
      if (g.exps[i] > 0) s |= (1u << i);
    supports.push_back(s);
  }
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool indep = true;
    for (uint32_t s : supports)
      if ((s & ~mask) == 0) { indep = false; break; }
    if (indep) best = size;
  }
  return best;
}

int krull_dim(const Ideal& I, const ResourceLimits& lim) {
  if (I.gens.empty()) return I.ring->nvars();
  GroebnerBasis G = buchberger(I, MonomialOrder::grevlex(), lim);
  return krull_dim_monomial(G.leading_monomials(), I.ring->nvars());
}

VarietyPresentation::VarietyPresentation(RingPtr ring, Ideal defining, ResourceLimits lim)
    : ring_(std::move(ring)), defining_(std::move(defining)), limits_(lim) {
  if (!same_ring(ring_, defining_.ring))
    throw Error(ErrorKind::RingMismatch, "defining ideal ring mismatch");
  for (const auto& g : defining_.gens)
    if (!g.is_homogeneous())
      throw Error(ErrorKind::Homogeneity,
                  "defining ideal generator is not homogeneous: " + g.to_string());
  gb_ = buchberger(defining_, MonomialOrder::grevlex(), limits_);
  if (gb_.contains_unit())
    throw Error(ErrorKind::Precondition, "defining ideal is the unit ideal");
  r_ = krull_dim_monomial(gb_.leading_monomials(), ring_->nvars());

  // d0: maximal degree in a minimal generating set (graded Nakayama prune of
  // the reduced basis, degree-ascending)
  std::vector<Poly> pool = gb_.elements();
  std::sort(pool.begin(), pool.end(),
            [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  std::vector<Poly> kept;
  for (const auto& g : pool) {
    if (kept.empty()) {
      kept.push_back(g);
      continue;
    }
    if (!ideal_membership(g, make_ideal(ring_, kept), limits_)) kept.push_back(g);
  }
  d0_ = 0;
  for (const auto& g : kept) d0_ = std::max(d0_, g.degree());
  nondegenerate_ = (hilbert_function(1) == ring_->nvars());
}

const std::vector<Monomial>& VarietyPresentation::standard_monomials(int d) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = std_cache_.find(d);
  if (it != std_cache_.end()) return it->second;
  std::vector<Monomial> std_mons;
  for (const auto& m : monomials_of_degree(*ring_, d)) {
    bool in_lt = false;
    for (const auto& lm : gb_.leading_monomials())
      if (mono_divides(lm, m)) { in_lt = true; break; }
    if (!in_lt) std_mons.push_back(m);
  }
  return std_cache_.emplace(d, std::move(std_mons)).first->second;
}

int VarietyPresentation::hilbert_function(int d) const {
  if (d < 0) throw Error(ErrorKind::Precondition, "degree must be >= 0");
  return static_cast<int>(standard_monomials(d).size());
}

mpz_class VarietyPresentation::hf_ideal(int d) const {
  return monomial_count(ring_->nvars(), d) - hilbert_function(d);
}

const HilbertData& VarietyPresentation::hilbert_data() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!hd_) hd_ = hilbert_from_leading_terms(gb_.leading_monomials(), ring_->nvars());
  return *hd_;
}

bool principal_class_test(const VarietyPresentation& V, const std::vector<Poly>& forms) {
  int j = static_cast<int>(forms.size());
  if (j < 1 || j > V.r())
    throw Error(ErrorKind::Precondition,
                "need 1 <= j <= r = " + std::to_string(V.r()) + ", got " + std::to_string(j));
  for (const auto& f : forms)
    if (normal_form(f, V.gb()).is_zero()) return false;
  std::vector<Poly> gens = V.defining_ideal().gens;
  gens.insert(gens.end(), forms.begin(), forms.end());
  return krull_dim(make_ideal(V.ring(), std::move(gens)), V.limits()) == V.r() - j;
}

int tau_floor(const VarietyPresentation& V, int d) {
  return std::max(d, max_generator_degree(V.defining_ideal()));
}

TauMatrix tau_matrix(const VarietyPresentation& V, const std::vector<Poly>& forms, int m) {
  if (forms.empty()) throw Error(ErrorKind::Precondition, "no forms");
  int d = forms.front().degree();
  for (const auto& f : forms)
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != d)
      throw Error(ErrorKind::Precondition, "forms must be nonzero homogeneous of one degree");
  if (m < tau_floor(V, d))
    throw Error(ErrorKind::Precondition,
                "m must be at least max(d, generator degrees) = " +
                    std::to_string(tau_floor(V, d)));

  const auto& rows_mons = V.standard_monomials(m);
  const auto& col_mons = V.standard_monomials(m - d);
  int rows = static_cast<int>(rows_mons.size());
  int cols = static_cast<int>(forms.size() * col_mons.size());

  std::map<std::vector<int32_t>, int> row_index;
  for (int i = 0; i < rows; ++i) row_index[rows_mons[i].exps] = i;

  TauMatrix T;
  T.forms = forms;
  T.m = m;
  T.rows = rows;
  T.cols = cols;
  T.mat = DenseMatrix(rows, cols);
  int c = 0;
  for (const auto& f : forms) {
    for (const auto& mu : col_mons) {
      Poly prod = normal_form(f.times_term(mu, Coeff(1)), V.gb());
      for (const auto& t : prod.terms()) T.mat.at(row_index.at(t.mono.exps), c) = t.coeff;
      ++c;
    }
  }
  T.rank = mat_rank(T.mat, V.ring()->F);
  return T;
}

bool tau_surjective(const VarietyPresentation& V, const std::vector<Poly>& forms, int m) {
  if (static_cast<int>(forms.size()) != V.r())
    throw Error(ErrorKind::Precondition, "tau needs exactly r forms");
  TauMatrix T = tau_matrix(V, forms, m);
  return T.rank == T.rows;
}

TriBool tau_decide(const VarietyPresentation& V, const std::vector<Poly>& forms, int sweep) {
  int floor = tau_floor(V, forms.front().degree());
  for (int m = floor; m <= floor + sweep; ++m)
    if (tau_surjective(V, forms, m)) return TriBool::True;
  return TriBool::Indeterminate;
}

bool grade_at_least_2(const VarietyPresentation& V, const Ideal& lifts) {
  const Poly* g = nullptr;
  for (const auto& f : lifts.gens)
    if (!normal_form(f, V.gb()).is_zero()) { g = &f; break; }
  if (!g) return false;  // I == 0 in R
  std::vector<Poly> a_gens = V.defining_ideal().gens;
  a_gens.push_back(*g);
  Ideal A = make_ideal(V.ring(), std::move(a_gens));
  std::vector<Poly> b_gens = V.defining_ideal().gens;
  b_gens.insert(b_gens.end(), lifts.gens.begin(), lifts.gens.end());
  Ideal B = make_ideal(V.ring(), std::move(b_gens));
  Ideal C = colon_ideal(A, B, V.limits());
  return ideal_equal(C, A, V.limits());
}

Ideal fiber_kernel(const VarietyPresentation& V, const std::vector<Poly>& forms) {
  if (forms.empty()) throw Error(ErrorKind::Precondition, "no forms");
  int d = -1;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous())
      throw Error(ErrorKind::Precondition, "forms must be homogeneous");
    if (d < 0) d = f.degree();
    else if (f.degree() != d)
      throw Error(ErrorKind::Precondition, "forms must share one degree");
  }
  const RingPtr& R = V.ring();
  int n = R->nvars();
  int s = static_cast<int>(forms.size());
  std::vector<std::string> ynames = fresh_var_names(R->vars, "y", s);
  std::vector<std::string> vars = R->vars;
  vars.insert(vars.end(), ynames.begin(), ynames.end());
  RingPtr ext = make_ring(R->field, vars, MonomialOrder::grevlex());
  std::vector<int> up(n);
  for (int i = 0; i < n; ++i) up[i] = i;
  std::vector<Poly> gens;
  for (const auto& p : V.defining_ideal().gens) gens.push_back(transport(p, ext, up));
  for (int i = 0; i < s; ++i)
    gens.push_back(Poly::variable(ext, n + i) - transport(forms[i], ext, up));
  std::vector<int> keep(s);
  for (int i = 0; i < s; ++i) keep[i] = n + i;
  return eliminate(make_ideal(ext, std::move(gens)), keep, V.limits());
}

int analytic_spread(const VarietyPresentation& V, const std::vector<Poly>& forms) {
  Ideal ker = fiber_kernel(V, forms);
  return krull_dim(ker, V.limits());
}

std::vector<Poly> degree_piece_basis(const Ideal& I, int d) {
  if (d < 0) throw Error(ErrorKind::Precondition, "degree must be >= 0");
  const RingPtr& R = I.ring;
  std::vector<Monomial> mons = monomials_of_degree(*R, d);
  std::map<std::vector<int32_t>, int> col_of;
  for (size_t i = 0; i < mons.size(); ++i) col_of[mons[i].exps] = static_cast<int>(i);

  std::vector<Poly> products;
  for (const auto& g : I.gens) {
    if (g.degree() > d || !g.is_homogeneous()) {
      if (!g.is_homogeneous())
        throw Error(ErrorKind::Precondition, "degree piece needs a homogeneous ideal");
      continue;
    }
    for (const auto& mu : monomials_of_degree(*R, d - g.degree()))
      products.push_back(g.times_term(mu, Coeff(1)));
  }
  if (products.empty()) return {};
  DenseMatrix M(static_cast<int>(products.size()), static_cast<int>(mons.size()));
  for (size_t r = 0; r < products.size(); ++r)
    for (const auto& t : products[r].terms())
      M.at(static_cast<int>(r), col_of.at(t.mono.exps)) = t.coeff;
  std::vector<Poly> basis;
  for (const auto& row : mat_row_basis(std::move(M), R->F)) {
    std::vector<Term> terms;
    for (size_t c = 0; c < row.size(); ++c)
      if (!R->F.is_zero(row[c])) terms.push_back({mons[c], row[c]});
    basis.push_back(projective_normal(Poly::from_terms(R, std::move(terms))));
  }
  return basis;
}

std::vector<Coeff> nf_coeff_vector(const VarietyPresentation& V, const Poly& f, int d) {
  Poly nf = normal_form(f, V.gb());
  const auto& std_mons = V.standard_monomials(d);
  std::map<std::vector<int32_t>, int> idx;
  for (size_t i = 0; i < std_mons.size(); ++i) idx[std_mons[i].exps] = static_cast<int>(i);
  std::vector<Coeff> v(std_mons.size(), Coeff(0));
  for (const auto& t : nf.terms()) {
    auto it = idx.find(t.mono.exps);
    if (it == idx.end())
      throw Error(ErrorKind::Internal, "normal form leaves the expected degree piece");
    v[it->second] = t.coeff;
  }
  return v;
}

VarietyPtr make_variety(RingPtr ring, Ideal defining, ResourceLimits lim) {
  return std::make_shared<VarietyPresentation>(std::move(ring), std::move(defining), lim);
}

}  // namespace birkit
