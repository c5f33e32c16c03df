#ifndef BIRKIT_INVARIANTS_HPP
#define BIRKIT_INVARIANTS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "birkit/groebner.hpp"
#include "birkit/linalg.hpp"

namespace birkit {

/// Hilbert series data of a graded quotient S/I: numerator N(t) with
/// HS(t) = N(t)/(1-t)^nvars, Krull dimension, and multiplicity (the reduced
/// numerator evaluated at 1).
struct HilbertData {
  std::vector<mpz_class> numerator;          // dense in t
  std::vector<mpz_class> reduced_numerator;  // after dividing by (1-t)^k
  int dim = 0;
  mpz_class multiplicity = 0;
};

/// Numerator of the Hilbert series of S/(monomial ideal), by pivot splitting.
std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> gens, int nvars);
HilbertData hilbert_from_leading_terms(const std::vector<Monomial>& lms, int nvars);

/// dim S/I from the initial ideal (largest coordinate subspace meeting no
/// leading monomial's support).
int krull_dim_monomial(const std::vector<Monomial>& lms, int nvars);
int krull_dim(const Ideal& I, const ResourceLimits& lim = {});

/// X = V(p) in P^n presented by its homogeneous defining ideal. Primality is
/// recorded, not verified. Carries the cached grevlex basis, dimension r of
/// R = S/p, the top degree d0 of a minimal generating set, and Hilbert data.
class VarietyPresentation {
 public:
  VarietyPresentation(RingPtr ring, Ideal defining, ResourceLimits lim = {});

  const RingPtr& ring() const { return ring_; }
  const Ideal& defining_ideal() const { return defining_; }
  const GroebnerBasis& gb() const { return gb_; }
  const ResourceLimits& limits() const { return limits_; }
  int r() const { return r_; }          // Krull dimension of R
  int dim_x() const { return r_ - 1; }  // projective dimension
  int n() const { return ring_->nvars() - 1; }
  int d0() const { return d0_; }
  bool nondegenerate() const { return nondegenerate_; }

  /// HF_R(d): number of degree-d standard monomials.
  int hilbert_function(int d) const;
  /// HF_p(d) = C(n+d,d) - HF_R(d).
  mpz_class hf_ideal(int d) const;
  const HilbertData& hilbert_data() const;
  const std::vector<Monomial>& standard_monomials(int d) const;

 private:
  RingPtr ring_;
  Ideal defining_;
  GroebnerBasis gb_;
  ResourceLimits limits_;
  int r_ = 0;
  int d0_ = 0;
  bool nondegenerate_ = false;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<Monomial>> std_cache_;
  mutable std::optional<HilbertData> hd_;
};

using VarietyPtr = std::shared_ptr<const VarietyPresentation>;
VarietyPtr make_variety(RingPtr ring, Ideal defining, ResourceLimits lim = {});

/// true iff dim R/(forms) = r - #forms (ideal of the principal class).
bool principal_class_test(const VarietyPresentation& V, const std::vector<Poly>& forms);

/// Presentation matrix of (g_1..g_r) -> sum g_i f_i : (R_{m-d})^r -> R_m on
/// standard-monomial bases.
struct TauMatrix {
  std::vector<Poly> forms;
  int m = 0;
  int rows = 0, cols = 0;  // rows = dim_k R_m
  DenseMatrix mat;
  long rank = 0;
};

TauMatrix tau_matrix(const VarietyPresentation& V, const std::vector<Poly>& forms, int m);
/// Surjectivity of tau^m; precondition m >= max(d, generator degrees of p).
bool tau_surjective(const VarietyPresentation& V, const std::vector<Poly>& forms, int m);
int tau_floor(const VarietyPresentation& V, int d);

enum class TriBool { True, False, Indeterminate };
/// Sweep m over [floor, floor+sweep]; True is certified, otherwise
/// Indeterminate (no effective bound for stabilization is known).
TriBool tau_decide(const VarietyPresentation& V, const std::vector<Poly>& forms, int sweep = 4);

/// grade(I, R) >= 2 for I given by lifts to S: picks the first generator g
/// that is nonzero mod p (a regular element of the domain R) and tests
/// (g) :_R I = (g) by basis comparison.
bool grade_at_least_2(const VarietyPresentation& V, const Ideal& lifts);

/// Kernel of k[y_1..y_s] -> R, y_i -> f_i (forms of one degree): the fiber
/// ring presentation. Returned in a fresh ring over the y's.
Ideal fiber_kernel(const VarietyPresentation& V, const std::vector<Poly>& forms);

/// Analytic spread: dim k[y]/fiber_kernel. Returns 0 when all forms lie in p.
int analytic_spread(const VarietyPresentation& V, const std::vector<Poly>& forms);

/// k-basis of the degree-d piece of an ideal (coefficient row space of
/// monomial multiples of the generators).
std::vector<Poly> degree_piece_basis(const Ideal& I, int d);

/// Coefficient vector of f on the degree-d standard monomials of V.
std::vector<Coeff> nf_coeff_vector(const VarietyPresentation& V, const Poly& f, int d);

}  // namespace birkit

#endif
