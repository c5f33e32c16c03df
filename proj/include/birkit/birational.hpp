#ifndef BIRKIT_BIRATIONAL_HPP
#define BIRKIT_BIRATIONAL_HPP

#include <mutex>
#include <optional>
#include <string>

#include "birkit/invariants.hpp"

namespace birkit {

enum class ClearDegree { Yes, No, Unknown };
enum class BirKind { Yes, No, Indeterminate };

struct RationalMap;

struct BirationalVerdict {
  BirKind kind = BirKind::Indeterminate;
  std::shared_ptr<RationalMap> inverse;  // set when kind == Yes
  int inverse_degree = 0;
  std::string reason;
  int search_cap = 0;
};

struct MapCache {
  std::mutex mu;
  std::optional<bool> well_defined;
  std::optional<bool> dominant;
  std::optional<ClearDegree> clear_degree;
  std::optional<BirationalVerdict> birational;
};

/// A rational self-map of X given by n+1 forms of one degree (a representative
/// with coefficients in S). Verdicts are cached write-once.
struct RationalMap {
  VarietyPtr X;
  std::vector<Poly> forms;
  int degree = 0;
  mutable std::shared_ptr<MapCache> cache = std::make_shared<MapCache>();
};

/// Validates count (n+1), homogeneity, single degree, not all forms in p;
/// normalizes the tuple projectively.
RationalMap make_map(VarietyPtr X, std::vector<Poly> forms);
RationalMap make_map(VarietyPtr X, const std::vector<std::string>& texts);

bool is_well_defined(const RationalMap& h);

/// Same map on X: h_i h'_j - h_j h'_i in p for all i < j.
bool same_map(const RationalMap& h, const RationalMap& hp);

/// Basis of the k-space of (n+1)-tuples g of degree-e forms with
/// g_i h_j - g_j h_i in p for all i, j. Includes the tuples with every
/// coordinate in p; interpret the zero map at use sites.
std::vector<std::vector<Poly>> representatives_of_degree(const RationalMap& h, int e);

/// Maximal analytic spread of the base ideal; the map-theoretic reading
/// (dense image) additionally needs is_well_defined, gated in the pipeline.
bool is_dominant(const RationalMap& h);

ClearDegree clear_degree_check(const RationalMap& h, int trials = 32, uint64_t seed = 1);

struct InverseBound {
  int n = 0, m = 0, d = 0, d0 = 0;
  long delta = 0;
  mpz_class value;
  mpz_class gabber;  // d^(n-1) comparison bound
  bool exceeds_gabber = false;
};

/// Exact inverse-degree bound B(X, d) with m = n; fractional brackets are
/// ceiled before exponentiation so the bound stays an upper bound.
InverseBound inverse_degree_bound(const VarietyPresentation& V, int d);

/// Search degrees 1..cap for a left inverse by exact linear algebra; any
/// solution with g∘f nonzero mod p is the inverse. Returns none if the cap
/// is exhausted.
std::optional<RationalMap> find_inverse(const RationalMap& h, int degree_cap);

/// Both compositions are multiples of the identity modulo p and nonzero.
bool verify_inverse_pair(const RationalMap& f, const RationalMap& g);

BirationalVerdict is_birational(const RationalMap& h, std::optional<int> cap = {},
                                uint64_t seed = 2024);

struct MapVerdict {
  bool well_defined = false;
  bool dominant = false;
  ClearDegree clear_degree = ClearDegree::Unknown;
  BirationalVerdict birational;
  bool in_bir_xd = false;
  std::vector<std::string> notes;
};

MapVerdict bir_xd_membership(const RationalMap& h, std::optional<int> cap = {},
                             int trials = 32, uint64_t seed = 1);

/// Concatenated normal-form coefficient vectors of the forms on the s
/// standard monomials of degree d, first nonzero coordinate scaled to 1.
std::vector<Coeff> canonical_coordinates(const RationalMap& h, bool assume_clear = false);

struct SuvReport {
  bool applicable = false;
  mpz_class lhs, rhs;
  bool equality = false;
  int r = 0, g = 0;
  bool r_le_g_plus_1 = false;
  std::optional<bool> birational_consistent;
  std::string note;
};

/// Multiplicity comparison e(R) vs e(R) d^{r-1}, valid when the base locus is
/// empty as a subscheme of X (otherwise applicable = false).
SuvReport suv_check(const RationalMap& h);

struct EdimBoundReport {
  mpz_class bound;
  int hf_rd = 0;
  bool c1_quasi_projective = false;  // HF_p(d) == 0
};

EdimBoundReport edim_bound(const VarietyPresentation& V, int d);

/// Substitute inner forms into outer's variables.
std::vector<Poly> compose_forms(const std::vector<Poly>& outer, const std::vector<Poly>& inner);

/// Default practical search cap d^(n-1) + 2.
int default_inverse_cap(const VarietyPresentation& V, int d);

/// Monte-Carlo fiber degree of h at random rational points of X over a large
/// prime field (the session prime when X is already finite). Returns the
/// agreed degree of >= 2 successful probes, or nothing when inconclusive.
std::optional<int> probe_generic_fiber_degree(const RationalMap& h, uint64_t seed,
                                              int points = 3);

}  // namespace birkit

#endif
