#ifndef BIRKIT_GROEBNER_HPP
#define BIRKIT_GROEBNER_HPP

#include <optional>
#include <vector>

#include "birkit/poly.hpp"

namespace birkit {

/// Guardrails for Buchberger-based computations; exceeding one throws
/// Error(ResourceLimit).
struct ResourceLimits {
  int max_degree = 40;        // cap on S-pair lcm total degree
  long max_pairs = 200000;    // cap on processed S-pairs
  long max_iterations = 256;  // cap on saturation loops
  long max_matrix_cells = 8000000;
};

struct Ideal {
  RingPtr ring;
  std::vector<Poly> gens;  // nonzero, boundary-normalized
};

/// Drops zero generators, normalizes, verifies ring consistency.
Ideal make_ideal(RingPtr ring, std::vector<Poly> gens);
Ideal make_ideal(RingPtr ring, const std::vector<std::string>& texts);
bool ideal_is_homogeneous(const Ideal& I);
int max_generator_degree(const Ideal& I);  // 0 for the zero ideal

/// Reduced Groebner basis: auto-reduced, elements monic over GF(p) and
/// integer-primitive with positive leading coefficient over QQ, sorted
/// ascending by leading monomial. Canonical for (ideal, order).
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(Ideal source, RingPtr order_ring, std::vector<Poly> elems);

  const Ideal& source() const { return source_; }
  const RingPtr& ring() const { return ring_; }  // carries the GB order
  MonomialOrder order() const { return ring_->order; }
  const std::vector<Poly>& elements() const { return elems_; }
  const std::vector<Monomial>& leading_monomials() const { return lms_; }
  bool is_zero_ideal() const { return elems_.empty(); }
  bool contains_unit() const;
  int max_degree() const;

 private:
  Ideal source_;
  RingPtr ring_;
  std::vector<Poly> elems_;
  std::vector<Monomial> lms_;
};

GroebnerBasis buchberger(const Ideal& I, MonomialOrder order,
                         const ResourceLimits& lim = {});
GroebnerBasis buchberger(const Ideal& I, const ResourceLimits& lim = {});

/// Division-algorithm remainder. Exact and k-linear in f; no monomial of the
/// result lies in the leading-term ideal. If cofactors is non-null it
/// receives one quotient per basis element with
/// f = sum_i cofactors[i] * g_i + remainder.
Poly normal_form(const Poly& f, const GroebnerBasis& G,
                 std::vector<Poly>* cofactors = nullptr);

bool ideal_membership(const Poly& f, const GroebnerBasis& G);
bool ideal_membership(const Poly& f, const Ideal& I, const ResourceLimits& lim = {});

/// Buchberger criterion: every S-polynomial reduces to zero.
bool certify_buchberger(const GroebnerBasis& G, const ResourceLimits& lim = {});

Ideal intersect_ideals(const Ideal& I, const Ideal& J, const ResourceLimits& lim = {});
Ideal colon_ideal(const Ideal& I, const Ideal& J, const ResourceLimits& lim = {});
Ideal saturate(const Ideal& I, const Ideal& J, const ResourceLimits& lim = {});

/// Generators of I ∩ k[keep]; result lives in a fresh ring over the kept
/// variables (grevlex), in their original relative order.
Ideal eliminate(const Ideal& I, const std::vector<int>& keep,
                const ResourceLimits& lim = {});

/// Canonical-GB equality of ideals (same ring).
bool ideal_equal(const Ideal& I, const Ideal& J, const ResourceLimits& lim = {});

/// Exact division f / g with zero remainder required.
Poly poly_exact_div(const Poly& f, const Poly& g);

}  // namespace birkit

#endif
