#ifndef BIRKIT_POLY_HPP
#define BIRKIT_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "birkit/ring.hpp"

namespace birkit {

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Exact multivariate polynomial. Terms are kept strictly descending in the
/// ring's monomial order with no zero coefficients and no duplicates.
/// Arithmetic is exact and k-linear; projective_normal() produces the
/// boundary form (integer-primitive with positive leading coefficient over
/// QQ, monic over a prime field).
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const Coeff& c);
  static Poly monomial(RingPtr ring, const Monomial& m, const Coeff& c);
  static Poly variable(RingPtr ring, int index);
  /// Canonicalizes: sorts, merges duplicates, strips zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : degree_cache_; }
  bool is_homogeneous() const;

  const Term& leading() const;  // throws ZeroPolynomial on 0
  const Monomial& leading_monomial() const { return leading().mono; }
  const Coeff& leading_coeff() const { return leading().coeff; }

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Coeff& c) const;
  /// this * c*m (single-term multiply).
  Poly times_term(const Monomial& m, const Coeff& c) const;

  std::string to_string() const;

 private:
  void recompute_degree();
  RingPtr ring_;
  std::vector<Term> terms_;
  int degree_cache_ = -1;
};

/// Boundary canonical form: over QQ integer-primitive with positive leading
/// coefficient, over GF(p) monic. Zero stays zero.
Poly projective_normal(const Poly& f);

/// Scalar s with f = s * projective_normal(f); 1 for f = 0.
Coeff projective_scalar(const Poly& f);

/// Map f into `target` sending variable i of f's ring to variable
/// var_map[i] of target. Fields must agree; target order re-sorts terms.
Poly transport(const Poly& f, const RingPtr& target, const std::vector<int>& var_map);

/// Same variables, different order.
Poly reorder(const Poly& f, const RingPtr& target);

/// Substitute images[i] for variable i; images live in a common ring.
Poly poly_substitute(const Poly& f, const std::vector<Poly>& images);

/// Coefficient-wise reduction of an integer-coefficient polynomial over QQ
/// into the given prime-field ring (same variable names and order).
Poly poly_mod_p(const Poly& f, const RingPtr& target);

enum class ArithOp { Add, Sub, Mul, ScalarMul };
Poly poly_arith(ArithOp op, const Poly& a, const Poly& b);
Poly poly_arith(ArithOp op, const Poly& a, const Coeff& scalar);

std::pair<Monomial, Coeff> leading_term(const Poly& f);

/// Parse the external polynomial grammar. Errors carry 1-based positions.
Poly poly_parse(const std::string& text, const RingPtr& ring);

}  // namespace birkit

#endif
