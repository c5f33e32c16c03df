#ifndef BIRKIT_RING_HPP
#define BIRKIT_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "birkit/field.hpp"
#include "birkit/monomial.hpp"

namespace birkit {

/// Ambient graded polynomial ring k[x_0..x_n], standard grading.
struct PolyRingCtx {
  FieldSpec field;
  std::vector<std::string> vars;
  MonomialOrder order;
  Field F;

  PolyRingCtx(FieldSpec f, std::vector<std::string> v, MonomialOrder o)
      : field(f), vars(std::move(v)), order(o), F(f) {}

  int nvars() const { return static_cast<int>(vars.size()); }
  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }
};

using RingPtr = std::shared_ptr<const PolyRingCtx>;

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::grevlex());

/// Same structural ring (field, variables, order).
bool same_ring(const RingPtr& a, const RingPtr& b);
/// Same field and variables, order may differ.
bool same_ring_vars(const RingPtr& a, const RingPtr& b);

RingPtr with_order(const RingPtr& ring, MonomialOrder order);

/// All monomials of total degree d, listed descending in the ring order.
std::vector<Monomial> monomials_of_degree(const PolyRingCtx& ring, int d);

/// C(n+d, d) as an exact integer.
mpz_class monomial_count(int nvars, int d);

/// Names `base`, `base1`, ... not colliding with `taken`.
std::vector<std::string> fresh_var_names(const std::vector<std::string>& taken,
                                         const std::string& base, int count);

}  // namespace birkit

#endif
