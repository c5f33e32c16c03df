#ifndef BIRKIT_MONOMIAL_HPP
#define BIRKIT_MONOMIAL_HPP

#include <cstdint>
#include <vector>

namespace birkit {

/// Dense exponent vector; length equals the ring's variable count.
struct Monomial {
  std::vector<int32_t> exps;

  Monomial() = default;
  explicit Monomial(size_t n) : exps(n, 0) {}
  explicit Monomial(std::vector<int32_t> e) : exps(std::move(e)) {}

  int degree() const {
    int d = 0;
    for (int32_t e : exps) d += e;
    return d;
  }
  size_t nvars() const { return exps.size(); }
  bool is_one() const {
    for (int32_t e : exps) if (e != 0) return false;
    return true;
  }
  bool operator==(const Monomial&) const = default;
};

bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_quot(const Monomial& b, const Monomial& a);  // b / a, requires a | b
bool mono_coprime(const Monomial& a, const Monomial& b);

struct MonomialOrder {
  enum class Kind { Lex, GrevLex, BlockElim };
  Kind kind = Kind::GrevLex;
  // BlockElim: lex between the leading block of `block` variables and the
  // rest, graded reverse lex inside each block.
  int block = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
  static MonomialOrder block_elim(int k) { return {Kind::BlockElim, k}; }
  bool operator==(const MonomialOrder&) const = default;
};

/// Three-way comparison of a and b: >0 means a > b in the order.
int mono_cmp(const MonomialOrder& o, const Monomial& a, const Monomial& b);

}  // namespace birkit

#endif
