#include "birkit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "birkit/errors.hpp"

namespace birkit {

Poly Poly::constant(RingPtr ring, const Coeff& c) {
  Poly p(ring);
  Coeff r = ring->F.reduce(c);
  if (!ring->F.is_zero(r)) {
    p.terms_.push_back({Monomial(ring->nvars()), r});
    p.degree_cache_ = 0;
  }
  return p;
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Coeff& c) {
  Poly p(ring);
  Coeff r = ring->F.reduce(c);
  if (!ring->F.is_zero(r)) {
    p.terms_.push_back({m, r});
    p.degree_cache_ = m.degree();
  }
  return p;
}

Poly Poly::variable(RingPtr ring, int index) {
  Monomial m(ring->nvars());
  m.exps[index] = 1;
  return monomial(ring, m, Coeff(1));
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Field& F = ring->F;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return mono_cmp(ring->order, a.mono, b.mono) > 0;
  });
  Poly p(ring);
  for (auto& t : terms) {
    Coeff c = F.reduce(t.coeff);
    if (F.is_zero(c)) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      Coeff s = F.add(p.terms_.back().coeff, c);
      if (F.is_zero(s)) p.terms_.pop_back();
      else p.terms_.back().coeff = s;
    } else {
      p.terms_.push_back({std::move(t.mono), std::move(c)});
    }
  }
  p.recompute_degree();
  return p;
}

void Poly::recompute_degree() {
  degree_cache_ = -1;
  for (const auto& t : terms_) degree_cache_ = std::max(degree_cache_, t.mono.degree());
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

const Term& Poly::leading() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading term");
  return terms_.front();
}

bool Poly::operator==(const Poly& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, ring_->F.neg(t.coeff)});
  p.degree_cache_ = degree_cache_;
  return p;
}

static void check_same_ring(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw Error(ErrorKind::RingMismatch, "operands live in different rings");
}

Poly Poly::operator+(const Poly& o) const {
  check_same_ring(*this, o);
  const Field& F = ring_->F;
  Poly p(ring_);
  p.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(ring_->order, terms_[i].mono, o.terms_[j].mono);
    if (c > 0) p.terms_.push_back(terms_[i++]);
    else if (c < 0) p.terms_.push_back(o.terms_[j++]);
    else {
      Coeff s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!F.is_zero(s)) p.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i; ++j;
    }
  }
  while (i < terms_.size()) p.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) p.terms_.push_back(o.terms_[j++]);
  p.recompute_degree();
  return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::times_term(const Monomial& m, const Coeff& c) const {
  const Field& F = ring_->F;
  Coeff cr = F.reduce(c);
  Poly p(ring_);
  if (F.is_zero(cr)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coeff v = F.mul(t.coeff, cr);
    if (!F.is_zero(v)) p.terms_.push_back({mono_mul(t.mono, m), std::move(v)});
  }
  p.recompute_degree();
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  check_same_ring(*this, o);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : o.terms_)
      acc.push_back({mono_mul(s.mono, t.mono), s.coeff * t.coeff});
  return from_terms(ring_, std::move(acc));
}

Poly Poly::scaled(const Coeff& c) const {
  return times_term(Monomial(ring_->nvars()), c);
}

Coeff projective_scalar(const Poly& f) {
  if (f.is_zero()) return Coeff(1);
  const Field& F = f.ring()->F;
  if (F.is_prime_field()) return f.leading_coeff();
  // over QQ: scalar = sign(lc) * gcd(numerators) / lcm(denominators)
  mpz_class g = 0, l = 1;
  for (const auto& t : f.terms()) {
    g = gcd(g, t.coeff.get_num());
    l = lcm(l, t.coeff.get_den());
  }
  mpq_class s(g, l);
  s.canonicalize();
  if (sgn(f.leading_coeff()) < 0) s = -s;
  return s;
}

Poly projective_normal(const Poly& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.ring()->F.inv(projective_scalar(f)));
}

Poly transport(const Poly& f, const RingPtr& target, const std::vector<int>& var_map) {
  if (f.ring()->field != target->field)
    throw Error(ErrorKind::RingMismatch, "transport across different fields");
  std::vector<Term> acc;
  acc.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (size_t i = 0; i < t.mono.exps.size(); ++i) {
      if (t.mono.exps[i] == 0) continue;
      int j = var_map[i];
      if (j < 0)
        throw Error(ErrorKind::RingMismatch, "transport drops a used variable");
      m.exps[j] += t.mono.exps[i];
    }
    acc.push_back({std::move(m), t.coeff});
  }
  return Poly::from_terms(target, std::move(acc));
}

Poly reorder(const Poly& f, const RingPtr& target) {
  std::vector<int> idmap(f.ring()->nvars());
  for (size_t i = 0; i < idmap.size(); ++i) idmap[i] = static_cast<int>(i);
  return transport(f, target, idmap);
}

Poly poly_substitute(const Poly& f, const std::vector<Poly>& images) {
  if (images.empty()) throw Error(ErrorKind::Precondition, "no substitution images");
  RingPtr target = images.front().ring();
  for (const auto& g : images)
    if (!same_ring(g.ring(), target))
      throw Error(ErrorKind::RingMismatch, "substitution images in different rings");
  // cache powers of each image
  std::vector<std::vector<Poly>> pow(images.size());
  for (size_t i = 0; i < images.size(); ++i) pow[i].push_back(Poly::constant(target, Coeff(1)));
  auto power = [&](size_t i, int e) -> const Poly& {
    while (static_cast<int>(pow[i].size()) <= e)
      pow[i].push_back(pow[i].back() * images[i]);
    return pow[i][e];
  };
  Poly out = Poly::zero(target);
  for (const auto& t : f.terms()) {
    Poly prod = Poly::constant(target, t.coeff);
    for (size_t i = 0; i < t.mono.exps.size(); ++i)
      if (t.mono.exps[i] > 0) prod = prod * power(i, t.mono.exps[i]);
    out = out + prod;
  }
  return out;
}

Poly poly_mod_p(const Poly& f, const RingPtr& target) {
  if (target->field.kind != FieldKind::PrimeField)
    throw Error(ErrorKind::Precondition, "target must be a prime field ring");
  std::vector<Term> acc;
  for (const auto& t : f.terms()) acc.push_back({t.mono, t.coeff});
  return Poly::from_terms(target, std::move(acc));
}

Poly poly_arith(ArithOp op, const Poly& a, const Poly& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::ScalarMul:
      if (b.size() > 1 || (b.size() == 1 && !b.terms().front().mono.is_one()))
        throw Error(ErrorKind::Precondition, "scalar_mul needs a constant");
      return a.scaled(b.is_zero() ? Coeff(0) : b.terms().front().coeff);
  }
  throw Error(ErrorKind::Internal, "bad arith op");
}

Poly poly_arith(ArithOp op, const Poly& a, const Coeff& scalar) {
  if (op != ArithOp::ScalarMul) throw Error(ErrorKind::Precondition, "scalar form only for scalar_mul");
  return a.scaled(scalar);
}

std::pair<Monomial, Coeff> leading_term(const Poly& f) {
  const Term& t = f.leading();
  return {t.mono, t.coeff};
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = t.coeff;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) { os << "-"; c = -c; }
      first = false;
    } else {
      os << (neg ? " - " : " + ");
      if (neg) c = -c;
    }
    bool has_vars = !t.mono.is_one();
    bool coeff_shown = !(c == 1 && has_vars);
    if (coeff_shown) os << coeff_to_string(c);
    if (has_vars) {
      bool first_var = !coeff_shown;
      for (size_t i = 0; i < t.mono.exps.size(); ++i) {
        if (t.mono.exps[i] == 0) continue;
        if (!first_var) os << "*";
        first_var = false;
        os << ring_->vars[i];
        if (t.mono.exps[i] > 1) os << "^" << t.mono.exps[i];
      }
    }
  }
  return os.str();
}

}  // namespace birkit
