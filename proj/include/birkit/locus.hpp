#ifndef BIRKIT_LOCUS_HPP
#define BIRKIT_LOCUS_HPP

#include <string>

#include "birkit/invariants.hpp"

namespace birkit {

/// p(z_1..z_m) composed with parametric degree-d forms over a target ideal.
struct CompositionTemplate {
  Poly p;                // homogeneous, in a ring over z_1..z_m
  Ideal target;          // the homogeneous ideal b
  int arg_degree = 0;    // d
  int arity = 0;         // m
};

CompositionTemplate make_template(Poly p, Ideal target, int arg_degree);

/// Defining equations of the membership locus in the coefficient ring
/// k[a_{ij}]: a point (a_1..a_m) satisfies all equations iff
/// p(f_{a_1},..,f_{a_m}) lies in the target ideal.
struct LocusEquations {
  RingPtr parameter_ring;  // k[a<i>_<j>], 1 <= i <= m, 1 <= j <= N
  std::vector<Poly> equations;
};

LocusEquations locus_equations(const CompositionTemplate& T, const ResourceLimits& lim = {});

/// k-basis of the degree-d piece of b; size equals HF_b(d).
std::vector<Poly> vpz_basis(const Ideal& b, int d);

/// Ideal of maximal minors of the symbolic tau matrix (toy sizes only).
Ideal tau_minor_ideal(const VarietyPresentation& V, int d, int m,
                      const ResourceLimits& lim = {});

enum class LocusKind { PrincipalClass, Grade2, MaxSpread };

struct DensityReport {
  LocusKind kind = LocusKind::PrincipalClass;
  int count = 0;  // number of forms drawn per trial
  int degree = 0;
  long prime = 0;
  long trials = 0;
  long hits = 0;
  uint64_t seed = 0;

  std::string locus_name() const;
  std::string csv_header() const { return "locus,prime,trials,hits,seed"; }
  std::string csv_row() const;
};

/// Monte-Carlo density of a locus over GF(prime); V may be over QQ (it is
/// then reduced mod the prime) or over the same prime field. Reproducible:
/// trial i draws from Rng(splitmix64(seed ^ (i+1))).
DensityReport sample_locus(const VarietyPresentation& V, LocusKind kind, int count, int d,
                           long trials, long prime, uint64_t seed, int jobs = 1);

/// Reduce a QQ-presentation modulo p (identity when already over GF(p)).
VarietyPtr reduce_variety_mod_p(const VarietyPresentation& V, long p);

}  // namespace birkit

#endif
