#ifndef MONDEPTH_REES_HPP
#define MONDEPTH_REES_HPP

#include <optional>
#include <string>
#include <vector>

#include "mondepth/betti.hpp"
#include "mondepth/hilbert.hpp"
#include "mondepth/intpoly.hpp"
#include "mondepth/lattice.hpp"
#include "mondepth/monomial.hpp"

namespace mondepth {

/// The Rees algebra of a monomial ideal as an affine semigroup in Z^(n+1):
/// the coordinate directions e_1..e_n plus (a_j, 1) for each minimal
/// generator. delta is the common generator degree; under the standard
/// grading (every algebra generator in degree 1) x^a t^k sits in degree
/// |a| - (delta-1) k.
struct ReesSemigroup {
  int ambient = 0;  // n + 1
  IntMat gens;
  Int delta = 0;
};

/// Requires I proper, nonzero and equigenerated (NotEquigeneratedError).
ReesSemigroup rees_semigroup(const MonomialIdeal& I);

/// The same generator set without the equigeneration requirement, for
/// normality questions where no grading is needed.
AffineMonoid rees_monoid(const MonomialIdeal& I);

/// Dimension of the degree-d piece of the Rees algebra:
/// HF(d) = sum_{k=0..d} count_in_ideal(I^k, d + (delta-1)k).
Int rees_hilbert_function(const MonomialIdeal& I, long d,
                          HilbertCache* cache = nullptr,
                          const ResourceLimits& lim = ResourceLimits::defaults());

/// h-vector candidate: coefficients of (sum_{d<=D} HF(d) t^d) * (1-t)^(n+1),
/// reported up to the last nonzero coefficient. `stable` means the final
/// `window` computed coefficients past the report are all zero — a
/// confidence statement, not a proof.
struct HVectorReport {
  IntPolynomial coeffs;
  long degree_bound = 0;  // D
  int window = 0;         // w
  bool stable = false;
};

HVectorReport rees_hvector(const MonomialIdeal& I, long degree_bound, int window,
                           HilbertCache* cache = nullptr,
                           const ResourceLimits& lim = ResourceLimits::defaults());

/// Normality of the Rees semigroup inside the full lattice Z^(n+1).
NormalityVerdict rees_normality(const MonomialIdeal& I,
                                const ResourceLimits& lim = ResourceLimits::defaults());

/// Cohen-Macaulay certificate for R(I). Normality certifies CM (Hochster); a
/// stable h-vector with a negative coefficient refutes it; anything else is
/// inconclusive. Missing equigeneration blocks only the h-vector route.
struct CmStatus {
  enum class Kind { certified_cm, certified_not_cm, inconclusive };
  Kind kind = Kind::inconclusive;
  std::optional<NormalityVerdict> normality;
  std::optional<HVectorReport> hvector;
  int negative_index = -1;  // offending coefficient for certified_not_cm
  std::string reason;       // for inconclusive
};

CmStatus rees_cm_status(const MonomialIdeal& I, long degree_bound, int window,
                        HilbertCache* cache = nullptr,
                        const ResourceLimits& lim = ResourceLimits::defaults());

/// Analytic spread = rank of the exponent matrix (equigenerated only).
int analytic_spread(const MonomialIdeal& I);

/// Combined verdict for the constant-depth criterion: summand and
/// Rees-CM certificates beside the empirical depth sequence. When both
/// hypotheses are certified the depth-function must come out constant; a
/// contradiction aborts with TheoremViolationError.
struct Verdict {
  SummandVerdict summand;
  CmStatus rees;
  bool theorem_applies = false;
  DepthReport empirical;
  std::vector<std::string> notes;
};

Verdict analyze_constant_depth(const MonomialIdeal& I, int kmax, long degree_bound,
                               int window, const Field& field,
                               const ResourceLimits& lim = ResourceLimits::defaults());

}

#endif
