#ifndef MONDEPTH_LATTICE_HPP
#define MONDEPTH_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "mondepth/limits.hpp"
#include "mondepth/linalg.hpp"
#include "mondepth/monomial.hpp"

namespace mondepth {

/// Integer lattice given by a canonical basis in Hermite normal form.
struct IntegerLattice {
  int dim = 0;
  IntMat basis;  // HNF rows, linearly independent; empty = zero lattice

  int rank() const { return static_cast<int>(basis.size()); }
};

IntegerLattice lattice_from_rows(const IntMat& rows, int dim);
bool lattice_contains(const IntegerLattice& l, const std::vector<Int>& v);

/// Affine monoid C = N{a_1..a_r} with nonzero generators in N^dim.
struct AffineMonoid {
  int dim = 0;
  IntMat gens;  // deduplicated, nonzero, componentwise >= 0

  static AffineMonoid make(int dim, IntMat gens);
};

/// Nonnegative integer coefficients expressing v over the generators, or
/// nullopt. The search is exhaustive (componentwise bounds, memoized), so
/// absence is a proof of non-membership.
std::optional<std::vector<Int>> monoid_contains(const AffineMonoid& m,
                                                const std::vector<Int>& v);

struct CompletionStats {
  std::size_t popped = 0;
  std::size_t pushed = 0;
  std::size_t basis_size = 0;
};

struct HilbertBasisResult {
  std::vector<std::vector<Int>> vectors;  // sorted by total degree, then lex
  std::string system;                      // description of the constraints
  CompletionStats stats;
};

/// Minimal Hilbert basis of L ∩ N^dim via Pottier-style completion from the
/// signed lattice basis, sum-of-coordinates priority. Requires L nonzero.
HilbertBasisResult hilbert_basis_lattice_positive(
    const IntegerLattice& l, const ResourceLimits& lim = ResourceLimits::defaults());

/// Facet inequalities of the rational cone spanned by the monoid generators:
/// each facet normal h satisfies h.g >= 0 for all generators with equality on
/// a rank-(d-1) subset. Valid for membership tests together with the span
/// condition (which lattice membership already enforces).
IntMat support_hyperplanes(const AffineMonoid& m,
                           const ResourceLimits& lim = ResourceLimits::defaults());

/// Minimal Hilbert basis of ZC ∩ Q>=0 C: support inequalities are derived
/// first, then the completion runs on the inequality-and-lattice system
/// (slack coordinates adjoin the lattice).
HilbertBasisResult cone_lattice_hilbert_basis(
    const AffineMonoid& m, const ResourceLimits& lim = ResourceLimits::defaults());

/// Verdict for "C is a direct summand": ZC ∩ N^n = C.
struct SummandVerdict {
  enum class Status { holds, fails, unknown };
  Status status = Status::unknown;
  std::optional<std::vector<Int>> witness;     // lattice-positive, not in C
  std::optional<HilbertBasisResult> basis;     // when certified via hilbert basis
  std::string method;                          // "retract" or "hilbert-basis"
  std::string note;                            // reason when unknown
  bool holds() const { return status == Status::holds; }
};

SummandVerdict summand_check(const AffineMonoid& m,
                             const ResourceLimits& lim = ResourceLimits::defaults());

/// Normality: ZC ∩ Q>=0 C = C.
struct NormalityVerdict {
  bool normal = false;
  std::optional<std::vector<Int>> witness;  // saturation element outside C
  HilbertBasisResult basis;
};

NormalityVerdict normality_check(const AffineMonoid& m,
                                 const ResourceLimits& lim = ResourceLimits::defaults());

/// dim K[C] = rank of the generator matrix over the rationals.
int algebra_dim(const AffineMonoid& m);

/// Degree-selection ideal for a block grading and a subgroup H of Z^s given
/// by generators: the ideal of all monomials whose block-multidegree is a
/// minimal monoid generator of H ∩ N^s. H ∩ N^s = {0} gives the zero ideal.
MonomialIdeal degree_selection(const std::vector<std::vector<int>>& blocks,
                               const IntMat& subgroup_gens, int nvars,
                               Field field = Field::rationals(),
                               const ResourceLimits& lim = ResourceLimits::defaults());

}

#endif
