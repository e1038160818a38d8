#ifndef MONDEPTH_BETTI_HPP
#define MONDEPTH_BETTI_HPP

#include <map>
#include <string>
#include <vector>

#include "mondepth/limits.hpp"
#include "mondepth/monomial.hpp"
#include "mondepth/simplicial.hpp"

namespace mondepth {

/// Multigraded Betti numbers beta_{i,b}(S/I), keyed by homological index and
/// multidegree. beta_{0,0} = 1 always; beta_1 entries sit at the generator
/// multidegrees.
struct BettiTable {
  int nvars = 0;
  Field field;
  // entries[i] maps multidegree b -> beta_{i,b} > 0
  std::vector<std::map<ExponentVec, long>> entries;

  int projdim() const { return static_cast<int>(entries.size()) - 1; }
  long total(int i) const;
  std::vector<long> totals() const;
};

/// Least set containing the generators and closed under componentwise max.
std::vector<ExponentVec> lcm_closure(const MonomialIdeal& I,
                                     const ResourceLimits& lim = ResourceLimits::defaults());

/// Upper Koszul complex K^b(I): faces are the squarefree sigma <= support(b)
/// with x^(b-sigma) in I. Void exactly when x^b is not in I.
SimplicialComplex upper_koszul(const MonomialIdeal& I, const ExponentVec& b);

/// Full Betti table of S/I via beta_{i+1,b}(S/I) = dim H~_{i-1}(K^b(I)) over
/// the lcm-closure candidates. Requires I proper and nonzero.
BettiTable betti_table(const MonomialIdeal& I, const Field& f,
                       const ResourceLimits& lim = ResourceLimits::defaults());

/// depth(S/I) = nvars - projdim(S/I) (Auslander-Buchsbaum). Requires I
/// proper; the zero ideal gives depth = nvars.
int depth_quotient(const MonomialIdeal& I, const Field& f,
                   const ResourceLimits& lim = ResourceLimits::defaults());

/// The sequence k -> depth(S/I^k) for k = 1..kmax, with the projective
/// dimensions alongside. `truncated` marks a resource-ceiling stop; the
/// sequences then hold the computed prefix.
struct DepthReport {
  MonomialIdeal ideal;
  Field field;
  int kmax = 0;
  std::vector<int> depths;
  std::vector<int> pds;
  bool constant = false;    // all computed depths equal
  bool stabilized = false;  // at least 3 computed and the last three equal
  bool truncated = false;
  std::string truncation_note;
};

DepthReport depth_function(const MonomialIdeal& I, int kmax, const Field& f,
                           const ResourceLimits& lim = ResourceLimits::defaults());

}

#endif
