#ifndef MONDEPTH_HILBERT_HPP
#define MONDEPTH_HILBERT_HPP

#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "mondepth/intpoly.hpp"
#include "mondepth/limits.hpp"
#include "mondepth/monomial.hpp"

namespace mondepth {

/// Memo for Hilbert numerators, keyed by the canonical ideal. Each entry
/// remembers up to which degree it is valid (cap == -1 means exact); a
/// stored entry serves any request with a smaller or equal cap. Safe for
/// concurrent use.
class HilbertCache {
 public:
  bool lookup(const std::string& key, long cap, IntPolynomial& out);
  void store(const std::string& key, long cap, const IntPolynomial& poly);
  std::size_t size();

  static HilbertCache& global();

 private:
  std::unordered_map<std::string, std::pair<long, IntPolynomial>> map_;
  std::mutex mu_;
};

/// Numerator h(t) of the Hilbert series HS(S/I) = h(t)/(1-t)^nvars, computed
/// by pivot splitting: h(I) = t^deg(p) h(I:p) + h(I+(p)) for a pivot p that
/// strictly divides some generator. h(0) = 1 for proper ideals; the unit
/// ideal gives 0.
IntPolynomial hilbert_numerator(const MonomialIdeal& I,
                                HilbertCache* cache = nullptr,
                                const ResourceLimits& lim = ResourceLimits::defaults());

/// Same, but exact only for coefficients of degree <= cap (cap < 0 = exact).
IntPolynomial hilbert_numerator_trunc(const MonomialIdeal& I, long cap,
                                      HilbertCache* cache = nullptr,
                                      const ResourceLimits& lim = ResourceLimits::defaults());

Int binom(unsigned long n, unsigned long k);

/// Coefficient of t^d in h(t)/(1-t)^nvars.
Int count_from_numerator(const IntPolynomial& h, int nvars, long d);

/// Number of degree-d monomials outside / inside I.
Int count_quotient(const MonomialIdeal& I, long d, HilbertCache* cache = nullptr,
                   const ResourceLimits& lim = ResourceLimits::defaults());
Int count_in_ideal(const MonomialIdeal& I, long d, HilbertCache* cache = nullptr,
                   const ResourceLimits& lim = ResourceLimits::defaults());

/// dim(S/I) = nvars - (multiplicity of t = 1 in the numerator). Returns -1
/// for the unit ideal (the zero ring has no dimension).
int krull_dim(const MonomialIdeal& I, HilbertCache* cache = nullptr,
              const ResourceLimits& lim = ResourceLimits::defaults());

}

#endif
