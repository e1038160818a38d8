#include "mondepth/rees.hpp"

#include "mondepth/retract.hpp"

#include <algorithm>
#include <sstream>

namespace mondepth {

namespace {

Int require_equigenerated(const MonomialIdeal& I) {
  Int delta = I.equigenerated_degree();
  if (delta < 0)
    throw NotEquigeneratedError(
        "generators of mixed degree: the standard Rees grading is undefined");
  return delta;
}

IntMat rees_generators(const MonomialIdeal& I) {
  const int n = I.nvars();
  IntMat gens;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(n + 1, 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  for (const auto& a : I.gens()) {
    std::vector<Int> v = a;
    v.push_back(1);
    gens.push_back(std::move(v));
  }
  return gens;
}

}  // namespace

ReesSemigroup rees_semigroup(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("rees semigroup needs a proper nonzero ideal");
  ReesSemigroup r;
  r.delta = require_equigenerated(I);
  r.ambient = I.nvars() + 1;
  r.gens = rees_generators(I);
  return r;
}

AffineMonoid rees_monoid(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("rees monoid needs a proper nonzero ideal");
  return AffineMonoid::make(I.nvars() + 1, rees_generators(I));
}

Int rees_hilbert_function(const MonomialIdeal& I, long d, HilbertCache* cache,
                          const ResourceLimits& lim) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  Int delta = require_equigenerated(I);
  long dl = delta.get_si();
  Int total = 0;
  for (long k = 0; k <= d; ++k) {
    MonomialIdeal Ik = power(I, static_cast<unsigned long>(k));
    total += count_in_ideal(Ik, d + (dl - 1) * k, cache, lim);
  }
  return total;
}

HVectorReport rees_hvector(const MonomialIdeal& I, long degree_bound, int window,
                           HilbertCache* cache, const ResourceLimits& lim) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("rees h-vector needs a proper nonzero ideal");
  Int delta = require_equigenerated(I);
  if (window < 1 || degree_bound < window)
    throw std::invalid_argument("need degree_bound >= window >= 1");
  const long D = degree_bound;
  const long dl = delta.get_si();
  const int n = I.nvars();

  // HF(d) for d <= D, accumulated per power so each numerator is computed
  // once at its largest needed cap.
  std::vector<Int> hf(D + 1, 0);
  for (long k = 0; k <= D; ++k) {
    MonomialIdeal Ik = power(I, static_cast<unsigned long>(k));
    long cap = D + (dl - 1) * k;
    IntPolynomial num = hilbert_numerator_trunc(Ik, cap, cache, lim);
    for (long d = k; d <= D; ++d) {
      long deg = d + (dl - 1) * k;
      hf[d] += binom(deg + n - 1, n - 1) - count_from_numerator(num, n, deg);
    }
  }

  IntPolynomial series{std::vector<Int>(hf)};
  // dim R(I) = n + 1 fixes the denominator exponent
  IntPolynomial numerator = poly_mul(series, one_minus_t_power(n + 1), D);
  HVectorReport rep;
  rep.degree_bound = D;
  rep.window = window;
  // normalization already strips the trailing zeros, so the last computed
  // nonzero coefficient is the polynomial degree
  rep.stable = numerator.degree() <= D - window;
  rep.coeffs = std::move(numerator);
  return rep;
}

NormalityVerdict rees_normality(const MonomialIdeal& I, const ResourceLimits& lim) {
  return normality_check(rees_monoid(I), lim);
}

CmStatus rees_cm_status(const MonomialIdeal& I, long degree_bound, int window,
                        HilbertCache* cache, const ResourceLimits& lim) {
  CmStatus st;
  std::string normality_note;
  try {
    NormalityVerdict nv = rees_normality(I, lim);
    st.normality = nv;
    if (nv.normal) {
      st.kind = CmStatus::Kind::certified_cm;
      return st;
    }
  } catch (const ResourceLimitError& e) {
    normality_note = std::string("normality undecided: ") + e.what();
  }
  try {
    HVectorReport hv = rees_hvector(I, degree_bound, window, cache, lim);
    st.hvector = hv;
    if (hv.stable) {
      for (long j = 0; j <= hv.coeffs.degree(); ++j) {
        if (hv.coeffs.coeff(j) < 0) {
          st.kind = CmStatus::Kind::certified_not_cm;
          st.negative_index = static_cast<int>(j);
          return st;
        }
      }
      st.reason = "not normal but stable h-vector is nonnegative";
    } else {
      st.reason = "h-vector did not stabilize within the degree bound";
    }
  } catch (const NotEquigeneratedError&) {
    st.reason = "not equigenerated: h-vector route unavailable";
  } catch (const ResourceLimitError& e) {
    st.reason = std::string("h-vector undecided: ") + e.what();
  }
  if (!normality_note.empty()) st.reason = normality_note + "; " + st.reason;
  st.kind = CmStatus::Kind::inconclusive;
  return st;
}

int analytic_spread(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("analytic spread needs a proper nonzero ideal");
  require_equigenerated(I);
  return rank_rational(I.gens());
}

Verdict analyze_constant_depth(const MonomialIdeal& I, int kmax, long degree_bound,
                               int window, const Field& field,
                               const ResourceLimits& lim) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("analyze needs a proper nonzero ideal");
  Verdict v;
  v.summand = is_summand(I, lim);
  v.rees = rees_cm_status(I, degree_bound, window, nullptr, lim);
  v.empirical = depth_function(I, kmax, field, lim);
  v.theorem_applies = v.summand.holds() && v.rees.kind == CmStatus::Kind::certified_cm;

  if (v.theorem_applies && !v.empirical.truncated && !v.empirical.constant) {
    std::ostringstream os;
    os << "constant-depth criterion contradicted on " << I.key()
       << ": summand and Rees-CM certified but depths are";
    for (int d : v.empirical.depths) os << ' ' << d;
    throw TheoremViolationError(os.str());
  }
  if (v.theorem_applies)
    v.notes.push_back("hypotheses certified: depth-function constant as required");

  const bool equigen = I.equigenerated_degree() >= 0;
  if (equigen && !v.empirical.depths.empty()) {
    int n = I.nvars();
    int spread = analytic_spread(I);
    int mindepth = *std::min_element(v.empirical.depths.begin(), v.empirical.depths.end());
    std::ostringstream os;
    os << "analytic spread " << spread << ", n - min depth = " << (n - mindepth);
    if (v.rees.kind == CmStatus::Kind::certified_cm) {
      if (v.empirical.stabilized)
        os << (spread == n - mindepth ? " (equality, as the CM certificate predicts)"
                                      : " (MISMATCH despite CM certificate; "
                                        "depth range may be too short)");
      // with CM the depth sequence may not repeat values before the minimum
      std::size_t first_min = 0;
      while (v.empirical.depths[first_min] != mindepth) ++first_min;
      bool tail_flat = true;
      for (std::size_t i = first_min; i < v.empirical.depths.size(); ++i)
        tail_flat = tail_flat && v.empirical.depths[i] == mindepth;
      v.notes.push_back(tail_flat
                            ? "depth minimum persists once attained"
                            : "WARNING: depth rises after its minimum despite CM");
    } else if (v.empirical.stabilized) {
      int tail = v.empirical.depths.back();
      os << "; upper bound from the stabilized tail: spread <= " << (n - tail)
         << (spread <= n - tail ? " (holds)" : " (VIOLATED - inspect)");
    }
    v.notes.push_back(os.str());
  }
  return v;
}

}
