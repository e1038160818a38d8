#include "mondepth/hilbert.hpp"

#include <algorithm>

namespace mondepth {

bool HilbertCache::lookup(const std::string& key, long cap, IntPolynomial& out) {
  std::lock_guard<std::mutex> g(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return false;
  long have = it->second.first;
  if (have != -1 && (cap < 0 || cap > have)) return false;
  out = cap >= 0 ? poly_truncate(it->second.second, cap) : it->second.second;
  return true;
}

void HilbertCache::store(const std::string& key, long cap, const IntPolynomial& poly) {
  std::lock_guard<std::mutex> g(mu_);
  auto it = map_.find(key);
  if (it != map_.end()) {
    long have = it->second.first;
    if (have == -1 || (cap >= 0 && cap <= have)) return;  // existing entry is stronger
  }
  map_[key] = {cap, poly};
}

std::size_t HilbertCache::size() {
  std::lock_guard<std::mutex> g(mu_);
  return map_.size();
}

HilbertCache& HilbertCache::global() {
  static HilbertCache cache;
  return cache;
}

Int binom(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

// Every variable occurs in at most one generator: the generators form a
// regular sequence and the numerator factors as prod (1 - t^deg).
bool disjoint_supports(const std::vector<ExponentVec>& gens, int nvars) {
  for (int v = 0; v < nvars; ++v) {
    int cnt = 0;
    for (const auto& g : gens)
      if (g[v] > 0 && ++cnt > 1) return false;
  }
  return true;
}

IntPolynomial numerator_rec(const MonomialIdeal& I, long cap, HilbertCache& cache,
                            std::size_t depth, const ResourceLimits& lim) {
  if (depth > lim.max_recursion)
    throw ResourceLimitError("max_recursion", "hilbert numerator recursion too deep");
  if (I.is_zero()) return IntPolynomial::one();
  if (I.is_unit()) return IntPolynomial();

  const int n = I.nvars();
  const auto& gens = I.gens();

  std::string key = I.key();
  IntPolynomial memo;
  if (cache.lookup(key, cap, memo)) return memo;

  IntPolynomial result;
  if (disjoint_supports(gens, n)) {
    result = IntPolynomial::one();
    for (const auto& g : gens) {
      Int d = total_degree(g);
      if (cap >= 0 && d > cap) {
        // (1 - t^d) == 1 below the cap
        continue;
      }
      result = poly_mul(result, one_minus_tpow(d.get_si()), cap);
    }
  } else {
    // Pivot x_i^e with x_i the variable hitting the most generators and e a
    // median positive exponent, lowered until the pivot strictly divides
    // some generator (e = 1 always qualifies).
    int pivot_var = -1;
    std::size_t best_cnt = 0;
    for (int v = 0; v < n; ++v) {
      std::size_t cnt = 0;
      for (const auto& g : gens)
        if (g[v] > 0) ++cnt;
      if (cnt > best_cnt) { best_cnt = cnt; pivot_var = v; }
    }
    std::vector<Int> exps;
    for (const auto& g : gens)
      if (g[pivot_var] > 0) exps.push_back(g[pivot_var]);
    std::sort(exps.begin(), exps.end());
    Int e = exps[exps.size() / 2];
    auto pivot_ok = [&](const Int& e_) {
      for (const auto& g : gens)
        if (g[pivot_var] >= e_ && !(g[pivot_var] == e_ && total_degree(g) == e_))
          return true;
      return false;
    };
    while (e > 1 && !pivot_ok(e)) --e;

    // I : x_i^e
    std::vector<ExponentVec> colon = gens;
    for (auto& g : colon) {
      g[pivot_var] -= e;
      if (g[pivot_var] < 0) g[pivot_var] = 0;
    }
    // I + (x_i^e)
    std::vector<ExponentVec> plus = gens;
    {
      ExponentVec p(n, 0);
      p[pivot_var] = e;
      plus.push_back(std::move(p));
    }
    long el = e.get_si();
    IntPolynomial right = numerator_rec(MonomialIdeal::make(I.context(), std::move(plus)),
                                        cap, cache, depth + 1, lim);
    if (cap >= 0 && el > cap) {
      result = std::move(right);  // the colon branch only feeds degrees > cap
    } else {
      long subcap = cap < 0 ? -1 : cap - el;
      IntPolynomial left = numerator_rec(MonomialIdeal::make(I.context(), std::move(colon)),
                                         subcap, cache, depth + 1, lim);
      result = poly_add(poly_shift(left, el, cap), right, cap);
    }
  }

  cache.store(key, cap, result);
  return result;
}

}  // namespace

IntPolynomial hilbert_numerator(const MonomialIdeal& I, HilbertCache* cache,
                                const ResourceLimits& lim) {
  return numerator_rec(I, -1, cache ? *cache : HilbertCache::global(), 0, lim);
}

IntPolynomial hilbert_numerator_trunc(const MonomialIdeal& I, long cap,
                                      HilbertCache* cache, const ResourceLimits& lim) {
  return numerator_rec(I, cap, cache ? *cache : HilbertCache::global(), 0, lim);
}

Int count_from_numerator(const IntPolynomial& h, int nvars, long d) {
  Int s = 0;
  long jmax = std::min<long>(d, h.degree());
  for (long j = 0; j <= jmax; ++j) {
    if (h.coeffs[j] == 0) continue;
    s += h.coeffs[j] * binom(d - j + nvars - 1, nvars - 1);
  }
  return s;
}

Int count_quotient(const MonomialIdeal& I, long d, HilbertCache* cache,
                   const ResourceLimits& lim) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  IntPolynomial h = hilbert_numerator_trunc(I, d, cache, lim);
  return count_from_numerator(h, I.nvars(), d);
}

Int count_in_ideal(const MonomialIdeal& I, long d, HilbertCache* cache,
                   const ResourceLimits& lim) {
  return binom(d + I.nvars() - 1, I.nvars() - 1) - count_quotient(I, d, cache, lim);
}

int krull_dim(const MonomialIdeal& I, HilbertCache* cache, const ResourceLimits& lim) {
  if (I.is_unit()) return -1;
  IntPolynomial h = hilbert_numerator(I, cache, lim);
  int mult = 0;
  while (h.eval_at_one() == 0) {
    h = divide_by_one_minus_t(h);
    ++mult;
  }
  return I.nvars() - mult;
}

}
