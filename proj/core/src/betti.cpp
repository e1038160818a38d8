#include "mondepth/betti.hpp"

#include <algorithm>
#include <unordered_set>

namespace mondepth {

long BettiTable::total(int i) const {
  if (i < 0 || i >= static_cast<int>(entries.size())) return 0;
  long s = 0;
  for (const auto& [b, v] : entries[i]) s += v;
  return s;
}

std::vector<long> BettiTable::totals() const {
  std::vector<long> t(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) t[i] = total(static_cast<int>(i));
  return t;
}

std::vector<ExponentVec> lcm_closure(const MonomialIdeal& I, const ResourceLimits& lim) {
  if (I.is_zero()) throw std::invalid_argument("lcm closure of the zero ideal");
  std::vector<ExponentVec> elems;
  std::unordered_set<std::string> seen;
  for (const auto& g : I.gens())
    if (seen.insert(exps_to_string(g)).second) elems.push_back(g);
  // Fixpoint over pairwise joins; only new-vs-all pairs need revisiting.
  std::size_t fresh_from = 0;
  while (fresh_from < elems.size()) {
    std::size_t fresh_to = elems.size();
    for (std::size_t i = fresh_from; i < fresh_to; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        ExponentVec join = mono_lcm(elems[i], elems[j]);
        if (seen.insert(exps_to_string(join)).second) {
          if (elems.size() >= lim.max_closure)
            throw ResourceLimitError("max_closure", "lcm closure of " + I.key());
          elems.push_back(std::move(join));
        }
      }
    fresh_from = fresh_to;
  }
  return elems;
}

SimplicialComplex upper_koszul(const MonomialIdeal& I, const ExponentVec& b) {
  for (const Int& x : b)
    if (x < 0) throw std::invalid_argument("multidegree with negative entry");
  std::vector<int> supp;
  for (std::size_t v = 0; v < b.size(); ++v)
    if (b[v] > 0) supp.push_back(static_cast<int>(v));
  if (supp.size() > 62) throw std::invalid_argument("support too large");

  std::vector<std::uint64_t> faces;
  ExponentVec shifted(b);
  const std::uint64_t nsub = std::uint64_t(1) << supp.size();
  for (std::uint64_t s = 0; s < nsub; ++s) {
    std::uint64_t mask = 0;
    for (std::size_t t = 0; t < supp.size(); ++t)
      if (s & (std::uint64_t(1) << t)) {
        shifted[supp[t]] -= 1;
        mask |= std::uint64_t(1) << supp[t];
      }
    if (I.contains(shifted)) faces.push_back(mask);
    for (std::size_t t = 0; t < supp.size(); ++t)
      if (s & (std::uint64_t(1) << t)) shifted[supp[t]] += 1;
  }
  return SimplicialComplex::make(static_cast<int>(b.size()), std::move(faces));
}

BettiTable betti_table(const MonomialIdeal& I, const Field& f, const ResourceLimits& lim) {
  if (!I.is_proper() || I.is_zero())
    throw std::invalid_argument("betti table needs a proper nonzero ideal");
  BettiTable t;
  t.nvars = I.nvars();
  t.field = f;
  t.entries.resize(1);
  t.entries[0][ExponentVec(I.nvars(), 0)] = 1;

  for (const ExponentVec& b : lcm_closure(I, lim)) {
    SimplicialComplex k = upper_koszul(I, b);
    std::vector<long> dims = reduced_homology_dims(k, f);
    for (std::size_t idx = 0; idx < dims.size(); ++idx) {
      if (dims[idx] == 0) continue;
      // dims[idx] = dim H~_{idx-1}(K^b) = beta_{idx+1, b}(S/I)
      std::size_t i = idx + 1;
      if (t.entries.size() <= i) t.entries.resize(i + 1);
      t.entries[i][b] += dims[idx];
    }
  }
  return t;
}

int depth_quotient(const MonomialIdeal& I, const Field& f, const ResourceLimits& lim) {
  if (I.is_unit()) throw std::invalid_argument("depth of the zero ring");
  if (I.is_zero()) return I.nvars();
  BettiTable t = betti_table(I, f, lim);
  return I.nvars() - t.projdim();
}

DepthReport depth_function(const MonomialIdeal& I, int kmax, const Field& f,
                           const ResourceLimits& lim) {
  if (!I.is_proper()) throw std::invalid_argument("depth-function of the unit ideal");
  if (kmax < 1) throw std::invalid_argument("kmax must be >= 1");
  DepthReport r;
  r.ideal = I;
  r.field = f;
  r.kmax = kmax;
  for (int k = 1; k <= kmax; ++k) {
    try {
      MonomialIdeal Ik = power(I, static_cast<unsigned long>(k));
      int d = depth_quotient(Ik, f, lim);
      r.depths.push_back(d);
      r.pds.push_back(I.nvars() - d);
    } catch (const ResourceLimitError& e) {
      r.truncated = true;
      r.truncation_note = "stopped at k = " + std::to_string(k) + ": " + e.what();
      break;
    }
  }
  r.constant = !r.depths.empty() &&
               std::all_of(r.depths.begin(), r.depths.end(),
                           [&](int d) { return d == r.depths.front(); });
  std::size_t m = r.depths.size();
  r.stabilized = m >= 3 && r.depths[m - 1] == r.depths[m - 2] &&
                 r.depths[m - 2] == r.depths[m - 3];
  return r;
}

}
