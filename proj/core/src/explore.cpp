#include "mondepth/explore.hpp"

#include "mondepth/retract.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace mondepth {

namespace {

using Mask = unsigned;

std::string canonical_perm_key(const std::vector<Mask>& gens, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<Mask> img;
    img.reserve(gens.size());
    for (Mask g : gens) {
      Mask m = 0;
      for (int v = 0; v < n; ++v)
        if (g & (Mask(1) << v)) m |= Mask(1) << perm[v];
      img.push_back(m);
    }
    std::sort(img.begin(), img.end());
    std::ostringstream os;
    for (Mask m : img) os << m << ',';
    std::string key = os.str();
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

MonomialIdeal from_masks(const std::vector<Mask>& gens, int n, Field field) {
  std::vector<ExponentVec> evs;
  for (Mask g : gens) {
    ExponentVec e(n, 0);
    for (int v = 0; v < n; ++v)
      if (g & (Mask(1) << v)) e[v] = 1;
    evs.push_back(std::move(e));
  }
  return MonomialIdeal::make(PolyContext(n, field), std::move(evs));
}

}  // namespace

std::vector<MonomialIdeal> squarefree_corpus(int nmax, int rmax, int maxdeg,
                                             Field field) {
  std::vector<MonomialIdeal> corpus;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<Mask> monos;
    for (Mask m = 1; m < (Mask(1) << n); ++m) {
      int pop = __builtin_popcount(m);
      if (pop >= 1 && pop <= maxdeg) monos.push_back(m);
    }
    std::set<std::string> seen;
    std::vector<Mask> chosen;
    // all antichains of size <= rmax whose support covers every variable
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (!chosen.empty()) {
        Mask support = 0;
        for (Mask g : chosen) support |= g;
        if (support == (Mask(1) << n) - 1) {
          std::string key = canonical_perm_key(chosen, n);
          if (seen.insert(key).second) corpus.push_back(from_masks(chosen, n, field));
        }
      }
      if (chosen.size() == static_cast<std::size_t>(rmax)) return;
      for (std::size_t i = from; i < monos.size(); ++i) {
        bool antichain = true;
        for (Mask g : chosen)
          if ((g & monos[i]) == g || (g & monos[i]) == monos[i]) antichain = false;
        if (!antichain) continue;
        chosen.push_back(monos[i]);
        rec(i + 1);
        chosen.pop_back();
      }
    };
    rec(0);
  }
  return corpus;
}

namespace {

ExploreEntry examine(const MonomialIdeal& I, const ExploreParams& p, bool injected) {
  ExploreEntry e;
  e.ideal = I;
  e.injected = injected;
  e.gen_degree = I.equigenerated_degree();

  long D = p.degree_bound > 0 ? p.degree_bound
                              : std::max<long>(4L * (I.nvars() + 1), 20);
  SummandVerdict sv = is_summand(I, p.limits);
  e.summand = sv.status;
  e.summand_method = sv.method;
  e.summand_full = sv;

  CmStatus cm = rees_cm_status(I, D, p.window, nullptr, p.limits);
  e.cm = cm.kind;
  e.cm_reason = cm.reason;
  e.cm_full = cm;

  DepthReport dr = depth_function(I, p.kmax, p.field, p.limits);
  e.depths = dr.depths;
  e.constant = dr.constant;
  e.depth_truncated = dr.truncated;

  bool summand_holds = e.summand == SummandVerdict::Status::holds;
  bool summand_fails = e.summand == SummandVerdict::Status::fails;
  bool cm_holds = e.cm == CmStatus::Kind::certified_cm;
  bool cm_fails = e.cm == CmStatus::Kind::certified_not_cm;

  e.theorem_violation = summand_holds && cm_holds && !dr.truncated && !dr.constant;
  e.q1_candidate = summand_holds && cm_fails;
  e.q2_candidate = dr.constant && !dr.truncated && (summand_fails || cm_fails);
  e.undecided = e.summand == SummandVerdict::Status::unknown ||
                e.cm == CmStatus::Kind::inconclusive || dr.truncated;
  return e;
}

}  // namespace

ExploreReport explore_questions(const ExploreParams& p) {
  auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  };
  std::vector<MonomialIdeal> corpus = squarefree_corpus(p.nmax, p.rmax, p.maxdeg, p.field);
  ExploreReport rep;
  rep.corpus_size = static_cast<long>(corpus.size() + p.injected.size());

  auto run = [&](const MonomialIdeal& I, bool injected) {
    ExploreEntry e = examine(I, p, injected);
    rep.violations += e.theorem_violation;
    rep.q1_candidates += e.q1_candidate;
    rep.q2_candidates += e.q2_candidate;
    rep.undecided += e.undecided;
    rep.entries.push_back(std::move(e));
    ++rep.examined;
  };

  for (const MonomialIdeal& I : corpus) {
    if (elapsed_ms() > p.budget_ms) {
      rep.budget_exhausted = true;
      break;
    }
    run(I, false);
  }
  if (!rep.budget_exhausted)
    for (const MonomialIdeal& I : p.injected) {
      if (elapsed_ms() > p.budget_ms) {
        rep.budget_exhausted = true;
        break;
      }
      run(I, true);
    }
  rep.elapsed_ms = elapsed_ms();
  return rep;
}

}
