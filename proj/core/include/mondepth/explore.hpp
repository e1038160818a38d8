#ifndef MONDEPTH_EXPLORE_HPP
#define MONDEPTH_EXPLORE_HPP

#include <string>
#include <vector>

#include "mondepth/rees.hpp"

namespace mondepth {

struct ExploreParams {
  int nmax = 4;
  int rmax = 3;
  int maxdeg = 3;       // max generator degree
  int kmax = 4;         // depth range for the constancy check
  long degree_bound = 0;  // 0 = max(4(n+1), 20) per ambient dimension
  int window = 4;
  long budget_ms = 600000;
  Field field;
  ResourceLimits limits;
  std::vector<MonomialIdeal> injected;  // extra controls, analyzed verbatim
};

struct ExploreEntry {
  MonomialIdeal ideal;
  bool injected = false;
  SummandVerdict::Status summand = SummandVerdict::Status::unknown;
  std::string summand_method;
  CmStatus::Kind cm = CmStatus::Kind::inconclusive;
  std::string cm_reason;
  // full certificates, serialized for flagged entries so candidates can be
  // re-verified offline
  SummandVerdict summand_full;
  CmStatus cm_full;
  std::vector<int> depths;
  bool constant = false;
  bool depth_truncated = false;
  Int gen_degree = -1;  // equigenerated degree, -1 when mixed
  // decisive conflicts only; undecided components land in `undecided`
  bool theorem_violation = false;
  bool q1_candidate = false;  // summand certified, Rees-CM refuted
  bool q2_candidate = false;  // constant depth, hypotheses certified to fail
  bool undecided = false;
};

struct ExploreReport {
  long examined = 0;
  long corpus_size = 0;
  bool budget_exhausted = false;
  long elapsed_ms = 0;
  long violations = 0;
  long q1_candidates = 0;
  long q2_candidates = 0;
  long undecided = 0;
  std::vector<ExploreEntry> entries;
};

/// Enumerates square-free monomial ideals up to variable permutation, with
/// full variable support, for n <= nmax, up to rmax generators of degree <=
/// maxdeg; records the summand verdict, the Rees-CM status and the empirical
/// depth constancy for each, and flags decisive conflicts with the
/// constant-depth criterion and with the two open questions. Candidates are
/// reported, never auto-claimed.
ExploreReport explore_questions(const ExploreParams& params);

/// The enumerated corpus (exposed for tests).
std::vector<MonomialIdeal> squarefree_corpus(int nmax, int rmax, int maxdeg,
                                             Field field = Field::rationals());

}

#endif
