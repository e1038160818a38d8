#ifndef MONDEPTH_RETRACT_HPP
#define MONDEPTH_RETRACT_HPP

#include <optional>
#include <vector>

#include "mondepth/lattice.hpp"
#include "mondepth/monomial.hpp"

namespace mondepth {

/// Certificate that K[u_1..u_r] is an algebra retract of S: distinct variable
/// indices l_i (0-based), one per generator, with u_i = x_{l_i} * v_i where
/// v_i avoids every chosen variable. Equivalently: exponent of x_{l_i} in u_i
/// is exactly 1 and x_{l_i} occurs in no other generator.
struct RetractCertificate {
  std::vector<int> unit_vars;  // aligned with the canonical generator order
};

/// Checks the certificate invariants against the ideal; used by tests and by
/// report verification.
bool verify_retract_certificate(const MonomialIdeal& I, const RetractCertificate& c);

/// Searches for a retract certificate. The search is a per-generator local
/// scan, not a matching problem: a column j qualifies for generator i only if
/// u_i has exponent exactly 1 there and every other generator has exponent 0,
/// so the same column cannot qualify for two generators (qualifying for i'
/// forces exponent 0 in u_i, contradicting exponent 1). Candidate sets are
/// therefore disjoint and picking the smallest qualifying index per generator
/// is a complete, deterministic search. Input is minimalized by construction
/// of MonomialIdeal; the test is meaningful on minimal generators only.
/// Throws on the zero or unit ideal.
std::optional<RetractCertificate> retract_check(const MonomialIdeal& I);

/// Summand decision: the retract criterion is a sufficient fast path; the
/// full lattice test runs otherwise. Resource ceilings degrade the verdict to
/// "unknown", never to a wrong answer.
SummandVerdict is_summand(const MonomialIdeal& I,
                          const ResourceLimits& lim = ResourceLimits::defaults());

}

#endif
