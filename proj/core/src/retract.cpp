#include "mondepth/retract.hpp"

#include <set>

namespace mondepth {

bool verify_retract_certificate(const MonomialIdeal& I, const RetractCertificate& c) {
  const auto& gens = I.gens();
  if (c.unit_vars.size() != gens.size()) return false;
  std::set<int> used(c.unit_vars.begin(), c.unit_vars.end());
  if (used.size() != c.unit_vars.size()) return false;  // indices must be distinct
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int l = c.unit_vars[i];
    if (l < 0 || l >= I.nvars()) return false;
    if (gens[i][l] != 1) return false;
    for (int u : c.unit_vars)
      if (u != l && gens[i][u] != 0) return false;
  }
  return true;
}

std::optional<RetractCertificate> retract_check(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("retract test needs a proper nonzero ideal");
  const auto& gens = I.gens();
  RetractCertificate cert;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int found = -1;
    for (int j = 0; j < I.nvars(); ++j) {
      if (gens[i][j] != 1) continue;
      bool private_var = true;
      for (std::size_t k = 0; k < gens.size() && private_var; ++k)
        if (k != i && gens[k][j] != 0) private_var = false;
      if (private_var) { found = j; break; }
    }
    if (found < 0) return std::nullopt;
    cert.unit_vars.push_back(found);
  }
  // A column qualifying for generator i vanishes on every other generator, so
  // the chosen indices cannot collide.
  if (!verify_retract_certificate(I, cert))
    throw std::logic_error("retract certificate failed self-verification");
  return cert;
}

SummandVerdict is_summand(const MonomialIdeal& I, const ResourceLimits& lim) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("summand test needs a proper nonzero ideal");
  if (retract_check(I)) {
    SummandVerdict v;
    v.status = SummandVerdict::Status::holds;
    v.method = "retract";
    return v;
  }
  try {
    AffineMonoid m = AffineMonoid::make(I.nvars(), I.gens());
    return summand_check(m, lim);
  } catch (const ResourceLimitError& e) {
    SummandVerdict v;
    v.status = SummandVerdict::Status::unknown;
    v.method = "hilbert-basis";
    v.note = e.what();
    return v;
  }
}

}
