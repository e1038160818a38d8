#include "mondepth/report.hpp"

#include <sstream>

#include "mondepth/version.hpp"

namespace mondepth {

namespace {

void render(const Json& j, const std::string& key, int indent, std::ostream& os) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      render(it.value(), it.key(), indent + (key.empty() ? 0 : 2), os);
    return;
  }
  if (j.is_array()) {
    bool scalars = true;
    for (const auto& x : j) scalars = scalars && !x.is_structured();
    if (scalars) {
      os << pad << key << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        if (j[i].is_string()) os << j[i].get<std::string>();
        else os << j[i].dump();
      }
      os << "]\n";
      return;
    }
    os << pad << key << ":\n";
    for (std::size_t i = 0; i < j.size(); ++i)
      render(j[i], "- " + std::to_string(i), indent + 2, os);
    return;
  }
  os << pad << key << ": ";
  if (j.is_string()) os << j.get<std::string>();
  else os << j.dump();
  os << "\n";
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  render(doc, "", 0, os);
  return os.str();
}

Report make_report(const std::string& command, Json inputs, Json outputs) {
  Report r;
  r.doc["tool"] = "mondepth";
  r.doc["version"] = kVersion;
  r.doc["command"] = command;
  r.doc["inputs"] = std::move(inputs);
  r.doc["outputs"] = std::move(outputs);
  r.doc["cached"] = false;
  return r;
}

Json to_json(const IntPolynomial& p) {
  Json j;
  j["pretty"] = p.to_string();
  auto& c = j["coefficients"] = Json::array();
  for (const Int& x : p.coeffs) c.push_back(x.get_str());
  return j;
}

Json to_json(const MonomialIdeal& I) {
  Json j;
  j["nvars"] = I.nvars();
  auto& g = j["generators"] = Json::array();
  for (const auto& e : I.gens()) g.push_back(mono_to_string(e));
  auto& ge = j["generator_exponents"] = Json::array();
  for (const auto& e : I.gens()) {
    Json row = Json::array();
    for (const Int& x : e) row.push_back(x.get_str());
    ge.push_back(std::move(row));
  }
  return j;
}

Json to_json(const IdealDocument& doc) {
  Json j = to_json(doc.ideal());
  j["field"] = doc.field.name();
  if (!doc.label.empty()) j["label"] = doc.label;
  return j;
}

Json to_json(const BettiTable& t) {
  Json j;
  j["field"] = t.field.name();
  j["projdim"] = t.projdim();
  auto tot = t.totals();
  auto& a = j["totals"] = Json::array();
  for (long v : tot) a.push_back(v);
  auto& e = j["multigraded"] = Json::array();
  for (std::size_t i = 0; i < t.entries.size(); ++i)
    for (const auto& [b, v] : t.entries[i]) {
      Json row;
      row["i"] = i;
      row["multidegree"] = exps_to_string(b);
      row["beta"] = v;
      e.push_back(std::move(row));
    }
  return j;
}

Json to_json(const DepthReport& r) {
  Json j;
  j["field"] = r.field.name();
  j["kmax"] = r.kmax;
  auto& d = j["depths"] = Json::array();
  for (int x : r.depths) d.push_back(x);
  auto& p = j["projdims"] = Json::array();
  for (int x : r.pds) p.push_back(x);
  j["constant"] = r.constant;
  j["stabilized"] = r.stabilized;
  j["truncated"] = r.truncated;
  if (r.truncated) j["truncation_note"] = r.truncation_note;
  return j;
}

Json to_json(const RetractCertificate& c) {
  Json j;
  auto& u = j["unit_variables"] = Json::array();
  for (int v : c.unit_vars) u.push_back("x" + std::to_string(v + 1));
  return j;
}

namespace {

Json vec_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

}  // namespace

Json to_json(const HilbertBasisResult& h) {
  Json j;
  j["system"] = h.system;
  j["size"] = h.vectors.size();
  auto& v = j["vectors"] = Json::array();
  for (const auto& e : h.vectors) v.push_back(vec_json(e));
  Json s;
  s["popped"] = h.stats.popped;
  s["pushed"] = h.stats.pushed;
  s["completion_set"] = h.stats.basis_size;
  j["stats"] = std::move(s);
  return j;
}

Json to_json(const SummandVerdict& v) {
  Json j;
  switch (v.status) {
    case SummandVerdict::Status::holds: j["holds"] = true; break;
    case SummandVerdict::Status::fails: j["holds"] = false; break;
    case SummandVerdict::Status::unknown: j["holds"] = "unknown"; break;
  }
  if (!v.method.empty()) j["method"] = v.method;
  if (v.witness) j["witness"] = vec_json(*v.witness);
  if (v.basis) j["hilbert_basis"] = to_json(*v.basis);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json to_json(const NormalityVerdict& v) {
  Json j;
  j["normal"] = v.normal;
  if (v.witness) j["witness"] = vec_json(*v.witness);
  j["saturation_basis"] = to_json(v.basis);
  return j;
}

Json to_json(const HVectorReport& h) {
  Json j;
  j["h_vector"] = to_json(h.coeffs);
  j["degree_bound"] = h.degree_bound;
  j["window"] = h.window;
  j["stable"] = h.stable;
  j["note"] = "stability is a windowed confidence statement, not a proof";
  return j;
}

Json to_json(const CmStatus& s) {
  Json j;
  switch (s.kind) {
    case CmStatus::Kind::certified_cm: j["status"] = "CertifiedCM"; break;
    case CmStatus::Kind::certified_not_cm: j["status"] = "CertifiedNotCM"; break;
    case CmStatus::Kind::inconclusive: j["status"] = "Inconclusive"; break;
  }
  if (s.negative_index >= 0) j["negative_index"] = s.negative_index;
  if (!s.reason.empty()) j["reason"] = s.reason;
  if (s.normality) j["normality"] = to_json(*s.normality);
  if (s.hvector) j["hvector"] = to_json(*s.hvector);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["summand"] = to_json(v.summand);
  j["rees_cm"] = to_json(v.rees);
  j["theorem_applies"] = v.theorem_applies;
  j["depth_function"] = to_json(v.empirical);
  auto& n = j["notes"] = Json::array();
  for (const auto& s : v.notes) n.push_back(s);
  return j;
}

Json to_json(const ExploreReport& r) {
  Json j;
  j["corpus_size"] = r.corpus_size;
  j["examined"] = r.examined;
  j["budget_exhausted"] = r.budget_exhausted;
  j["elapsed_ms"] = r.elapsed_ms;
  j["theorem_violations"] = r.violations;
  j["q1_candidates"] = r.q1_candidates;
  j["q2_candidates"] = r.q2_candidates;
  j["undecided"] = r.undecided;
  auto& e = j["entries"] = Json::array();
  for (const auto& en : r.entries) {
    Json row;
    row["ideal"] = to_json(en.ideal);
    row["injected"] = en.injected;
    switch (en.summand) {
      case SummandVerdict::Status::holds: row["summand"] = true; break;
      case SummandVerdict::Status::fails: row["summand"] = false; break;
      case SummandVerdict::Status::unknown: row["summand"] = "unknown"; break;
    }
    row["summand_method"] = en.summand_method;
    switch (en.cm) {
      case CmStatus::Kind::certified_cm: row["rees_cm"] = "CertifiedCM"; break;
      case CmStatus::Kind::certified_not_cm: row["rees_cm"] = "CertifiedNotCM"; break;
      case CmStatus::Kind::inconclusive: row["rees_cm"] = "Inconclusive"; break;
    }
    if (!en.cm_reason.empty()) row["cm_reason"] = en.cm_reason;
    auto& d = row["depths"] = Json::array();
    for (int x : en.depths) d.push_back(x);
    row["constant"] = en.constant;
    row["equigenerated_degree"] =
        en.gen_degree < 0 ? Json("mixed") : Json(en.gen_degree.get_str());
    row["theorem_violation"] = en.theorem_violation;
    row["q1_candidate"] = en.q1_candidate;
    row["q2_candidate"] = en.q2_candidate;
    row["undecided"] = en.undecided;
    if (en.theorem_violation || en.q1_candidate || en.q2_candidate) {
      row["summand_certificate"] = to_json(en.summand_full);
      row["rees_certificate"] = to_json(en.cm_full);
    }
    e.push_back(std::move(row));
  }
  return j;
}

}
