#ifndef MONDEPTH_REPORT_HPP
#define MONDEPTH_REPORT_HPP

#include <string>

#include "json.hpp"
#include "mondepth/betti.hpp"
#include "mondepth/explore.hpp"
#include "mondepth/ideal_io.hpp"
#include "mondepth/intpoly.hpp"
#include "mondepth/lattice.hpp"
#include "mondepth/rees.hpp"
#include "mondepth/retract.hpp"

namespace mondepth {

using Json = nlohmann::ordered_json;

/// Machine-readable result of one CLI run. The text rendering is a
/// deterministic walk of the same tree, so both formats carry identical data.
struct Report {
  Json doc;

  std::string to_json_string() const { return doc.dump(2) + "\n"; }
  std::string to_text() const;
};

Report make_report(const std::string& command, Json inputs, Json outputs);

// JSON views of the core value types.
Json to_json(const IntPolynomial& p);
Json to_json(const MonomialIdeal& I);
Json to_json(const IdealDocument& doc);
Json to_json(const BettiTable& t);
Json to_json(const DepthReport& r);
Json to_json(const RetractCertificate& c);
Json to_json(const SummandVerdict& v);
Json to_json(const NormalityVerdict& v);
Json to_json(const HilbertBasisResult& h);
Json to_json(const HVectorReport& h);
Json to_json(const CmStatus& s);
Json to_json(const Verdict& v);
Json to_json(const ExploreReport& r);

}

#endif
