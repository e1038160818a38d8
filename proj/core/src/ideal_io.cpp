#include "mondepth/ideal_io.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace mondepth {

MonomialIdeal IdealDocument::ideal() const {
  return MonomialIdeal::make(PolyContext(nvars, field), gens);
}

Field parse_field(const std::string& spec) {
  if (spec == "rational" || spec == "rationals" || spec == "QQ")
    return Field::rationals();
  if (spec.rfind("fp:", 0) == 0) {
    unsigned long p = 0;
    try {
      p = std::stoul(spec.substr(3));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad prime in field spec '" + spec + "'");
    }
    return Field::fp(p);
  }
  throw std::invalid_argument("unknown field spec '" + spec +
                              "' (expected rational or fp:<p>)");
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// one monomial token stream: x<i>, x<i>^<e>, or the literal 1
ExponentVec parse_monomial_line(const std::string& line, int lineno, int nvars) {
  ExponentVec e(nvars, 0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(lineno, static_cast<int>(pos) + 1, msg);
  };
  bool expect_factor = true;
  while (pos < line.size()) {
    char c = line[pos];
    if (std::isspace(static_cast<unsigned char>(c))) { ++pos; continue; }
    if (!expect_factor) {
      if (c != '*') throw fail("expected '*' between factors");
      ++pos;
      expect_factor = true;
      continue;
    }
    if (c == '1') {
      ++pos;
      expect_factor = false;
      continue;
    }
    if (c != 'x') throw fail("expected a variable like x3");
    ++pos;
    std::size_t start = pos;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == start) throw fail("variable needs an index, like x3");
    int idx = std::stoi(line.substr(start, pos - start));
    if (idx < 1 || idx > nvars)
      throw fail("variable index out of range 1.." + std::to_string(nvars));
    Int exp = 1;
    if (pos < line.size() && line[pos] == '^') {
      ++pos;
      bool neg = false;
      if (pos < line.size() && (line[pos] == '-' || line[pos] == '+')) {
        neg = line[pos] == '-';
        ++pos;
      }
      start = pos;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos == start) throw fail("exponent expected after '^'");
      exp = Int(line.substr(start, pos - start));
      if (neg) throw fail("negative exponent");
    }
    e[idx - 1] += exp;
    expect_factor = false;
  }
  if (expect_factor) throw fail("empty monomial");
  return e;
}

IdealDocument parse_symbolic(const std::string& text) {
  IdealDocument doc;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_vars = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!have_vars) {
      if (line.rfind("vars:", 0) != 0)
        throw ParseError(lineno, 1, "expected header 'vars: <n>'");
      try {
        doc.nvars = std::stoi(trim(line.substr(5)));
      } catch (const std::exception&) {
        throw ParseError(lineno, 6, "bad variable count");
      }
      if (doc.nvars < 1) throw ParseError(lineno, 6, "need at least one variable");
      have_vars = true;
      continue;
    }
    if (line.rfind("field:", 0) == 0) {
      doc.field = parse_field(trim(line.substr(6)));
      continue;
    }
    if (line.rfind("label:", 0) == 0) {
      doc.label = trim(line.substr(6));
      continue;
    }
    doc.gens.push_back(parse_monomial_line(line, lineno, doc.nvars));
  }
  if (!have_vars) throw ParseError(1, 1, "missing 'vars:' header");
  return doc;
}

IdealDocument parse_structured(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, 1, std::string("bad JSON: ") + e.what());
  }
  IdealDocument doc;
  if (!j.contains("nvars") || !j["nvars"].is_number_integer())
    throw ParseError(1, 1, "JSON ideal needs integer 'nvars'");
  doc.nvars = j["nvars"].get<int>();
  if (doc.nvars < 1) throw ParseError(1, 1, "need at least one variable");
  if (j.contains("field")) doc.field = parse_field(j["field"].get<std::string>());
  if (j.contains("label")) doc.label = j["label"].get<std::string>();
  if (!j.contains("gens") || !j["gens"].is_array())
    throw ParseError(1, 1, "JSON ideal needs an array 'gens'");
  for (const auto& g : j["gens"]) {
    if (!g.is_array() || static_cast<int>(g.size()) != doc.nvars)
      throw ParseError(1, 1, "generator length must equal nvars");
    ExponentVec e;
    for (const auto& x : g) {
      if (!x.is_number_integer()) throw ParseError(1, 1, "exponents must be integers");
      long long v = x.get<long long>();
      if (v < 0) throw ParseError(1, 1, "negative exponent");
      e.push_back(Int(static_cast<long>(v)));
    }
    doc.gens.push_back(std::move(e));
  }
  return doc;
}

}  // namespace

IdealDocument parse_ideal(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_structured(text) : parse_symbolic(text);
  }
  throw ParseError(1, 1, "empty input");
}

std::string serialize_symbolic(const IdealDocument& doc) {
  std::ostringstream os;
  os << "vars: " << doc.nvars << '\n';
  if (!doc.field.is_rationals()) os << "field: " << doc.field.name() << '\n';
  if (!doc.label.empty()) os << "label: " << doc.label << '\n';
  for (const auto& g : doc.gens) os << mono_to_string(g) << '\n';
  return os.str();
}

std::string serialize_json(const IdealDocument& doc) {
  nlohmann::ordered_json j;
  j["nvars"] = doc.nvars;
  j["field"] = doc.field.name();
  if (!doc.label.empty()) j["label"] = doc.label;
  auto& gens = j["gens"] = nlohmann::ordered_json::array();
  for (const auto& g : doc.gens) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const Int& x : g) {
      if (!x.fits_slong_p())
        throw std::invalid_argument(
            "exponent too large for the JSON document format");
      row.push_back(x.get_si());
    }
    gens.push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

}
