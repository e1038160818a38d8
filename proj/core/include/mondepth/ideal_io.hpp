#ifndef MONDEPTH_IDEAL_IO_HPP
#define MONDEPTH_IDEAL_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "mondepth/monomial.hpp"

namespace mondepth {

class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::invalid_argument("line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Ideal as written in an input file: generators in their given order (the
/// canonical MonomialIdeal is derived on demand), so parse/serialize
/// round-trips losslessly.
struct IdealDocument {
  int nvars = 0;
  Field field;
  std::vector<ExponentVec> gens;
  std::string label;

  MonomialIdeal ideal() const;
  bool operator==(const IdealDocument& o) const {
    return nvars == o.nvars && field == o.field && gens == o.gens && label == o.label;
  }
};

/// Accepts either the symbolic form
///     vars: 6
///     x1*x4^3
///     x2*x5^3
/// (optional "field:" and "label:" headers, "#" comments) or a JSON object
/// {"nvars": .., "gens": [[..]..], "field": .., "label": ..}.
IdealDocument parse_ideal(const std::string& text);

Field parse_field(const std::string& spec);  // "rational" | "fp:<p>"

std::string serialize_symbolic(const IdealDocument& doc);
std::string serialize_json(const IdealDocument& doc);

}

#endif
