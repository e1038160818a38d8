#ifndef MONDEPTH_MONOMIAL_HPP
#define MONDEPTH_MONOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mondepth {

using Int = mpz_class;

/// Coefficient field of the polynomial ring. Monomial data is field-free; the
/// field matters for homological ranks, so every depth-flavored report names
/// the field it was computed over.
struct Field {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  unsigned long p = 0;  // modulus when kind == prime

  static Field rationals() { return Field{}; }
  static Field fp(unsigned long p);

  bool is_rationals() const { return kind == Kind::rationals; }
  std::string name() const;
  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
};

/// S = K[x_1..x_nvars].
struct PolyContext {
  int nvars = 1;
  Field field;

  PolyContext() = default;
  PolyContext(int n, Field f = Field::rationals());
  bool operator==(const PolyContext& o) const {
    return nvars == o.nvars && field == o.field;
  }
};

/// A monomial x^a as its exponent vector a; length = nvars, entries >= 0.
using ExponentVec = std::vector<Int>;

Int total_degree(const ExponentVec& a);
bool divides(const ExponentVec& a, const ExponentVec& b);  // a | b componentwise
ExponentVec mono_mul(const ExponentVec& a, const ExponentVec& b);
ExponentVec mono_lcm(const ExponentVec& a, const ExponentVec& b);
bool is_zero_vec(const ExponentVec& a);
bool lex_less(const ExponentVec& a, const ExponentVec& b);
std::string exps_to_string(const ExponentVec& a);  // "a1,a2,..." (hash/cache key)
std::string mono_to_string(const ExponentVec& a);  // "x1*x4^3", "1" for the empty product

/// Monomial ideal in canonical form: the unique minimal monomial generating
/// set, lex-sorted, so equal ideals have identical representations. The zero
/// ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// Minimalizes (divisibility filter + dedup) and sorts. Throws
  /// std::invalid_argument on dimension mismatch or negative exponents.
  static MonomialIdeal make(PolyContext ctx, std::vector<ExponentVec> gens);
  static MonomialIdeal zero(PolyContext ctx);
  static MonomialIdeal unit(PolyContext ctx);

  const PolyContext& context() const { return ctx_; }
  int nvars() const { return ctx_.nvars; }
  const std::vector<ExponentVec>& gens() const { return gens_; }
  std::size_t ngens() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;

  /// All generators share one total degree; returns it, or -1 when mixed or
  /// when there is nothing to measure (zero ideal).
  Int equigenerated_degree() const;

  bool contains(const ExponentVec& m) const;

  /// Canonical key: nvars + sorted generator exponents. Two ideals are equal
  /// iff their keys are equal; the field plays no role in the ideal identity.
  std::string key() const;

  bool operator==(const MonomialIdeal& o) const {
    return ctx_.nvars == o.ctx_.nvars && gens_ == o.gens_;
  }

 private:
  PolyContext ctx_;
  std::vector<ExponentVec> gens_;
};

MonomialIdeal minimalize(std::vector<ExponentVec> gens, const PolyContext& ctx);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, unsigned long k);

/// Simple graph on vertices 1..nvertices; edges unordered, no loops or
/// duplicates (validated).
struct Graph {
  int nvertices = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based, normalized i < j

  static Graph make(int nvertices, std::vector<std::pair<int, int>> edges);
};

MonomialIdeal edge_ideal(const Graph& g, Field field = Field::rationals());

}

#endif
