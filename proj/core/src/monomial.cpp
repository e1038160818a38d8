#include "mondepth/monomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mondepth/limits.hpp"

namespace mondepth {

Field Field::fp(unsigned long p) {
  mpz_class m(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("field modulus must be prime, got " + std::to_string(p));
  Field f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

std::string Field::name() const {
  return is_rationals() ? "rational" : "fp:" + std::to_string(p);
}

PolyContext::PolyContext(int n, Field f) : nvars(n), field(f) {
  if (n < 1) throw std::invalid_argument("nvars must be >= 1");
}

Int total_degree(const ExponentVec& a) {
  Int d = 0;
  for (const Int& x : a) d += x;
  return d;
}

bool divides(const ExponentVec& a, const ExponentVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExponentVec mono_mul(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExponentVec mono_lcm(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool is_zero_vec(const ExponentVec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

bool lex_less(const ExponentVec& a, const ExponentVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string exps_to_string(const ExponentVec& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  return os.str();
}

std::string mono_to_string(const ExponentVec& a) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (any) os << '*';
    os << 'x' << (i + 1);
    if (a[i] != 1) os << '^' << a[i];
    any = true;
  }
  if (!any) return "1";
  return os.str();
}

MonomialIdeal MonomialIdeal::make(PolyContext ctx, std::vector<ExponentVec> gens) {
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != ctx.nvars)
      throw std::invalid_argument("generator dimension mismatch: expected " +
                                  std::to_string(ctx.nvars) + ", got " +
                                  std::to_string(g.size()));
    for (const Int& e : g)
      if (e < 0) throw std::invalid_argument("negative exponent in generator");
  }
  // Divisibility filter yields the unique minimal monomial generating set.
  std::sort(gens.begin(), gens.end(), lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVec> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && divides(gens[j], gens[i])) redundant = true;
    if (!redundant) minimal.push_back(gens[i]);
  }
  MonomialIdeal I;
  I.ctx_ = ctx;
  I.gens_ = std::move(minimal);
  return I;
}

MonomialIdeal MonomialIdeal::zero(PolyContext ctx) {
  MonomialIdeal I;
  I.ctx_ = ctx;
  return I;
}

MonomialIdeal MonomialIdeal::unit(PolyContext ctx) {
  MonomialIdeal I;
  I.ctx_ = ctx;
  I.gens_.push_back(ExponentVec(ctx.nvars, 0));
  return I;
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && is_zero_vec(gens_[0]);
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    for (const Int& e : g)
      if (e > 1) return false;
  return true;
}

Int MonomialIdeal::equigenerated_degree() const {
  if (gens_.empty()) return -1;
  Int d = total_degree(gens_[0]);
  for (const auto& g : gens_)
    if (total_degree(g) != d) return -1;
  return d;
}

bool MonomialIdeal::contains(const ExponentVec& m) const {
  if (static_cast<int>(m.size()) != ctx_.nvars)
    throw std::invalid_argument("membership test dimension mismatch");
  for (const auto& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

std::string MonomialIdeal::key() const {
  std::ostringstream os;
  os << ctx_.nvars << ':';
  for (const auto& g : gens_) os << exps_to_string(g) << ';';
  return os.str();
}

MonomialIdeal minimalize(std::vector<ExponentVec> gens, const PolyContext& ctx) {
  return MonomialIdeal::make(ctx, std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("ideal product: context mismatch");
  std::vector<ExponentVec> prods;
  prods.reserve(a.ngens() * b.ngens());
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) prods.push_back(mono_mul(g, h));
  return MonomialIdeal::make(a.context(), std::move(prods));
}

namespace {

// All k-multiset products of gens, accumulated recursively.
void multiset_products(const std::vector<ExponentVec>& gens, std::size_t from,
                       unsigned long k, ExponentVec& acc,
                       std::vector<ExponentVec>& out, std::size_t cap) {
  if (k == 0) {
    if (out.size() >= cap)
      throw ResourceLimitError("max_enumeration", "ideal power has too many products");
    out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += gens[i][j];
    multiset_products(gens, i, k - 1, acc, out, cap);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] -= gens[i][j];
  }
}

}  // namespace

MonomialIdeal power(const MonomialIdeal& a, unsigned long k) {
  if (k == 0) return MonomialIdeal::unit(a.context());
  if (a.is_zero()) return a;
  std::vector<ExponentVec> prods;
  ExponentVec acc(a.nvars(), 0);
  multiset_products(a.gens(), 0, k, acc, prods,
                    ResourceLimits::defaults().max_enumeration);
  return MonomialIdeal::make(a.context(), std::move(prods));
}

Graph Graph::make(int nvertices, std::vector<std::pair<int, int>> edges) {
  if (nvertices < 0) throw std::invalid_argument("negative vertex count");
  std::set<std::pair<int, int>> seen;
  Graph g;
  g.nvertices = nvertices;
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > nvertices || v > nvertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    auto e = std::minmax(u, v);
    if (!seen.insert({e.first, e.second}).second)
      throw std::invalid_argument("duplicate edge");
    g.edges.push_back({e.first, e.second});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

MonomialIdeal edge_ideal(const Graph& g, Field field) {
  if (g.nvertices < 1)
    throw std::invalid_argument("edge ideal needs at least one vertex");
  std::vector<ExponentVec> gens;
  for (auto [u, v] : g.edges) {
    ExponentVec m(g.nvertices, 0);
    m[u - 1] = 1;
    m[v - 1] = 1;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal::make(PolyContext(g.nvertices, field), std::move(gens));
}

}
