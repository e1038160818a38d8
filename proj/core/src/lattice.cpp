#include "mondepth/lattice.hpp"

#include "mondepth/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_set>

namespace mondepth {

IntegerLattice lattice_from_rows(const IntMat& rows, int dim) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != dim)
      throw std::invalid_argument("lattice row dimension mismatch");
  IntegerLattice l;
  l.dim = dim;
  l.basis = hermite_normal_form(rows);
  return l;
}

bool lattice_contains(const IntegerLattice& l, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != l.dim)
    throw std::invalid_argument("lattice membership dimension mismatch");
  return hnf_solve(l.basis, v).has_value();
}

AffineMonoid AffineMonoid::make(int dim, IntMat gens) {
  std::vector<std::vector<Int>> kept;
  std::unordered_set<std::string> seen;
  for (auto& g : gens) {
    if (static_cast<int>(g.size()) != dim)
      throw std::invalid_argument("monoid generator dimension mismatch");
    bool zero = true;
    for (const Int& x : g) {
      if (x < 0) throw std::invalid_argument("monoid generator with negative entry");
      if (x != 0) zero = false;
    }
    if (zero) throw std::invalid_argument("monoid generator must be nonzero");
    if (seen.insert(exps_to_string(g)).second) kept.push_back(std::move(g));
  }
  AffineMonoid m;
  m.dim = dim;
  m.gens = std::move(kept);
  return m;
}

namespace {

std::string vec_key(const std::vector<Int>& v) { return exps_to_string(v); }

bool search_membership(const AffineMonoid& m, std::size_t idx, std::vector<Int>& v,
                       std::vector<Int>& coeffs,
                       std::unordered_set<std::string>& dead) {
  bool zero = true;
  for (const Int& x : v)
    if (x != 0) { zero = false; break; }
  if (zero) return true;
  if (idx == m.gens.size()) return false;
  std::string key = std::to_string(idx) + "|" + vec_key(v);
  if (dead.count(key)) return false;

  const auto& g = m.gens[idx];
  Int bound = -1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    Int q = v[i] / g[i];
    if (bound < 0 || q < bound) bound = q;
  }
  for (Int c = 0; c <= bound; ++c) {
    // v := v - c*g incrementally: subtract g once per step
    if (c > 0)
      for (std::size_t i = 0; i < g.size(); ++i) v[i] -= g[i];
    if (search_membership(m, idx + 1, v, coeffs, dead)) {
      coeffs[idx] = c;
      if (c > 0)
        for (std::size_t i = 0; i < g.size(); ++i) v[i] += c * g[i];
      return true;
    }
  }
  if (bound > 0)
    for (std::size_t i = 0; i < g.size(); ++i) v[i] += bound * g[i];
  dead.insert(std::move(key));
  return false;
}

}  // namespace

std::optional<std::vector<Int>> monoid_contains(const AffineMonoid& m,
                                                const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != m.dim)
    throw std::invalid_argument("monoid membership dimension mismatch");
  for (const Int& x : v)
    if (x < 0) throw std::invalid_argument("monoid membership needs v >= 0");
  std::vector<Int> rem = v;
  std::vector<Int> coeffs(m.gens.size(), 0);
  std::unordered_set<std::string> dead;
  if (search_membership(m, 0, rem, coeffs, dead)) return coeffs;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Pottier completion.
//
// Vectors of the lattice are saturated under sign-compatible reduction:
// g reduces s when, coordinatewise, g_i = 0 or sign(g_i) = sign(s_i) and
// |g_i| <= |s_i|; then s - g stays in the lattice and has smaller 1-norm.
// Starting from the signed basis and closing the set under normal forms of
// opposite-sign pair sums yields a superset of the Graver basis; the
// componentwise-minimal nonnegative members form the Hilbert basis of
// (lattice ∩ N^D). Termination follows from Dickson's lemma.
// ---------------------------------------------------------------------------

namespace {

using LVec = std::vector<long long>;

bool reduces(const LVec& g, const LVec& s) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    if (g[i] > 0 && (s[i] < g[i])) return false;
    if (g[i] < 0 && (s[i] > g[i])) return false;
  }
  return true;
}

bool opposite_somewhere(const LVec& a, const LVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] > 0 && b[i] < 0) || (a[i] < 0 && b[i] > 0)) return true;
  return false;
}

long long norm1(const LVec& v) {
  long long n = 0;
  for (long long x : v) n += x < 0 ? -x : x;
  return n;
}

std::string lvec_key(const LVec& v) {
  std::string s;
  s.reserve(v.size() * 4);
  for (long long x : v) {
    s += std::to_string(x);
    s += ',';
  }
  return s;
}

LVec checked_sum(const LVec& a, const LVec& b) {
  LVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_saddll_overflow(a[i], b[i], &r[i]))
      throw ResourceLimitError("overflow", "completion coordinates exceeded 64 bits");
  return r;
}

struct QueueOrder {
  bool operator()(const LVec& a, const LVec& b) const {
    long long na = norm1(a), nb = norm1(b);
    if (na != nb) return na > nb;  // min-heap on the 1-norm
    return a > b;
  }
};

// Completion over the lattice spanned by `rows` (dimension D). Returns the
// componentwise-minimal nonnegative vectors, sorted.
std::vector<LVec> completion_hilbert_basis(const std::vector<LVec>& rows,
                                           std::size_t dim,
                                           const ResourceLimits& lim,
                                           CompletionStats& stats) {
  std::vector<LVec> g;
  std::priority_queue<LVec, std::vector<LVec>, QueueOrder> queue;
  std::unordered_set<std::string> queued;
  auto push = [&](LVec v) {
    if (stats.pushed >= lim.max_candidates)
      throw ResourceLimitError("max_candidates", "completion queue exhausted its budget");
    if (queued.insert(lvec_key(v)).second) {
      ++stats.pushed;
      queue.push(std::move(v));
    }
  };
  for (const LVec& r : rows) {
    bool zero = std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
    if (zero) continue;
    LVec neg(dim);
    for (std::size_t i = 0; i < dim; ++i) neg[i] = -r[i];
    push(r);
    push(std::move(neg));
  }

  while (!queue.empty()) {
    LVec s = queue.top();
    queue.pop();
    ++stats.popped;
    // normal form against g
    bool again = true;
    while (again) {
      again = false;
      for (const LVec& h : g) {
        if (!reduces(h, s)) continue;
        for (std::size_t i = 0; i < dim; ++i) s[i] -= h[i];
        again = true;
        break;
      }
      if (std::all_of(s.begin(), s.end(), [](long long x) { return x == 0; })) {
        again = false;
        s.clear();
      }
    }
    if (s.empty()) continue;
    if (g.size() >= lim.max_basis)
      throw ResourceLimitError("max_basis", "completion set exceeded its ceiling");
    for (const LVec& h : g)
      if (opposite_somewhere(s, h)) push(checked_sum(s, h));
    g.push_back(std::move(s));
  }
  stats.basis_size = g.size();

  // Hilbert basis = componentwise-minimal nonnegative members.
  std::vector<LVec> nonneg;
  for (const LVec& h : g)
    if (std::all_of(h.begin(), h.end(), [](long long x) { return x >= 0; }))
      nonneg.push_back(h);
  std::sort(nonneg.begin(), nonneg.end(), [](const LVec& a, const LVec& b) {
    long long na = norm1(a), nb = norm1(b);
    if (na != nb) return na < nb;
    return a < b;
  });
  std::vector<LVec> minimal;
  for (const LVec& v : nonneg) {
    bool dominated = false;
    for (const LVec& h : minimal) {
      bool le = true;
      for (std::size_t i = 0; i < dim && le; ++i) le = h[i] <= v[i];
      if (le) { dominated = true; break; }
    }
    if (!dominated) minimal.push_back(v);
  }
  return minimal;
}

LVec to_lvec(const std::vector<Int>& v) {
  LVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p())
      throw ResourceLimitError("overflow", "lattice entry exceeds machine range");
    r[i] = v[i].get_si();
  }
  return r;
}

std::vector<Int> to_ints(const LVec& v, std::size_t take) {
  std::vector<Int> r(take);
  for (std::size_t i = 0; i < take; ++i) r[i] = Int(static_cast<long>(v[i]));
  return r;
}

}  // namespace

HilbertBasisResult hilbert_basis_lattice_positive(const IntegerLattice& l,
                                                  const ResourceLimits& lim) {
  if (l.rank() == 0)
    throw std::invalid_argument("hilbert basis of the zero lattice");
  std::vector<LVec> rows;
  for (const auto& b : l.basis) rows.push_back(to_lvec(b));
  HilbertBasisResult res;
  res.system = "lattice(rank " + std::to_string(l.rank()) + ") ∩ N^" +
               std::to_string(l.dim);
  for (const LVec& v :
       completion_hilbert_basis(rows, static_cast<std::size_t>(l.dim), lim, res.stats))
    res.vectors.push_back(to_ints(v, l.dim));
  return res;
}

IntMat support_hyperplanes(const AffineMonoid& m, const ResourceLimits& lim) {
  const int d = rank_rational(m.gens);
  const std::size_t r = m.gens.size();
  IntMat span_basis = hermite_normal_form(m.gens);  // d rows, basis of span over Q

  IntMat facets;
  std::unordered_set<std::string> seen;
  std::vector<std::size_t> subset(d > 0 ? d - 1 : 0);
  std::size_t examined = 0;

  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t pos,
                                                           std::size_t from) {
    if (pos == subset.size()) {
      if (++examined > lim.max_enumeration)
        throw ResourceLimitError("max_enumeration", "too many facet candidate subsets");
      // candidate normal: h = y . span_basis with (gen_i . h) = 0 on the subset
      IntMat dots(subset.size(), std::vector<Int>(d));
      for (std::size_t i = 0; i < subset.size(); ++i)
        for (int j = 0; j < d; ++j) {
          Int s = 0;
          for (int k = 0; k < m.dim; ++k)
            s += m.gens[subset[i]][k] * span_basis[j][k];
          dots[i][j] = s;
        }
      IntMat kern = kernel_basis_rational(dots, d);
      if (kern.size() != 1) return;
      std::vector<Int> h(m.dim, 0);
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < m.dim; ++k) h[k] += kern[0][j] * span_basis[j][k];
      make_primitive(h);
      int pos_cnt = 0, neg_cnt = 0;
      IntMat tight;
      for (const auto& gvec : m.gens) {
        Int s = 0;
        for (int k = 0; k < m.dim; ++k) s += gvec[k] * h[k];
        if (s > 0) ++pos_cnt;
        else if (s < 0) ++neg_cnt;
        else tight.push_back(gvec);
      }
      if (pos_cnt > 0 && neg_cnt > 0) return;
      if (neg_cnt > 0)
        for (Int& x : h) x = -x;
      if (rank_rational(tight) != d - 1) return;  // supports a lower face only
      if (seen.insert(exps_to_string(h)).second) facets.push_back(std::move(h));
      return;
    }
    for (std::size_t i = from; i < r; ++i) {
      subset[pos] = i;
      walk(pos + 1, i + 1);
    }
  };
  walk(0, 0);
  return facets;
}

namespace {

// Solve x = lambda * c for a square nonsingular integer matrix c (row
// convention), exactly over Q.
std::vector<mpq_class> solve_row_system(const IntMat& c, const std::vector<Int>& x) {
  const std::size_t k = c.size();
  // transpose to column form: c^T y = x^T
  std::vector<std::vector<mpq_class>> a(k, std::vector<mpq_class>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = mpq_class(c[j][i]);
    a[i][k] = mpq_class(x[i]);
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a[piv][col] == 0) ++piv;
    if (piv == k) throw std::logic_error("singular parallelepiped matrix");
    std::swap(a[piv], a[col]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col || a[i][col] == 0) continue;
      mpq_class f = a[i][col] / a[col][col];
      for (std::size_t j = col; j <= k; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<mpq_class> lambda(k);
  for (std::size_t i = 0; i < k; ++i) {
    lambda[i] = a[i][k] / a[i][i];
    lambda[i].canonicalize();
  }
  return lambda;
}

Int floor_q(const mpq_class& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Lattice points of the half-open parallelepiped of the independent subset
// sigma, inside the lattice l. Appends to `out`.
void parallelepiped_points(const IntegerLattice& l, const IntMat& sigma,
                           std::vector<std::vector<Int>>& out,
                           const ResourceLimits& lim) {
  const int n = l.dim;
  const std::size_t k = sigma.size();
  // W = basis of l ∩ span(sigma): y-rows with y * (B Z^T) = 0 for the
  // orthogonal complement Z of span(sigma).
  IntMat z = kernel_basis_rational(sigma, n);
  IntMat c(l.basis.size(), std::vector<Int>(z.size(), 0));
  for (std::size_t i = 0; i < l.basis.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j)
      for (int t = 0; t < n; ++t) c[i][j] += l.basis[i][t] * z[j][t];
  IntMat ys = integer_left_kernel(c);
  IntMat w;
  for (const auto& y : ys) {
    std::vector<Int> v(n, 0);
    for (std::size_t i = 0; i < l.basis.size(); ++i)
      for (int t = 0; t < n; ++t) v[t] += y[i] * l.basis[i][t];
    w.push_back(std::move(v));
  }
  w = hermite_normal_form(w);
  if (w.size() != k)
    throw std::logic_error("sublattice rank mismatch in parallelepiped enumeration");

  // sigma rows in W-coordinates
  IntMat cm;
  for (const auto& s : sigma) {
    auto coords = hnf_solve(w, s);
    if (!coords) throw std::logic_error("generator escaped its own span lattice");
    cm.push_back(*coords);
  }
  HnfTransform hm = hnf_with_transform(cm);
  if (hm.rank != static_cast<int>(k))
    throw std::logic_error("parallelepiped matrix is singular");

  // Coset representatives of Z^k / rowspan(cm) live in the HNF pivot box.
  Int points = 1;
  std::vector<long> diag(k);
  for (std::size_t i = 0; i < k; ++i) {
    // full-rank k x k HNF: pivot sits on the diagonal
    if (hm.h[i][i] <= 0) throw std::logic_error("bad HNF diagonal");
    points *= hm.h[i][i];
    if (!hm.h[i][i].fits_slong_p() || points > static_cast<long>(lim.max_enumeration))
      throw ResourceLimitError("max_enumeration", "parallelepiped has too many points");
    diag[i] = hm.h[i][i].get_si();
  }

  std::vector<long> x(k, 0);
  while (true) {
    std::vector<Int> xi(k);
    for (std::size_t i = 0; i < k; ++i) xi[i] = Int(x[i]);
    // representative of the coset inside the half-open parallelepiped
    std::vector<mpq_class> lambda = solve_row_system(cm, xi);
    std::vector<Int> p(xi);
    for (std::size_t i = 0; i < k; ++i) {
      Int f = floor_q(lambda[i]);
      if (f != 0)
        for (std::size_t j = 0; j < k; ++j) p[j] -= f * cm[i][j];
    }
    bool zero = std::all_of(p.begin(), p.end(), [](const Int& v) { return v == 0; });
    if (!zero) {
      std::vector<Int> v(n, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (int t = 0; t < n; ++t) v[t] += p[i] * w[i][t];
      out.push_back(std::move(v));
    }
    std::size_t i = 0;
    while (i < k && ++x[i] == diag[i]) x[i++] = 0;
    if (i == k) break;
  }
}

}  // namespace

HilbertBasisResult cone_lattice_hilbert_basis(const AffineMonoid& m,
                                              const ResourceLimits& lim) {
  // Saturation ZC ∩ cone(C). Support inequalities pin the cone; candidate
  // irreducibles come from the half-open parallelepipeds of independent
  // generator subsets (any irreducible v = sum lambda_i a_i with some
  // lambda_i >= 1 would split off a_i), then a degree-ascending pass keeps
  // the monoid-irreducible ones.
  IntegerLattice l = lattice_from_rows(m.gens, m.dim);
  IntMat facets = support_hyperplanes(m, lim);
  HilbertBasisResult res;
  res.system = "Z-span ∩ cone, " + std::to_string(m.gens.size()) +
               " generators, " + std::to_string(facets.size()) +
               " support inequalities in Z^" + std::to_string(m.dim) +
               " (parallelepiped enumeration)";

  std::vector<std::vector<Int>> candidates = m.gens;
  std::unordered_set<std::string> seen;
  for (const auto& g : m.gens) seen.insert(exps_to_string(g));

  // DFS over linearly independent generator subsets.
  const int d = rank_rational(m.gens);
  IntMat sigma;
  std::function<void(std::size_t)> walk = [&](std::size_t from) {
    if (!sigma.empty()) {
      if (++res.stats.popped > lim.max_enumeration)
        throw ResourceLimitError("max_enumeration", "too many generator subsets");
      std::vector<std::vector<Int>> pts;
      parallelepiped_points(l, sigma, pts, lim);
      for (auto& p : pts) {
        ++res.stats.pushed;
        if (seen.insert(exps_to_string(p)).second) candidates.push_back(std::move(p));
      }
    }
    if (static_cast<int>(sigma.size()) == d) return;
    for (std::size_t i = from; i < m.gens.size(); ++i) {
      sigma.push_back(m.gens[i]);
      if (rank_rational(sigma) == static_cast<int>(sigma.size())) walk(i + 1);
      sigma.pop_back();
    }
  };
  walk(0);

  // Minimality: v is irreducible iff no kept h has v - h back in the
  // saturation (lattice membership is automatic; the facet inequalities
  // decide cone membership).
  auto in_cone = [&](const std::vector<Int>& v) {
    for (const auto& h : facets) {
      Int s = 0;
      for (int t = 0; t < m.dim; ++t) s += h[t] * v[t];
      if (s < 0) return false;
    }
    return true;
  };
  std::sort(candidates.begin(), candidates.end(),
            [](const std::vector<Int>& a, const std::vector<Int>& b) {
              Int da = total_degree(a), db = total_degree(b);
              if (da != db) return da < db;
              return lex_less(a, b);
            });
  std::vector<std::vector<Int>> basis;
  std::vector<Int> diff(m.dim);
  for (const auto& v : candidates) {
    bool reducible = false;
    for (const auto& h : basis) {
      for (int t = 0; t < m.dim; ++t) diff[t] = v[t] - h[t];
      if (in_cone(diff)) { reducible = true; break; }
    }
    if (!reducible) basis.push_back(v);
  }
  res.vectors = std::move(basis);
  res.stats.basis_size = res.vectors.size();
  return res;
}

SummandVerdict summand_check(const AffineMonoid& m, const ResourceLimits& lim) {
  IntegerLattice l = lattice_from_rows(m.gens, m.dim);
  HilbertBasisResult hb = hilbert_basis_lattice_positive(l, lim);
  SummandVerdict v;
  v.method = "hilbert-basis";
  for (const auto& e : hb.vectors) {
    if (!monoid_contains(m, e)) {
      v.status = SummandVerdict::Status::fails;
      v.witness = e;
      return v;
    }
  }
  v.status = SummandVerdict::Status::holds;
  v.basis = std::move(hb);
  return v;
}

NormalityVerdict normality_check(const AffineMonoid& m, const ResourceLimits& lim) {
  NormalityVerdict v;
  v.basis = cone_lattice_hilbert_basis(m, lim);
  for (const auto& e : v.basis.vectors) {
    if (!monoid_contains(m, e)) {
      v.normal = false;
      v.witness = e;
      return v;
    }
  }
  v.normal = true;
  return v;
}

int algebra_dim(const AffineMonoid& m) { return rank_rational(m.gens); }

namespace {

// exponent assignments of total `target` over `vars` variables
void compositions(long target, std::size_t vars, ExponentVec& acc,
                  const std::function<void(const ExponentVec&)>& emit) {
  if (vars == 1) {
    acc.push_back(Int(target));
    emit(acc);
    acc.pop_back();
    return;
  }
  for (long c = 0; c <= target; ++c) {
    acc.push_back(Int(c));
    compositions(target - c, vars - 1, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

MonomialIdeal degree_selection(const std::vector<std::vector<int>>& blocks,
                               const IntMat& subgroup_gens, int nvars, Field field,
                               const ResourceLimits& lim) {
  // blocks must partition {0..nvars-1}
  std::vector<int> owner(nvars, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block in partition");
    for (int v : blocks[b]) {
      if (v < 0 || v >= nvars || owner[v] != -1)
        throw std::invalid_argument("blocks do not partition the variables");
      owner[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < nvars; ++v)
    if (owner[v] == -1)
      throw std::invalid_argument("blocks do not partition the variables");

  const int s = static_cast<int>(blocks.size());
  PolyContext ctx(nvars, field);
  IntegerLattice h = lattice_from_rows(subgroup_gens, s);
  if (h.rank() == 0) return MonomialIdeal::zero(ctx);
  HilbertBasisResult hb = hilbert_basis_lattice_positive(h, lim);
  if (hb.vectors.empty()) return MonomialIdeal::zero(ctx);

  std::vector<ExponentVec> gens;
  for (const auto& a : hb.vectors) {
    // all monomials of block-multidegree a: independent compositions per block
    Int expected = 1;
    for (int b = 0; b < s; ++b) {
      if (!a[b].fits_slong_p())
        throw ResourceLimitError("overflow", "block degree exceeds machine range");
      expected *= binom(a[b].get_ui() + blocks[b].size() - 1, blocks[b].size() - 1);
    }
    if (expected > static_cast<long>(lim.max_enumeration))
      throw ResourceLimitError("max_enumeration",
                               "degree-selection multidegree is too populous");

    std::vector<std::vector<ExponentVec>> per_block(s);
    for (int b = 0; b < s; ++b) {
      ExponentVec acc;
      compositions(a[b].get_si(), blocks[b].size(), acc,
                   [&](const ExponentVec& c) { per_block[b].push_back(c); });
    }
    std::vector<std::size_t> pick(s, 0);
    while (true) {
      ExponentVec mono(nvars, 0);
      for (int b = 0; b < s; ++b)
        for (std::size_t i = 0; i < blocks[b].size(); ++i)
          mono[blocks[b][i]] = per_block[b][pick[b]][i];
      gens.push_back(std::move(mono));
      int b = s - 1;
      while (b >= 0 && ++pick[b] == per_block[b].size()) pick[b--] = 0;
      if (b < 0) break;
    }
  }
  return MonomialIdeal::make(ctx, std::move(gens));
}

}
