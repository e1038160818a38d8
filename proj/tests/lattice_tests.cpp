#include <random>

#include "doctest.h"
#include "mondepth/lattice.hpp"
#include "oracles.hpp"

using namespace mondepth;

namespace {

std::vector<Int> iv(const std::vector<long>& v) {
  std::vector<Int> r;
  for (long x : v) r.push_back(Int(x));
  return r;
}

IntMat rowsof(const std::vector<std::vector<long>>& rows) {
  IntMat m;
  for (const auto& r : rows) m.push_back(iv(r));
  return m;
}

// the even-coordinate-sum lattice in Z^3
IntegerLattice even_lattice() {
  return lattice_from_rows(rowsof({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}), 3);
}

bool same_vectors(std::vector<std::vector<Int>> a, std::vector<std::vector<Int>> b) {
  auto lt = [](const std::vector<Int>& x, const std::vector<Int>& y) {
    return lex_less(x, y);
  };
  std::sort(a.begin(), a.end(), lt);
  std::sort(b.begin(), b.end(), lt);
  return a == b;
}

}  // namespace

TEST_CASE("HNF bases") {
  auto even = even_lattice();
  CHECK(even.rank() == 3);
  // index 2 in Z^3: the pivot product is the determinant
  Int det = 1;
  for (int i = 0; i < 3; ++i) det *= even.basis[i][i];
  CHECK(det == 2);

  auto full = lattice_from_rows(rowsof({{1, 0}, {0, 1}, {3, 5}}), 2);
  CHECK(full.basis == rowsof({{1, 0}, {0, 1}}));

  auto twoz = lattice_from_rows(rowsof({{2}}), 1);
  CHECK(twoz.basis == rowsof({{2}}));

  CHECK(lattice_from_rows({}, 3).rank() == 0);  // zero lattice
}

TEST_CASE("lattice membership") {
  auto even = even_lattice();
  CHECK(lattice_contains(even, iv({2, 0, 0})));
  CHECK(!lattice_contains(even, iv({1, 0, 0})));
  CHECK(lattice_contains(even, iv({0, 0, 0})));
  CHECK(lattice_contains(even, iv({-1, -1, 2})));
  auto zero = lattice_from_rows({}, 2);
  CHECK(lattice_contains(zero, iv({0, 0})));
  CHECK(!lattice_contains(zero, iv({0, 1})));
}

TEST_CASE("monoid membership with certificates") {
  auto m = AffineMonoid::make(3, rowsof({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  CHECK(!monoid_contains(m, iv({2, 0, 0})));
  auto c1 = monoid_contains(m, iv({1, 1, 0}));
  REQUIRE(c1);
  CHECK(*c1 == iv({1, 0, 0}));
  auto c2 = monoid_contains(m, iv({2, 1, 1}));
  REQUIRE(c2);
  CHECK(*c2 == iv({1, 1, 0}));
  // coefficients must reproduce the vector
  std::vector<Int> rebuilt(3, 0);
  for (std::size_t i = 0; i < m.gens.size(); ++i)
    for (int t = 0; t < 3; ++t) rebuilt[t] += (*c2)[i] * m.gens[i][t];
  CHECK(rebuilt == iv({2, 1, 1}));
}

TEST_CASE("monoid membership agrees with plain search") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> dim(1, 6), ng(1, 4);
  std::uniform_int_distribution<long> entry(0, 3), probe(0, 6);
  for (int trial = 0; trial < 40; ++trial) {
    int n = dim(rng);
    IntMat gens;
    for (int i = 0, r = ng(rng); i < r; ++i) {
      std::vector<Int> g(n);
      bool zero = true;
      for (int j = 0; j < n; ++j) {
        g[j] = Int(entry(rng));
        zero = zero && g[j] == 0;
      }
      if (!zero) gens.push_back(std::move(g));
    }
    if (gens.empty()) continue;
    auto m = AffineMonoid::make(n, gens);
    for (int q = 0; q < 8; ++q) {
      std::vector<Int> v(n);
      for (int j = 0; j < n; ++j) v[j] = Int(probe(rng));
      CHECK(monoid_contains(m, v).has_value() ==
            oracle::monoid_contains_bruteforce(m.gens, v));
    }
  }
}

TEST_CASE("Hilbert basis of lattice ∩ N^n: worked examples") {
  auto hb = hilbert_basis_lattice_positive(even_lattice());
  CHECK(same_vectors(hb.vectors, rowsof({{2, 0, 0}, {0, 2, 0}, {0, 0, 2},
                                         {1, 1, 0}, {1, 0, 1}, {0, 1, 1}})));

  auto units = hilbert_basis_lattice_positive(
      lattice_from_rows(rowsof({{1, 0}, {0, 1}}), 2));
  CHECK(same_vectors(units.vectors, rowsof({{1, 0}, {0, 1}})));

  auto twoz = hilbert_basis_lattice_positive(lattice_from_rows(rowsof({{2}}), 1));
  CHECK(same_vectors(twoz.vectors, rowsof({{2}})));

  CHECK_THROWS_AS(hilbert_basis_lattice_positive(lattice_from_rows({}, 2)),
                  std::invalid_argument);
}

TEST_CASE("Hilbert basis vs box brute force on random lattices") {
  std::mt19937_64 rng(60601);
  std::uniform_int_distribution<int> dim(1, 4), nrows(1, 3);
  std::uniform_int_distribution<long> entry(-3, 3);
  const long B = 6;
  int done = 0;
  while (done < 50) {
    int n = dim(rng);
    IntMat rows;
    for (int i = 0, r = nrows(rng); i < r; ++i) {
      std::vector<Int> v(n);
      for (int j = 0; j < n; ++j) v[j] = Int(entry(rng));
      rows.push_back(std::move(v));
    }
    auto l = lattice_from_rows(rows, n);
    if (l.rank() == 0) continue;
    ++done;
    auto hb = hilbert_basis_lattice_positive(l);

    // every basis vector is a box point of the lattice (when inside the box)
    for (const auto& v : hb.vectors) {
      CHECK(lattice_contains(l, v));
      for (const Int& x : v) CHECK(x >= 0);
    }
    // every nonzero box point decomposes over the basis, and the basis is an
    // antichain (no member dominates another)
    AffineMonoid basis_monoid =
        hb.vectors.empty() ? AffineMonoid{} : AffineMonoid::make(n, hb.vectors);
    for (const auto& p : oracle::lattice_box_points(l, B)) {
      bool zero = std::all_of(p.begin(), p.end(), [](const Int& x) { return x == 0; });
      if (zero) continue;
      if (hb.vectors.empty())
        FAIL_CHECK("box point exists but the basis is empty");
      else
        CHECK(monoid_contains(basis_monoid, p).has_value());
    }
    for (std::size_t i = 0; i < hb.vectors.size(); ++i)
      for (std::size_t j = 0; j < hb.vectors.size(); ++j)
        if (i != j) CHECK(!divides(hb.vectors[i], hb.vectors[j]));
  }
}

TEST_CASE("cone-lattice Hilbert basis (saturation)") {
  // unit vectors: already saturated
  auto m1 = AffineMonoid::make(2, rowsof({{1, 0}, {0, 1}}));
  CHECK(same_vectors(cone_lattice_hilbert_basis(m1).vectors,
                     rowsof({{1, 0}, {0, 1}})));

  // (1,1) completes the segment monoid
  auto m2 = AffineMonoid::make(2, rowsof({{0, 1}, {2, 1}, {3, 1}}));
  auto hb2 = cone_lattice_hilbert_basis(m2);
  bool has11 = false;
  for (const auto& v : hb2.vectors) has11 = has11 || v == iv({1, 1});
  CHECK(has11);
  CHECK(!monoid_contains(m2, iv({1, 1})));

  // the triangle monoid is saturated
  auto m3 = AffineMonoid::make(3, rowsof({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  CHECK(same_vectors(cone_lattice_hilbert_basis(m3).vectors,
                     rowsof({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}})));
}

TEST_CASE("saturation basis vs box brute force on random monoids") {
  std::mt19937_64 rng(424243);
  std::uniform_int_distribution<int> dim(1, 3), ng(1, 4);
  std::uniform_int_distribution<long> entry(0, 3);
  const long B = 6;
  int done = 0;
  while (done < 30) {
    int n = dim(rng);
    IntMat gens;
    for (int i = 0, r = ng(rng); i < r; ++i) {
      std::vector<Int> g(n);
      bool zero = true;
      for (int j = 0; j < n; ++j) {
        g[j] = Int(entry(rng));
        zero = zero && g[j] == 0;
      }
      if (!zero) gens.push_back(std::move(g));
    }
    if (gens.empty()) continue;
    ++done;
    auto m = AffineMonoid::make(n, gens);
    auto l = lattice_from_rows(m.gens, n);
    auto facets = support_hyperplanes(m);
    auto hb = cone_lattice_hilbert_basis(m);
    REQUIRE(!hb.vectors.empty());
    auto sat_monoid = AffineMonoid::make(n, hb.vectors);

    auto in_cone = [&](const std::vector<Int>& v) {
      for (const auto& h : facets) {
        Int s = 0;
        for (int t = 0; t < n; ++t) s += h[t] * v[t];
        if (s < 0) return false;
      }
      return true;
    };
    // box points of the saturation = N-combinations of the returned basis
    for (const auto& p : oracle::lattice_box_points(l, B)) {
      if (!in_cone(p)) continue;
      CHECK(monoid_contains(sat_monoid, p).has_value());
    }
    // and each basis vector is genuinely in the saturation
    for (const auto& v : hb.vectors) {
      CHECK(lattice_contains(l, v));
      CHECK(in_cone(v));
    }
  }
}

TEST_CASE("summand checks with verifiable witnesses") {
  auto tri = AffineMonoid::make(3, rowsof({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  auto v = summand_check(tri);
  CHECK(v.status == SummandVerdict::Status::fails);
  REQUIRE(v.witness);
  // the witness is in the lattice, nonnegative, and outside the monoid
  CHECK(lattice_contains(lattice_from_rows(tri.gens, 3), *v.witness));
  for (const Int& x : *v.witness) CHECK(x >= 0);
  CHECK(!monoid_contains(tri, *v.witness));

  auto ex = AffineMonoid::make(6, oracle::running_example().gens());
  auto ve = summand_check(ex);
  CHECK(ve.status == SummandVerdict::Status::holds);
  REQUIRE(ve.basis);
  for (const auto& b : ve.basis->vectors) CHECK(monoid_contains(ex, b).has_value());

  auto single = AffineMonoid::make(2, rowsof({{2, 3}}));
  CHECK(summand_check(single).status == SummandVerdict::Status::holds);
}

TEST_CASE("normality checks") {
  auto tri = AffineMonoid::make(3, rowsof({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  CHECK(normality_check(tri).normal);

  auto seg = AffineMonoid::make(2, rowsof({{0, 1}, {2, 1}, {3, 1}}));
  auto nv = normality_check(seg);
  CHECK(!nv.normal);
  REQUIRE(nv.witness);
  CHECK(*nv.witness == iv({1, 1}));

  auto units = AffineMonoid::make(3, rowsof({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(normality_check(units).normal);
}

TEST_CASE("summand implies normal") {
  std::mt19937_64 rng(11211);
  std::uniform_int_distribution<int> dim(1, 3), ng(1, 3);
  std::uniform_int_distribution<long> entry(0, 2);
  int done = 0;
  while (done < 25) {
    int n = dim(rng);
    IntMat gens;
    for (int i = 0, r = ng(rng); i < r; ++i) {
      std::vector<Int> g(n);
      bool zero = true;
      for (int j = 0; j < n; ++j) {
        g[j] = Int(entry(rng));
        zero = zero && g[j] == 0;
      }
      if (!zero) gens.push_back(std::move(g));
    }
    if (gens.empty()) continue;
    ++done;
    auto m = AffineMonoid::make(n, gens);
    if (summand_check(m).status == SummandVerdict::Status::holds)
      CHECK(normality_check(m).normal);
  }
}

TEST_CASE("algebra dimension is the exponent-matrix rank") {
  CHECK(algebra_dim(AffineMonoid::make(6, oracle::running_example().gens())) == 3);
  CHECK(algebra_dim(AffineMonoid::make(3, rowsof({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}))) == 3);
  CHECK(algebra_dim(AffineMonoid::make(4, rowsof({{1, 0, 0, 0}, {0, 1, 0, 0},
                                                  {0, 0, 1, 0}, {0, 0, 0, 1}}))) == 4);
  CHECK(algebra_dim(AffineMonoid::make(3, rowsof({{1, 2, 3}, {2, 4, 6}}))) == 1);
}

TEST_CASE("degree-selection ideals") {
  // one block, H = 2Z: the square of the irrelevant ideal
  auto m2 = degree_selection({{0, 1}}, rowsof({{2}}), 2);
  CHECK(m2 == oracle::make_ideal(2, {{2, 0}, {1, 1}, {0, 2}}));

  // two singleton blocks, H = Z(1,1): the principal ideal (x1 x2)
  auto diag = degree_selection({{0}, {1}}, rowsof({{1, 1}}), 2);
  CHECK(diag == oracle::make_ideal(2, {{1, 1}}));

  // H = Z^2: the whole irrelevant ideal
  auto full = degree_selection({{0}, {1}}, rowsof({{1, 0}, {0, 1}}), 2);
  CHECK(full == oracle::make_ideal(2, {{1, 0}, {0, 1}}));

  // H with no nonzero nonnegative members: the zero ideal
  auto none = degree_selection({{0}, {1}}, rowsof({{1, -1}}), 2);
  CHECK(none.is_zero());

  CHECK_THROWS_AS(degree_selection({{0}}, rowsof({{1, 0}}), 2), std::invalid_argument);
  CHECK_THROWS_AS(degree_selection({{0}, {0, 1}}, rowsof({{1, 1}}), 2),
                  std::invalid_argument);
}

TEST_CASE("every degree-selection ideal is a summand ideal") {
  std::mt19937_64 rng(987654);
  std::uniform_int_distribution<int> ns(1, 3), nv_extra(0, 3), nh(1, 2);
  std::uniform_int_distribution<long> entry(-3, 3);
  int done = 0;
  while (done < 30) {
    int s = ns(rng);
    int n = s + nv_extra(rng);  // at least one variable per block
    std::vector<std::vector<int>> blocks(s);
    for (int v = 0; v < n; ++v)
      blocks[v < s ? v : static_cast<int>(rng() % s)].push_back(v);
    IntMat hgens;
    for (int i = 0, r = nh(rng); i < r; ++i) {
      std::vector<Int> h(s);
      for (int j = 0; j < s; ++j) h[j] = Int(entry(rng));
      hgens.push_back(std::move(h));
    }
    MonomialIdeal I;
    try {
      I = degree_selection(blocks, hgens, n);
    } catch (const ResourceLimitError&) {
      continue;  // unlucky draw: some multidegree is too populous
    }
    if (I.is_zero() || I.is_unit()) continue;
    ++done;
    auto m = AffineMonoid::make(n, I.gens());
    CHECK(summand_check(m).status == SummandVerdict::Status::holds);
  }
}

TEST_CASE("hilbert basis minimality: nothing decomposes over the rest") {
  for (auto& hb : {hilbert_basis_lattice_positive(even_lattice()),
                   cone_lattice_hilbert_basis(AffineMonoid::make(
                       2, rowsof({{0, 1}, {2, 1}, {3, 1}})))}) {
    for (std::size_t i = 0; i < hb.vectors.size(); ++i) {
      IntMat others;
      for (std::size_t j = 0; j < hb.vectors.size(); ++j)
        if (j != i) others.push_back(hb.vectors[j]);
      if (others.empty()) continue;
      int n = static_cast<int>(hb.vectors[i].size());
      CHECK(!monoid_contains(AffineMonoid::make(n, others), hb.vectors[i]));
    }
  }
}
