#include <random>

#include "doctest.h"
#include "mondepth/hilbert.hpp"
#include "mondepth/monomial.hpp"
#include "oracles.hpp"

using namespace mondepth;
using oracle::make_ideal;

TEST_CASE("minimalize drops divisible generators") {
  auto I = make_ideal(1, {{1}, {2}});
  CHECK(I.ngens() == 1);
  CHECK(I.gens()[0][0] == 1);

  auto J = make_ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK(J.ngens() == 3);  // xyz is divisible by xy

  // minimal generator lists pass through untouched
  auto E = oracle::running_example();
  CHECK(E.ngens() == 3);
}

TEST_CASE("minimalize validates input") {
  CHECK_THROWS_AS(make_ideal(2, {{1, 2, 3}}), std::invalid_argument);
  PolyContext ctx(2);
  CHECK_THROWS_AS(MonomialIdeal::make(ctx, {ExponentVec{Int(-1), Int(0)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PolyContext(0), std::invalid_argument);
}

TEST_CASE("canonical form: sorted, idempotent, equality by representation") {
  auto a = make_ideal(2, {{1, 0}, {0, 1}});
  auto b = make_ideal(2, {{0, 1}, {1, 0}, {1, 1}});
  CHECK(a == b);
  CHECK(a.key() == b.key());
  auto again = MonomialIdeal::make(a.context(), a.gens());
  CHECK(again == a);
}

TEST_CASE("zero and unit ideals") {
  PolyContext ctx(3);
  auto z = MonomialIdeal::zero(ctx);
  auto u = MonomialIdeal::unit(ctx);
  CHECK(z.is_zero());
  CHECK(z.is_proper());
  CHECK(u.is_unit());
  CHECK(!u.is_proper());
  CHECK(power(z, 5).is_zero());
  CHECK(power(u, 0).is_unit());
  CHECK(product(z, u).is_zero());
  CHECK(product(u, u).is_unit());
}

TEST_CASE("power: squares and unit cases") {
  auto m = oracle::maximal(2);
  auto m2 = power(m, 2);
  CHECK(m2 == make_ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(power(m, 0).is_unit());

  // all pairwise products of the three generators stay minimal
  auto e2 = power(oracle::running_example(), 2);
  CHECK(e2.ngens() == 6);
  for (const auto& g : e2.gens()) {
    int divisors = 0;
    for (const auto& h : e2.gens())
      if (divides(h, g)) ++divisors;
    CHECK(divisors == 1);
  }
}

TEST_CASE("product basics") {
  auto x = make_ideal(2, {{1, 0}});
  auto y = make_ideal(2, {{0, 1}});
  CHECK(product(x, y) == make_ideal(2, {{1, 1}}));
  auto t = oracle::triangle();
  CHECK(product(t, MonomialIdeal::unit(t.context())) == t);
  CHECK_THROWS_AS(product(x, oracle::triangle()), std::invalid_argument);
}

TEST_CASE("contains: divisibility membership") {
  auto E = oracle::running_example();
  CHECK(E.contains(ExponentVec{Int(2), Int(0), Int(0), Int(3), Int(0), Int(0)}));
  CHECK(!E.contains(ExponentVec{Int(0), Int(0), Int(0), Int(3), Int(3), Int(0)}));
  CHECK(!E.contains(ExponentVec(6, 0)));  // 1 is not in a proper ideal
  CHECK(MonomialIdeal::unit(PolyContext(6)).contains(ExponentVec(6, 0)));
}

TEST_CASE("edge ideals") {
  auto tri = edge_ideal(Graph::make(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(tri == oracle::triangle());
  auto path = edge_ideal(Graph::make(3, {{1, 2}, {2, 3}}));
  CHECK(path == oracle::path3());
  CHECK(edge_ideal(Graph::make(4, {})).is_zero());
  CHECK_THROWS_AS(Graph::make(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::make(2, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::make(2, {{1, 3}}), std::invalid_argument);
}

namespace {

MonomialIdeal random_ideal(std::mt19937_64& rng, int max_vars = 4, int max_gens = 4,
                           long max_exp = 3) {
  std::uniform_int_distribution<int> nv(1, max_vars), ng(1, max_gens);
  std::uniform_int_distribution<long> ex(0, max_exp);
  int n = nv(rng);
  std::vector<ExponentVec> gens;
  int r = ng(rng);
  for (int i = 0; i < r; ++i) {
    ExponentVec e(n);
    bool zero = true;
    for (int j = 0; j < n; ++j) {
      long v = ex(rng);
      e[j] = Int(v);
      zero = zero && v == 0;
    }
    if (!zero) gens.push_back(std::move(e));
  }
  return MonomialIdeal::make(PolyContext(n), std::move(gens));
}

}  // namespace

TEST_CASE("property: power is additive and bounded") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialIdeal I = random_ideal(rng, 3, 3, 2);
    std::uniform_int_distribution<int> kk(0, 5);
    unsigned long a = kk(rng), b = kk(rng);
    CHECK(power(I, a + b) == product(power(I, a), power(I, b)));
    if (!I.is_zero()) {
      unsigned long k = a + 1;
      // C(r + k - 1, k) bounds the generator count
      Int bound = binom(I.ngens() + k - 1, k);
      CHECK(Int(static_cast<long>(power(I, k).ngens())) <= bound);
    }
  }
}

TEST_CASE("property: membership in powers agrees with multiset search") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> ex(0, 5);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal I = random_ideal(rng, 3, 4, 2);
    if (I.is_zero()) continue;
    std::uniform_int_distribution<int> kk(1, 4);
    unsigned long k = kk(rng);
    MonomialIdeal Ik = power(I, k);
    for (int probe = 0; probe < 10; ++probe) {
      ExponentVec m(I.nvars());
      for (int j = 0; j < I.nvars(); ++j) m[j] = Int(ex(rng));
      CHECK(Ik.contains(m) == oracle::power_contains_bruteforce(I, k, m));
    }
  }
}
