#include <doctest.h>

#include <set>

#include "testutil.hpp"

using namespace qtchar;

TEST_SUITE_BEGIN("tfm");

namespace {

Monomial from_factors(const CartanKey& ck, std::initializer_list<std::tuple<int, int, int>> fs) {
  Monomial m(ck);
  for (const auto& [i, p, e] : fs) m.mul_var(i, p, e);
  return m;
}

Monomial relabel(const CartanKey& ck, const Monomial& m, const std::vector<int>& perm) {
  Monomial r(ck);
  for (const auto& e : m.entries()) r.mul_var(perm[e.node - 1], e.p, e.exp);
  return r;
}

Monomial shift_p(const Monomial& m, int s) {
  Monomial r(m.cartan());
  for (const auto& e : m.entries()) r.mul_var(e.node, e.p + s, e.exp);
  return r;
}

long long coeff_sum(const TorusElement& x) {
  long long total = 0;
  for (const auto& [m, c] : x.terms()) total += c.ev1();
  return total;
}

}  // namespace

TEST_CASE("closure of rank-one fundamentals") {
  Engine eng({Family::A, 1});
  const CartanKey ck = eng.key();
  auto cs = eng.dominance_closure(eng.y(1, 0));
  REQUIRE(cs.members.size() == 2);
  CHECK(cs.members[0] == eng.y(1, 0));
  CHECK(cs.members[1] == Monomial::y(ck, 1, 2, -1));
}

TEST_CASE("closure of the A2 fundamental") {
  Engine eng({Family::A, 2});
  const CartanKey ck = eng.key();
  auto cs = eng.dominance_closure(eng.y(1, 0));
  REQUIRE(cs.members.size() == 3);
  CHECK(cs.members[0] == eng.y(1, 0));
  CHECK(cs.members[1] == from_factors(ck, {{1, 2, -1}, {2, 1, 1}}));
  CHECK(cs.members[2] == Monomial::y(ck, 2, 3, -1));
}

TEST_CASE("closure of the rank-one length-two string") {
  Engine eng({Family::A, 1});
  const CartanKey ck = eng.key();
  const Monomial m = from_factors(ck, {{1, 0, 1}, {1, 2, 1}});
  auto cs = eng.dominance_closure(m);
  const std::set<Monomial> members(cs.members.begin(), cs.members.end());
  const std::set<Monomial> expected{m, from_factors(ck, {{1, 0, 1}, {1, 4, -1}}),
                                    from_factors(ck, {{1, 2, -1}, {1, 4, -1}})};
  CHECK(members == expected);
}

TEST_CASE("closure member order is compatible with the Nakajima ordering") {
  Engine eng({Family::C, 2});
  auto cs = eng.dominance_closure(eng.y(2, 0) * eng.y(1, 1));
  const CartanData& cd = eng.cartan();
  for (size_t k = 0; k < cs.members.size(); ++k)
    for (size_t l = k + 1; l < cs.members.size(); ++l) {
      const bool later_above = nakajima_leq(cd, cs.members[k], cs.members[l]) &&
                               !(cs.members[k] == cs.members[l]);
      CHECK_FALSE(later_above);
    }
}

TEST_CASE("cap exhaustion is reported") {
  Engine eng({Family::A, 2}, /*cap=*/2);
  try {
    eng.dominance_closure(eng.y(1, 0));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("rank-one F_t values") {
  Engine eng({Family::A, 1});
  const CartanKey ck = eng.key();

  TorusElement fund(ck);
  fund.add_term(eng.y(1, 0), HalfT::one());
  fund.add_term(Monomial::y(ck, 1, 2, -1), HalfT::one());
  CHECK(eng.f_t(eng.y(1, 0)).body() == fund);

  const Monomial kr = from_factors(ck, {{1, 0, 1}, {1, 2, 1}});
  TorusElement expected(ck);
  expected.add_term(kr, HalfT::one());
  expected.add_term(from_factors(ck, {{1, 0, 1}, {1, 4, -1}}), HalfT::one());
  expected.add_term(from_factors(ck, {{1, 2, -1}, {1, 4, -1}}), HalfT::one());
  CHECK(eng.f_t(kr).body() == expected);
}

TEST_CASE("A2 fundamental has all coefficients 1") {
  Engine eng({Family::A, 2});
  const CartanKey ck = eng.key();
  const Pointed f = eng.f_t(eng.y(1, 0));
  TorusElement expected(ck);
  expected.add_term(eng.y(1, 0), HalfT::one());
  expected.add_term(from_factors(ck, {{1, 2, -1}, {2, 1, 1}}), HalfT::one());
  expected.add_term(Monomial::y(ck, 2, 3, -1), HalfT::one());
  CHECK(f.body() == expected);
}

TEST_CASE("classical path: A2 node-2 fundamental via the diagram flip") {
  Engine eng({Family::A, 2});
  const CartanKey ck = eng.key();
  const TorusElement f = eng.f_classical(eng.y(2, 0));
  TorusElement expected(ck);
  expected.add_term(eng.y(2, 0), HalfT::one());
  expected.add_term(from_factors(ck, {{2, 2, -1}, {1, 1, 1}}), HalfT::one());
  expected.add_term(Monomial::y(ck, 1, 3, -1), HalfT::one());
  CHECK(f == expected);
}

TEST_CASE("classical dimensions in low rank") {
  Engine a1({Family::A, 1});
  CHECK(coeff_sum(a1.f_classical(a1.y(1, 0))) == 2);

  Engine b2({Family::B, 2});
  const std::set<long long> dims{coeff_sum(b2.f_classical(b2.y(1, 0))),
                                 coeff_sum(b2.f_classical(b2.y(2, 0)))};
  CHECK(dims == std::set<long long>{4, 5});
}

TEST_CASE("F_t specializes to the classical path on fundamentals") {
  for (const auto& type : std::vector<LieType>{
           {Family::A, 3}, {Family::B, 2}, {Family::C, 2}, {Family::D, 4}}) {
    Engine eng(type);
    for (int i = 1; i <= eng.cartan().rank; ++i) {
      const Pointed f = eng.f_t(eng.y(i, 0));
      CHECK_MESSAGE(f.body().ev_t1() == eng.f_classical(eng.y(i, 0)),
                    eng.cartan().name() << " node " << i);
    }
  }
}

TEST_CASE("deformed and classical recursions agree after evaluation") {
  // The t-recursion evaluated at t = 1 must reproduce the integer recursion
  // on every dominant seed; the two paths share only the monomial algebra.
  std::mt19937_64 rng(107);
  for (const auto& type : std::vector<LieType>{{Family::A, 3}, {Family::B, 2}, {Family::C, 3}}) {
    Engine eng(type);
    for (int k = 0; k < 8; ++k) {
      const Monomial m = qtest::random_dominant(rng, eng.cartan(), 2, 0, 4);
      CHECK_MESSAGE(eng.f_t(m).body().ev_t1() == eng.f_classical(m), eng.cartan().name());
    }
  }
}

TEST_CASE("total-order independence of the recursion") {
  std::mt19937_64 rng(53);
  for (const auto& type : std::vector<LieType>{{Family::A, 2}, {Family::B, 2}, {Family::C, 3}}) {
    Engine eng(type);
    for (int k = 0; k < 5; ++k) {
      const Monomial m = qtest::random_dominant(rng, eng.cartan(), 2, 0, 4);
      CHECK(eng.f_t(m, Engine::MemberOrder::LexAsc).body() ==
            eng.f_t(m, Engine::MemberOrder::LexDesc).body());
    }
  }
}

TEST_CASE("spectral shift equivariance") {
  std::mt19937_64 rng(59);
  Engine eng({Family::B, 2});
  for (int k = 0; k < 5; ++k) {
    const Monomial m = qtest::random_dominant(rng, eng.cartan(), 2, 0, 4);
    const int s = 3;
    const TorusElement shifted = eng.f_t(shift_p(m, s)).body();
    const TorusElement base = eng.f_t(m).body();
    TorusElement expect(eng.key());
    for (const auto& [mm, c] : base.terms()) expect.add_term(shift_p(mm, s), c);
    CHECK(shifted == expect);
  }
}

TEST_CASE("diagram symmetry equivariance for types A and D") {
  std::mt19937_64 rng(61);

  Engine a3({Family::A, 3});
  const std::vector<int> flip{3, 2, 1};
  for (int k = 0; k < 4; ++k) {
    const Monomial m = qtest::random_dominant(rng, a3.cartan(), 2, 0, 3);
    const TorusElement lhs = a3.f_t(relabel(a3.key(), m, flip)).body();
    const TorusElement rhs_base = a3.f_t(m).body();
    TorusElement rhs(a3.key());
    for (const auto& [mm, c] : rhs_base.terms()) rhs.add_term(relabel(a3.key(), mm, flip), c);
    CHECK(lhs == rhs);
  }

  Engine d4({Family::D, 4});
  const std::vector<int> swap12{2, 1, 3, 4};
  for (int k = 0; k < 3; ++k) {
    const Monomial m = qtest::random_dominant(rng, d4.cartan(), 2, 0, 2);
    const TorusElement lhs = d4.f_t(relabel(d4.key(), m, swap12)).body();
    const TorusElement rhs_base = d4.f_t(m).body();
    TorusElement rhs(d4.key());
    for (const auto& [mm, c] : rhs_base.terms()) rhs.add_term(relabel(d4.key(), mm, swap12), c);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("non-dominant seeds are rejected") {
  Engine eng({Family::A, 2});
  CHECK_THROWS_AS(eng.f_t(eng.y(1, 0, -1)), Error);
  CHECK_THROWS_AS(eng.f_classical(eng.y(1, 0, -1)), Error);
}

TEST_SUITE_END();
