#include <doctest.h>

#include "qtchar/freeze.hpp"
#include "testutil.hpp"

using namespace qtchar;

TEST_SUITE_BEGIN("freeze");

namespace {

Monomial from_factors(const CartanKey& ck, std::initializer_list<std::tuple<int, int, int>> fs) {
  Monomial m(ck);
  for (const auto& [i, p, e] : fs) m.mul_var(i, p, e);
  return m;
}

}  // namespace

TEST_CASE("standard inclusions validate; incompatible ones are rejected") {
  CHECK_NOTHROW(DiagramInclusion::standard(Family::A, 2, 4));
  CHECK_NOTHROW(DiagramInclusion::standard(Family::B, 2, 3));
  CHECK_NOTHROW(DiagramInclusion::standard(Family::C, 2, 4));
  CHECK_NOTHROW(DiagramInclusion::standard(Family::D, 4, 5));

  // B inside C flips the symmetrizer at node 1.
  try {
    DiagramInclusion(cartan_data({Family::B, 2}), cartan_data({Family::C, 4}), {1, 2});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompatibleInclusion);
  }
  // A chain inside D must avoid the fork mislabeling.
  CHECK_THROWS_AS(DiagramInclusion(cartan_data({Family::A, 3}), cartan_data({Family::D, 4}),
                                   {1, 2, 3}),
                  Error);
  // A_2 sits inside D_4 along nodes 1-3.
  CHECK_NOTHROW(DiagramInclusion(cartan_data({Family::A, 2}), cartan_data({Family::D, 4}),
                                 {1, 3}));
}

TEST_CASE("restriction of variables and A-monomials") {
  const auto inc = DiagramInclusion::standard(Family::A, 1, 2);
  const CartanKey big = key_of(inc.big), small = key_of(inc.small);

  CHECK(res_monomial(inc, from_factors(big, {{1, 0, 1}, {2, 3, -1}})) ==
        Monomial::y(small, 1, 0));

  for (int p : {-2, 0, 3}) {
    CHECK(res_monomial(inc, a_monomial(inc.big, 1, p)) == a_monomial(inc.small, 1, p));
    // res of a foreign A-monomial is not 1 in general.
    CHECK(res_monomial(inc, a_monomial(inc.big, 2, p)) == Monomial::y(small, 1, p, -1));
  }

  const auto incB = DiagramInclusion::standard(Family::B, 2, 4);
  for (int i = 1; i <= 2; ++i)
    CHECK(res_monomial(incB, a_monomial(incB.big, i, 1)) == a_monomial(incB.small, i, 1));
}

TEST_CASE("freezing the A2 fundamental down to A1") {
  const auto inc = DiagramInclusion::standard(Family::A, 1, 2);
  Engine big({Family::A, 2});
  Engine small({Family::A, 1});

  const Pointed frozen = freeze(inc, big.chi_qt(big.y(1, 0)).chi);
  TorusElement expected(key_of(inc.small));
  expected.add_term(small.y(1, 0), HalfT::one());
  expected.add_term(Monomial::y(key_of(inc.small), 1, 2, -1), HalfT::one());
  CHECK(frozen.body() == expected);
  CHECK(frozen.body() == small.chi_qt(small.y(1, 0)).chi.body());
}

TEST_CASE("freezing a bare monomial is restriction") {
  const auto inc = DiagramInclusion::standard(Family::C, 2, 3);
  const Monomial m = from_factors(key_of(inc.big), {{1, 0, 1}, {3, 2, 1}});
  const Pointed y(inc.big, m, TorusElement::monomial(m));
  const Pointed frozen = freeze(inc, y);
  CHECK(frozen.top() == res_monomial(inc, m));
  CHECK(frozen.body() == TorusElement::monomial(res_monomial(inc, m)));
}

TEST_CASE("freezing F_t across C2 in C3") {
  const auto inc = DiagramInclusion::standard(Family::C, 2, 3);
  Engine big({Family::C, 3});
  Engine small({Family::C, 2});
  const Pointed frozen = freeze(inc, big.f_t(big.y(1, 0)));
  CHECK(frozen.body() == small.f_t(small.y(1, 0)).body());
}

TEST_CASE("freezing a foreign-node fundamental collapses to 1") {
  // Embedded-node fundamentals freeze to small fundamentals; the others
  // freeze to the trivial pointed element.
  const auto inc = DiagramInclusion::standard(Family::A, 1, 2);
  Engine big({Family::A, 2});
  const Pointed frozen = freeze(inc, big.f_t(big.y(2, 0)));
  CHECK(frozen.top() == Monomial::one(key_of(inc.small)));
  CHECK(frozen.body() == TorusElement::monomial(Monomial::one(key_of(inc.small))));

  const auto incA = DiagramInclusion::standard(Family::A, 2, 4);
  Engine bigA({Family::A, 4});
  for (int i = 3; i <= 4; ++i) {
    const Pointed f = freeze(incA, bigA.f_t(bigA.y(i, 1)));
    CHECK(f.body() == TorusElement::monomial(Monomial::one(key_of(incA.small))));
  }
}

TEST_CASE("freezing drops foreign-node factors of the highest weight") {
  const auto inc = DiagramInclusion::standard(Family::B, 2, 3);
  Engine big({Family::B, 3});
  Engine small({Family::B, 2});
  const Monomial mt = from_factors(key_of(inc.big), {{3, 0, 1}, {1, 1, 1}});
  const Pointed frozen = freeze(inc, big.chi_qt(mt).chi);
  CHECK(frozen.top() == small.y(1, 1));
  CHECK(frozen.body() == small.chi_qt(small.y(1, 1)).chi.body());
}

TEST_CASE("normalized product compatibility of freezing") {
  const auto inc = DiagramInclusion::standard(Family::A, 1, 3);
  Engine big({Family::A, 3});
  Engine small({Family::A, 1});
  GammaTable g_small(small.cartan());

  // Bare monomials reduce to the restriction lemma.
  const Monomial b1 = from_factors(key_of(inc.big), {{1, 0, 1}, {3, 1, 1}});
  const Monomial b2 = from_factors(key_of(inc.big), {{2, 2, 1}});
  CHECK(check_lemma_frz(inc, g_small, big.gamma(),
                        Pointed(inc.big, b1, TorusElement::monomial(b1)),
                        Pointed(inc.big, b2, TorusElement::monomial(b2))));

  // Fundamental characters.
  CHECK(check_lemma_frz(inc, g_small, big.gamma(), big.f_t(big.y(1, 0)), big.f_t(big.y(1, 2))));
  CHECK(check_lemma_frz(inc, g_small, big.gamma(), big.f_t(big.y(2, 1)), big.f_t(big.y(1, 0))));

  const auto inc2 = DiagramInclusion::standard(Family::A, 1, 2);
  Engine a2({Family::A, 2});
  GammaTable g1(cartan_data({Family::A, 1}));
  CHECK(check_lemma_frz(inc2, g1, a2.gamma(), a2.f_t(a2.y(1, 0)), a2.f_t(a2.y(2, 3))));
}

TEST_CASE("freezing commutes with evaluation and with bar") {
  std::mt19937_64 rng(73);
  const auto inc = DiagramInclusion::standard(Family::C, 2, 3);
  Engine big({Family::C, 3});
  for (int k = 0; k < 5; ++k) {
    const Monomial m = qtest::random_dominant(rng, big.cartan(), 2, 0, 3);
    const Pointed chi = big.chi_qt(m).chi;

    const Pointed lhs = freeze(inc, Pointed(big.cartan(), chi.top(), chi.body().ev_t1()));
    CHECK(lhs.body() == freeze(inc, chi).body().ev_t1());

    const Pointed barred(big.cartan(), chi.top(), chi.body().bar());
    CHECK(freeze(inc, barred).body() == freeze(inc, chi).body().bar());
  }
}

TEST_CASE("freezing simple characters matches the small-rank computation") {
  std::mt19937_64 rng(79);
  const auto inc = DiagramInclusion::standard(Family::B, 2, 3);
  Engine big({Family::B, 3});
  Engine small({Family::B, 2});
  for (int k = 0; k < 4; ++k) {
    const Monomial mt = qtest::random_dominant(rng, big.cartan(), 2, 0, 3);
    const Monomial m = res_monomial(inc, mt);

    CHECK(freeze(inc, big.chi_qt(mt).chi).body() == small.chi_qt(m).chi.body());
    CHECK(freeze(inc, big.e_t(mt)).body() == small.e_t(m).body());
    CHECK(freeze(inc, big.f_t(mt)).body() == small.f_t(m).body());

    // t = 1 side through the classical evaluation.
    const Pointed ev_big(big.cartan(), mt, big.chi_q(mt));
    CHECK(freeze(inc, ev_big).body() == TorusElement(small.chi_q(m)));
  }
}

TEST_SUITE_END();
