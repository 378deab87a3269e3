#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gralg/linalg.hpp"
#include "gralg/module.hpp"

using namespace gralg;

namespace {

Polynomial P(const PolyRing& R, std::vector<std::pair<coeff_t, std::vector<int>>> ts) {
  std::vector<Term> terms;
  for (auto& [c, e] : ts) terms.push_back({c, Monomial(std::move(e))});
  return Polynomial::make(R, std::move(terms));
}

FreeVector V(const PolyRing& R, const GradedFreeModule& F,
             std::vector<std::tuple<coeff_t, std::vector<int>, int>> ts) {
  std::vector<ModTerm> terms;
  for (auto& [c, e, p] : ts) terms.push_back({c, Monomial(std::move(e)), p});
  return FreeVector::make(R, F, std::move(terms));
}

} // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField K(32003);
  std::mt19937 rng(42);
  std::uniform_int_distribution<coeff_t> pick(0, 32002);
  for (int n = 0; n < 1000; ++n) {
    coeff_t a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(K.add(a, b) == K.add(b, a));
    CHECK(K.mul(a, K.mul(b, c)) == K.mul(K.mul(a, b), c));
    CHECK(K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c)));
    CHECK(K.add(a, K.neg(a)) == 0);
    CHECK(K.sub(a, b) == K.add(a, K.neg(b)));
    if (a % 32003 != 0) {
      CHECK(K.mul(a, K.inv(a)) == 1);
      CHECK(K.mul(K.divide(b, a), a) == K.reduce(b));
    }
  }
}

TEST_CASE("prime field validation") {
  CHECK_THROWS(PrimeField(1));
  CHECK_THROWS(PrimeField(2));
  CHECK_THROWS(PrimeField(4));
  CHECK_THROWS(PrimeField(32001)); // 3 * 10667
  CHECK_THROWS(PrimeField(2147483648LL));
  CHECK(PrimeField(3).p() == 3);
  CHECK(PrimeField(2147483647).p() == 2147483647); // largest admissible prime
}

TEST_CASE("small characteristic coefficient collapse") {
  PrimeField K(5);
  CHECK(K.mul(3, 2) == 1); // 3 * 2x = x over F_5
  PolyRing R(K, {"x"});
  Polynomial f = scale(R, 3, P(R, {{2, {1}}}));
  CHECK(f == P(R, {{1, {1}}}));
}

TEST_CASE("monomial operations") {
  Monomial xy({1, 1}), x2({2, 0}), y2({0, 2}), one = Monomial::one(2);
  CHECK(xy.degree() == 2);
  CHECK((xy * xy) == Monomial({2, 2}));
  CHECK(x2.divides(Monomial({3, 1})));
  CHECK_FALSE(x2.divides(xy));
  CHECK(Monomial::quotient(Monomial({3, 1}), x2) == Monomial({1, 1}));
  CHECK_THROWS(Monomial::quotient(xy, x2));
  CHECK(Monomial::lcm(x2, xy) == Monomial({2, 1}));
  CHECK(Monomial::coprime(x2, y2));
  CHECK_FALSE(Monomial::coprime(x2, xy));
  CHECK(one.is_one());
  CHECK(Monomial::variable(2, 1) == Monomial({0, 1}));
  CHECK(Monomial::lex_greater(xy, y2));
  CHECK_THROWS(Monomial({1, -1}));
}

TEST_CASE("graded reverse lex order") {
  PolyRing R(PrimeField(32003), {"x", "y", "z"});
  Monomial x2({2, 0, 0}), xy({1, 1, 0}), y2({0, 2, 0}), xz({1, 0, 1}),
      yz({0, 1, 1}), z2({0, 0, 2});
  // degree 2 chain in three variables
  CHECK(R.greater(x2, xy));
  CHECK(R.greater(xy, y2));
  CHECK(R.greater(y2, xz));
  CHECK(R.greater(xz, yz));
  CHECK(R.greater(yz, z2));
  // degree dominates
  CHECK(R.greater(z2, Monomial({1, 0, 0})));
  CHECK(R.compare(xy, xy) == Cmp::equal);

  PolyRing R2(PrimeField(32003), {"x", "y"});
  CHECK(R2.greater(Monomial({1, 1}), Monomial({0, 2}))); // xy > y^2
}

TEST_CASE("weights and elimination blocks") {
  PolyRing R(PrimeField(32003), {"t", "x", "y"}, {1, 1, 1}, 1);
  // t-block dominates regardless of total degree
  CHECK(R.greater(Monomial({1, 0, 0}), Monomial({0, 5, 0})));
  CHECK(R.greater(Monomial({0, 0, 3}), Monomial({0, 2, 0})));

  PolyRing W(PrimeField(32003), {"x", "y"}, {1, 2}, 0);
  CHECK(W.weighted_degree(Monomial({1, 1})) == 3);
  Polynomial f = P(W, {{1, {2, 0}}, {32002, {0, 1}}}); // x^2 - y, weights (1,2)
  CHECK(homogeneous_degree(W, f) == 2);
}

TEST_CASE("polynomial arithmetic") {
  PolyRing R(PrimeField(32003), {"x", "y"});
  Polynomial x = poly_variable(R, 0), y = poly_variable(R, 1);
  Polynomial s = add(R, x, y);
  CHECK(multiply(R, s, s) == P(R, {{1, {2, 0}}, {2, {1, 1}}, {1, {0, 2}}}));
  CHECK(multiply(R, s, sub(R, x, y)) == P(R, {{1, {2, 0}}, {32002, {0, 2}}}));
  CHECK(sub(R, s, s).is_zero());
  CHECK(add(R, s, negate(R, s)).is_zero());
  CHECK(scale(R, 0, s).is_zero());
  CHECK(term_mul(R, 2, Monomial({1, 0}), y) == P(R, {{2, {1, 1}}}));
  CHECK(homogeneous_degree(R, multiply(R, s, s)) == 2);
  CHECK_THROWS(homogeneous_degree(R, add(R, x, multiply(R, x, x))));
  CHECK(!homogeneous_degree(R, poly_zero()).has_value());
  CHECK(is_homogeneous(R, poly_zero()));
}

TEST_CASE("polynomial printing") {
  PolyRing R(PrimeField(32003), {"x", "y"});
  CHECK(to_string(R, P(R, {{1, {2, 0}}, {2, {1, 1}}, {1, {0, 2}}})) ==
        "x^2 + 2*x*y + y^2");
  CHECK(to_string(R, P(R, {{1, {2, 0}}, {32002, {0, 2}}})) == "x^2 - y^2");
  CHECK(to_string(R, P(R, {{3, {1, 1}}})) == "3*x*y");
  CHECK(to_string(R, poly_zero()) == "0");
  CHECK(to_string(R, poly_constant(R, 7)) == "7");
  CHECK(to_string(R, Monomial({1, 2})) == "x*y^2");
}

TEST_CASE("module term order with shifts") {
  PolyRing R(PrimeField(32003), {"x", "y"});
  GradedFreeModule F{{0, 1}, 0};
  ModTerm a{1, Monomial({2, 0}), 0}; // internal degree 2
  ModTerm b{1, Monomial({1, 0}), 1}; // internal degree 2
  ModTerm c{1, Monomial({1, 0}), 0}; // internal degree 1
  CHECK(internal_degree(R, F, a) == 2);
  CHECK(internal_degree(R, F, b) == 2);
  CHECK(compare(R, F, a, b) == Cmp::greater); // degrees tie, x^2 > x
  CHECK(compare(R, F, b, c) == Cmp::greater); // higher internal degree

  GradedFreeModule F2{{0, 0}, 0};
  ModTerm d{1, Monomial({1, 0}), 0};
  ModTerm e{1, Monomial({1, 0}), 1};
  CHECK(compare(R, F2, d, e) == Cmp::greater); // lower position wins

  GradedFreeModule G{{0, 0}, 1};
  ModTerm f{1, Monomial::one(2), 0};
  ModTerm g{1, Monomial({5, 0}), 1};
  CHECK(compare(R, G, f, g) == Cmp::greater); // dominant block first
}

TEST_CASE("free vector arithmetic") {
  PolyRing R(PrimeField(32003), {"x", "y"});
  GradedFreeModule F{{0, 1}, 0};
  FreeVector v = V(R, F, {{1, {2, 0}, 0}, {1, {1, 0}, 1}});
  CHECK(is_homogeneous(R, F, v));
  CHECK(internal_degree(R, F, v) == 2);
  CHECK(v.leading_term().pos == 0);
  CHECK(add(R, F, v, negate(R, v)).is_zero());

  FreeVector w = term_mul(R, F, 1, Monomial({0, 1}), v);
  CHECK(internal_degree(R, F, w) == 3);
  CHECK(component(w, 0, R) == P(R, {{1, {2, 1}}}));
  CHECK(component(w, 1, R) == P(R, {{1, {1, 1}}}));

  FreeVector mixed = V(R, F, {{1, {1, 0}, 0}, {1, {1, 0}, 1}});
  CHECK_FALSE(is_homogeneous(R, F, mixed));
  CHECK_THROWS(internal_degree(R, F, mixed));

  CHECK(unit_vector(R, F, 1, poly_variable(R, 0)) == V(R, F, {{1, {1, 0}, 1}}));
}

TEST_CASE("row space") {
  PrimeField K(7);
  RowSpace rs(K, 3);
  CHECK(rs.insert({1, 2, 3}));
  CHECK_FALSE(rs.insert({2, 4, 6})); // dependent
  CHECK(rs.insert({0, 1, 1}));
  CHECK(rs.rank() == 2);
  CHECK(rs.contains({1, 3, 4}));
  CHECK_FALSE(rs.contains({0, 0, 1}));
  CHECK_FALSE(rs.insert({0, 0, 0}));
}

TEST_CASE("nullspace") {
  PrimeField K(7);
  auto ker = nullspace(K, {{1, 2, 3}, {2, 4, 6}}, 3);
  REQUIRE(ker.size() == 2);
  for (const auto& x : ker) {
    CHECK(K.add(K.add(x[0], K.mul(2, x[1])), K.mul(3, x[2])) == 0);
  }
  // canonical: one unit entry per free column, ascending
  CHECK(ker[0][1] == 1);
  CHECK(ker[1][2] == 1);

  CHECK(nullspace(K, {{1, 0}, {0, 1}}, 2).empty());
  CHECK(nullspace(K, {}, 2).size() == 2); // zero map
}
