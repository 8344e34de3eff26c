#include <doctest.h>

#include "gen.hpp"
#include "osc/errors.hpp"
#include "osc/poisson.hpp"

using namespace osc;

namespace {

TablePtr xy1() { return GeneratorTable::make({"x_{1,1}", "y_{1,1}"}); }

}  // namespace

TEST_CASE("scalar examples") {
  Scalar i = Scalar::i();
  CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
  CHECK(Scalar(2).inv() == Scalar(1, 2));
  CHECK((Scalar(3) - Scalar(1, 2) * i).conj() == Scalar(3) + Scalar(1, 2) * i);
  CHECK(i * i == Scalar(-1));
  CHECK_THROWS_AS(Scalar(0).inv(), DomainError);
  CHECK(Scalar(mpq_class(2, 4)).re().get_den() == 2);
  CHECK(Scalar(mpq_class(3, -6)) == Scalar(-1, 2));
}

TEST_CASE("scalar field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    Scalar a = testgen::scalar(rng), b = testgen::scalar(rng), c = testgen::scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == Scalar(0));
    if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("generator table") {
  auto t = GeneratorTable::make(grid_labels("x", 2, 3));
  CHECK(t->size() == 6);
  CHECK(t->label(4) == "x_{2,2}");
  for (std::size_t v = 0; v < t->size(); ++v) CHECK(t->index_of(t->label(v)) == v);
  CHECK_THROWS_AS(GeneratorTable::make({"a", "a"}), UsageError);
  CHECK_THROWS_AS(t->index_of("nope"), UsageError);
}

TEST_CASE("monomial order is lex on dense exponents") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    Monomial a = testgen::monomial(rng, 4, 4), b = testgen::monomial(rng, 4, 4);
    auto da = a.dense(4), db = b.dense(4);
    int want = da == db ? 0 : (da > db ? 1 : -1);
    CHECK(Monomial::compare(a, b) == want);
  }
}

TEST_CASE("poly_mul examples") {
  auto t = xy1();
  Poly x = Poly::variable(t, 0), y = Poly::variable(t, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  Poly f = x * y + Poly(t, Scalar(3));
  CHECK(f * Poly(t, Scalar(1)) == f);
  CHECK((x * y) * (x * y) == Poly::monomial(t, Monomial::from_dense({2, 2})));
  auto other = GeneratorTable::make({"z"});
  CHECK_THROWS_AS(x * Poly::variable(other, 0), UsageError);
  CHECK((x - x).is_zero());
  CHECK((x - x).size() == 0);
}

TEST_CASE("poly ring laws on random samples") {
  auto t = GeneratorTable::make(grid_labels("x", 3, 1));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    Poly a = testgen::poly(rng, t, 3), b = testgen::poly(rng, t, 3), c = testgen::poly(rng, t, 2);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    Poly ab = a * b;
    for (auto& [m, s] : ab.terms()) CHECK(!s.is_zero());
  }
}

TEST_CASE("partial_derivative examples") {
  auto t = GeneratorTable::make({"x_{1,1}", "y_{1,1}", "x_{2,1}"});
  Poly x1 = Poly::variable(t, 0), y1 = Poly::variable(t, 1), x2 = Poly::variable(t, 2);
  CHECK(partial_derivative(x1 * x1 * y1, 0) == Scalar(2) * x1 * y1);
  CHECK(partial_derivative(Poly(t, Scalar(7)), 0).is_zero());
  CHECK(partial_derivative(x1 + x2, 2) == Poly(t, Scalar(1)));
  CHECK_THROWS_AS(partial_derivative(x1, 9), UsageError);
}

TEST_CASE("substitute and evaluate") {
  auto t = xy1();
  Poly x = Poly::variable(t, 0), y = Poly::variable(t, 1);
  Poly f = x * x * y + Scalar(2) * y;
  // swap x and y
  Poly g = substitute(f, {y, x}, t);
  CHECK(g == y * y * x + Scalar(2) * x);
  CHECK(evaluate(f, {Scalar(3), Scalar::i()}) == Scalar(9) * Scalar::i() + Scalar(2) * Scalar::i());
}

TEST_CASE("monomial enumeration") {
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(count_monomials(3, 2) == 6);
  CHECK(count_monomials(9, 6) == 3003);
  CHECK(monomials_of_degree(0, 0).size() == 1);
  auto ms = monomials_of_degree(4, 3);
  for (std::size_t i = 1; i < ms.size(); ++i) CHECK(Monomial::compare(ms[i - 1], ms[i]) > 0);
}

TEST_CASE("poisson_bracket examples") {
  auto t = xy1();
  DenseMatrix p = zeros(2, 2);
  p(0, 1) = Scalar(-1);
  p(1, 0) = Scalar(1);
  PoissonStructure ps(t, p);
  Poly x = Poly::variable(t, 0), y = Poly::variable(t, 1);
  CHECK(poisson_bracket(ps, x, y) == Poly(t, Scalar(-1)));
  Poly f = x * x * y + y;
  CHECK(poisson_bracket(ps, f, f).is_zero());

  auto tz = GeneratorTable::make({"z_{1,1}", "zb_{1,1}"});
  DenseMatrix pz = zeros(2, 2);
  pz(0, 1) = Scalar(mpq_class(0), mpq_class(2));
  pz(1, 0) = -pz(0, 1);
  PoissonStructure psz(tz, pz);
  CHECK(poisson_bracket(psz, Poly::variable(tz, 0), Poly::variable(tz, 1)) ==
        Poly(tz, Scalar(mpq_class(0), mpq_class(2))));

  DenseMatrix bad = zeros(2, 2);
  bad(0, 1) = Scalar(1);
  CHECK_THROWS_AS(PoissonStructure(t, bad), UsageError);
}

TEST_CASE("poisson bracket: antisymmetry, Leibniz, Jacobi on random triples") {
  auto t = GeneratorTable::make({"x1", "x2", "y1", "y2"});
  DenseMatrix p = zeros(4, 4);
  p(0, 2) = Scalar(-1);
  p(2, 0) = Scalar(1);
  p(1, 3) = Scalar(-1);
  p(3, 1) = Scalar(1);
  p(0, 1) = Scalar(mpq_class(0), mpq_class(3));  // any constant antisymmetric tensor is Poisson
  p(1, 0) = -p(0, 1);
  PoissonStructure ps(t, p);
  std::mt19937_64 rng(17);
  for (int k = 0; k < 40; ++k) {
    Poly f = testgen::poly(rng, t, 3), g = testgen::poly(rng, t, 3), h = testgen::poly(rng, t, 3);
    CHECK(poisson_bracket(ps, f, g) == -poisson_bracket(ps, g, f));
    CHECK(poisson_bracket(ps, f, g * h) == poisson_bracket(ps, f, g) * h + g * poisson_bracket(ps, f, h));
    Poly jac = poisson_bracket(ps, f, poisson_bracket(ps, g, h)) + poisson_bracket(ps, g, poisson_bracket(ps, h, f)) +
               poisson_bracket(ps, h, poisson_bracket(ps, f, g));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("dense linear algebra") {
  DenseMatrix a = zeros(3, 3);
  a(0, 0) = Scalar(1);
  a(0, 1) = Scalar(2);
  a(1, 0) = Scalar(3);
  a(1, 1) = Scalar::i();
  a(2, 2) = Scalar(1, 3);
  CHECK(a * inverse(a) == identity(3));
  DenseMatrix s = zeros(2, 3);
  s(0, 0) = Scalar(1);
  s(0, 1) = Scalar(2);
  s(1, 0) = Scalar(2);
  s(1, 1) = Scalar(4);
  CHECK(rank(s) == 1);
  auto ns = nullspace(s);
  CHECK(ns.size() == 2);
  for (auto& v : ns) {
    for (std::size_t r = 0; r < 2; ++r) {
      Scalar acc(0);
      for (std::size_t c = 0; c < 3; ++c) acc += s(r, c) * v[c];
      CHECK(acc.is_zero());
    }
  }
  CHECK_THROWS_AS(inverse(s * transpose(s)), DomainError);
  auto x = solve(a, {Scalar(1), Scalar(2), Scalar(3)});
  REQUIRE(x);
  CHECK((*x)[2] == Scalar(9));
  CHECK_FALSE(solve(s, {Scalar(1), Scalar(1)}));
}
