#include <doctest.h>

#include <map>
#include <vector>

#include "gen.hpp"
#include "oracles.hpp"
#include "osc/errors.hpp"

using namespace osc;
using namespace oracle;

TEST_CASE("weyl_mul examples") {
  auto t = GeneratorTable::make({"x"});
  WeylOp x = WeylOp::mult(t, 0), d = WeylOp::deriv(t, 0), one(t, Scalar(1));
  CHECK(d * x == x * d + one);
  WeylOp lhs = d * d * x * x;
  WeylOp want = WeylOp::term(t, Monomial::var(0, 2), Monomial::var(0, 2)) +
                Scalar(4) * WeylOp::term(t, Monomial::var(0), Monomial::var(0)) + Scalar(2) * one;
  CHECK(lhs == want);
  Word ddxx{{true, 0}, {true, 0}, {false, 0}, {false, 0}};
  CHECK(lhs == from_words(t, rewrite_to_normal(ddxx)));
  WeylOp a = x * d + Scalar(3) * d * d;
  CHECK(a * one == a);
  auto other = GeneratorTable::make({"y"});
  CHECK_THROWS_AS(x * WeylOp::mult(other, 0), UsageError);
}

TEST_CASE("weyl_mul agrees with brute-force rewrite oracle (2 vars, exps <= 3)") {
  auto t = GeneratorTable::make({"u", "v"});
  std::vector<std::vector<unsigned>> exps;
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= 3; ++b) exps.push_back({a, b});
  long checked = 0;
  for (auto& a1 : exps)
    for (auto& b1 : exps)
      for (auto& a2 : exps)
        for (auto& b2 : exps) {
          WeylOp lhs = WeylOp::term(t, Monomial::from_dense(a1), Monomial::from_dense(b1)) *
                       WeylOp::term(t, Monomial::from_dense(a2), Monomial::from_dense(b2));
          Word w = word_of(a1, b1), w2 = word_of(a2, b2);
          w.insert(w.end(), w2.begin(), w2.end());
          WeylOp rhs = from_words(t, rewrite_to_normal(w));
          if (lhs != rhs) FAIL_CHECK(lhs.str() << " vs " << rhs.str());
          ++checked;
        }
  CHECK(checked == 65536);
}

TEST_CASE("CCR on generators") {
  auto t = GeneratorTable::make(grid_labels("x", 2, 2));
  for (std::size_t a = 0; a < t->size(); ++a)
    for (std::size_t b = 0; b < t->size(); ++b) {
      CHECK(commutator(WeylOp::deriv(t, a), WeylOp::mult(t, b)) == WeylOp(t, Scalar(a == b ? 1 : 0)));
      CHECK(commutator(WeylOp::mult(t, a), WeylOp::mult(t, b)).is_zero());
      CHECK(commutator(WeylOp::deriv(t, a), WeylOp::deriv(t, b)).is_zero());
    }
}

TEST_CASE("commutator examples") {
  auto t = GeneratorTable::make({"x_{1,1}"});
  Scalar i = Scalar::i();
  WeylOp xh = WeylOp::mult(t, 0), yh = -i * WeylOp::deriv(t, 0);
  CHECK(commutator(xh, yh) == WeylOp(t, i));
  for (int eps : {1, -1}) {
    WeylOp zh = WeylOp::mult(t, 0), zbh = Scalar(-2 * eps) * WeylOp::deriv(t, 0);
    CHECK(commutator(zh, zbh) == WeylOp(t, Scalar(2 * eps)));
  }
  WeylOp a = xh * xh * yh + yh;
  CHECK(commutator(a, a).is_zero());
}

TEST_CASE("apply examples") {
  auto t = GeneratorTable::make({"x"});
  Poly x = Poly::variable(t, 0);
  WeylOp euler = WeylOp::mult(t, 0) * WeylOp::deriv(t, 0);
  CHECK(apply(euler, pow(x, 3)) == Scalar(3) * pow(x, 3));
  CHECK(apply(WeylOp::deriv(t, 0) * WeylOp::deriv(t, 0), x * x) == Poly(t, Scalar(2)));
  CHECK(apply(WeylOp::mult(t, 0) * WeylOp::mult(t, 0), Poly(t, Scalar(1))) == x * x);
}

TEST_CASE("total_degree_shifts examples") {
  auto t = GeneratorTable::make({"z1", "z2", "w1"});
  CHECK(total_degree_shifts(WeylOp::mult(t, 0) * WeylOp::deriv(t, 1)) == std::set<int>{0});
  CHECK(total_degree_shifts(WeylOp::deriv(t, 0) * WeylOp::deriv(t, 2)) == std::set<int>{-2});
  auto tx = GeneratorTable::make({"x"});
  WeylOp op = WeylOp::mult(tx, 0) * WeylOp::mult(tx, 0) + WeylOp::deriv(tx, 0) * WeylOp::deriv(tx, 0);
  CHECK(total_degree_shifts(op) == std::set<int>{-2, 2});
  CHECK(total_degree_shifts(WeylOp(tx)).empty());
  CHECK(op.filtration_degree() == 2);
}

TEST_CASE("associativity and representation fidelity on random instances") {
  auto t = GeneratorTable::make({"a", "b", "c"});
  std::mt19937_64 rng(23);
  for (int k = 0; k < 60; ++k) {
    WeylOp a = testgen::weyl(rng, t, 2), b = testgen::weyl(rng, t, 2), c = testgen::weyl(rng, t, 2);
    CHECK((a * b) * c == a * (b * c));
    Poly f = testgen::poly(rng, t, 4);
    CHECK(apply(a * b, f) == apply(a, apply(b, f)));
    CHECK(apply(a + b, f) == apply(a, f) + apply(b, f));
  }
}
