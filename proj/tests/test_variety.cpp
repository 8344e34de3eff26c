#include <doctest.h>

#include "osc/variety.hpp"

using namespace osc;

namespace {

const Scalar I = Scalar::i();

// n x k matrix from row-major Lagrangian values starting at `offset`
DenseMatrix grid(const std::vector<Scalar>& pt, std::size_t rows, std::size_t k, std::size_t offset) {
  DenseMatrix g = zeros(rows, k);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t a = 0; a < k; ++a) g(i, a) = pt[offset + i * k + a];
  return g;
}

std::vector<Scalar> values(std::initializer_list<long> xs) {
  std::vector<Scalar> v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

DenseMatrix upper(const DenseMatrix& c, std::size_t rows, std::size_t cols) {
  DenseMatrix m = zeros(rows + cols, rows + cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, rows + j) = c(i, j);
  return m;
}

}  // namespace

TEST_CASE("mu_C on a single Fock coordinate") {
  auto s = build_scheme(SchemeId::SpFock, 1, 0, 1);
  DenseMatrix expect = zeros(2, 2);
  expect(0, 1) = I * Scalar(mpq_class(1, 2));
  CHECK(mu_c_on_lagrangian(s, {Scalar(1)}) == expect);
  CHECK(is_zero(mu_c_on_lagrangian(s, {Scalar(0)})));
  CHECK_THROWS_AS(mu_c_on_lagrangian(s, {}), UsageError);
}

TEST_CASE("closed forms of C") {
  Scalar h = I * Scalar(mpq_class(1, 2));
  SUBCASE("sp fock: (i/2) z z^T") {
    auto s = build_scheme(SchemeId::SpFock, 2, 0, 2);
    auto pt = values({1, -2, 3, 5});
    DenseMatrix z = grid(pt, 2, 2, 0);
    CHECK(mu_c_on_lagrangian(s, pt) == upper(h * (z * transpose(z)), 2, 2));
  }
  SUBCASE("sp schrodinger: x x^T") {
    auto s = build_scheme(SchemeId::SpSchrodinger, 3, 0, 1);
    auto pt = values({2, -1, 4});
    DenseMatrix x = grid(pt, 3, 1, 0);
    CHECK(mu_c_on_lagrangian(s, pt) == upper(x * transpose(x), 3, 3));
  }
  SUBCASE("u mixed: (i/2) z w^T") {
    auto s = build_scheme(SchemeId::UpqMixed, 2, 1, 2);
    auto pt = values({1, 2, 3, 4, -1, 7});
    DenseMatrix z = grid(pt, 2, 2, 0), w = grid(pt, 1, 2, 4);
    CHECK(mu_c_on_lagrangian(s, pt) == upper(h * (z * transpose(w)), 2, 1));
  }
  SUBCASE("o* mixed: (i/2)(z w^T - w z^T)") {
    auto s = build_scheme(SchemeId::OStarMixed, 3, 0, 1);
    auto pt = values({1, 0, 2, -3, 1, 1});
    DenseMatrix z = grid(pt, 3, 1, 0), w = grid(pt, 3, 1, 3);
    CHECK(mu_c_on_lagrangian(s, pt) == upper(h * (z * transpose(w) - w * transpose(z)), 3, 3));
  }
}

TEST_CASE("holomorphic schemes restrict to zero symbolically") {
  for (auto id : {SchemeId::UpqHolomorphic, SchemeId::OStarHolomorphic}) {
    auto s = build_scheme(id, 2, 2, 2);
    auto mu = restricted_moment_map(s);
    for (auto& e : mu.data()) CHECK(e.is_zero());
  }
}

TEST_CASE("orbit membership") {
  auto sp = build_model(ModelCase::SpFock, 2, 0, 1);
  auto zero = check_orbit_membership(sp, zeros(4, 4));
  CHECK(zero.block_ok);
  CHECK(zero.symmetry_ok);
  CHECK(zero.rank == 0);
  CHECK(zero.rank_ok);
  CHECK(zero.square_zero);

  DenseMatrix c = zeros(2, 2);
  c(0, 0) = Scalar(1), c(0, 1) = Scalar(2), c(1, 0) = Scalar(2), c(1, 1) = Scalar(3);
  auto full = check_orbit_membership(sp, upper(c, 2, 2));
  CHECK(full.block_ok);
  CHECK(full.rank == 2);
  CHECK_FALSE(full.rank_ok);  // k = 1

  c(1, 0) = Scalar(5);
  CHECK_FALSE(check_orbit_membership(sp, upper(c, 2, 2)).symmetry_ok);
  DenseMatrix low = zeros(4, 4);
  low(3, 0) = Scalar(1);
  auto l = check_orbit_membership(sp, low);
  CHECK_FALSE(l.block_ok);

  auto o = build_model(ModelCase::OStarComplex, 2, 0, 1);
  DenseMatrix a = zeros(2, 2);
  a(0, 1) = Scalar(3), a(1, 0) = Scalar(-3);
  auto oc = check_orbit_membership(o, upper(a, 2, 2));
  CHECK(oc.symmetry_ok);
  CHECK(oc.rank == 2);
  CHECK(oc.orbit == 1);
  CHECK(oc.rank_ok);
}

TEST_CASE("generic rank experiments") {
  struct Case {
    SchemeId id;
    std::size_t a, b, k, expect;
  };
  for (auto c : std::vector<Case>{{SchemeId::UpqMixed, 2, 1, 1, 1},
                                  {SchemeId::SpFock, 2, 0, 3, 2},
                                  {SchemeId::SpSchrodinger, 3, 0, 2, 2},
                                  {SchemeId::OStarMixed, 3, 0, 2, 1},
                                  {SchemeId::OStarMixed, 2, 0, 1, 1},
                                  {SchemeId::UpqMixed, 2, 2, 2, 2},
                                  {SchemeId::SpFock, 2, 0, 0, 0}}) {
    OrbitCheckConfig cfg;
    cfg.scheme = c.id, cfg.a = c.a, cfg.b = c.b, cfg.k = c.k, cfg.samples = 50, cfg.seed = 7;
    auto rep = generic_rank_experiment(cfg);
    INFO(scheme_name(c.id), " k=", c.k);
    CHECK(rep.ok());
    CHECK(rep.data["m"] == c.expect);
    CHECK(rep.data["max_orbit_index"] == c.expect);
  }
}

TEST_CASE("rank experiment is independent of thread count") {
  OrbitCheckConfig cfg;
  cfg.scheme = SchemeId::SpFock, cfg.a = 3, cfg.k = 2, cfg.samples = 30, cfg.seed = 99;
  auto a = generic_rank_experiment(cfg).to_json();
  setenv("OSC_KIT_THREADS", "1", 1);
  auto b = generic_rank_experiment(cfg).to_json();
  unsetenv("OSC_KIT_THREADS");
  CHECK(a == b);
}

TEST_CASE("config validation") {
  OrbitCheckConfig cfg;
  cfg.samples = 0;
  CHECK_THROWS_AS(generic_rank_experiment(cfg), UsageError);
  cfg.samples = 1;
  cfg.coefficient_bound = 0;
  CHECK_THROWS_AS(generic_rank_experiment(cfg), UsageError);
}
