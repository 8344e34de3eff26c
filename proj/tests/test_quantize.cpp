#include <doctest.h>

#include "osc/quantize.hpp"

using namespace osc;

namespace {

const Scalar I = Scalar::i();

std::size_t gen(const QuantizationScheme& s, const std::string& label) { return s.model.table->index_of(label); }
std::size_t lag(const QuantizationScheme& s, const std::string& label) { return s.lagrangian->index_of(label); }

const BasisElement& find(const LieAlgebraSpec& spec, const std::string& type, std::size_t i, std::size_t j) {
  for (auto& b : spec.basis())
    if (b.type == type && b.i == i && b.j == j) return b;
  FAIL("no basis element");
  throw 0;
}

struct Size {
  SchemeId id;
  std::size_t a, b, k;
};

std::vector<Size> desk_sizes() {
  return {{SchemeId::SpSchrodinger, 1, 0, 1}, {SchemeId::SpSchrodinger, 2, 0, 2}, {SchemeId::SpSchrodinger, 3, 0, 1},
          {SchemeId::SpFock, 1, 0, 2},        {SchemeId::SpFock, 2, 0, 2},        {SchemeId::UpqHolomorphic, 1, 1, 1},
          {SchemeId::UpqHolomorphic, 2, 1, 2}, {SchemeId::UpqMixed, 1, 1, 2},     {SchemeId::UpqMixed, 2, 1, 1},
          {SchemeId::UpqMixed, 1, 2, 2},      {SchemeId::OStarMixed, 1, 0, 1},    {SchemeId::OStarMixed, 2, 0, 2},
          {SchemeId::OStarHolomorphic, 2, 0, 1}, {SchemeId::OStarHolomorphic, 3, 0, 2}};
}

}  // namespace

TEST_CASE("assignment tables") {
  auto s = build_scheme(SchemeId::SpSchrodinger, 1, 0, 1);
  CHECK(s.assignment[gen(s, "y_{1,1}")] == WeylOp::deriv(s.lagrangian, 0) * -I);
  CHECK(s.assignment[gen(s, "x_{1,1}")] == WeylOp::mult(s.lagrangian, 0));

  auto f = build_scheme(SchemeId::SpFock, 2, 0, 1);
  CHECK(f.assignment[gen(f, "zb_{1,1}")] == WeylOp::deriv(f.lagrangian, lag(f, "z_{1,1}")) * Scalar(-2));

  auto o = build_scheme(SchemeId::OStarMixed, 2, 0, 1);
  // z_{n+1} -> -2 d_{w_1}, zb_{n+1} -> w_1
  CHECK(o.assignment[gen(o, "z_{3,1}")] == WeylOp::deriv(o.lagrangian, lag(o, "w_{1,1}")) * Scalar(-2));
  CHECK(o.assignment[gen(o, "zb_{3,1}")] == WeylOp::mult(o.lagrangian, lag(o, "w_{1,1}")));
  CHECK(o.assignment[gen(o, "zb_{2,1}")] == WeylOp::deriv(o.lagrangian, lag(o, "z_{2,1}")) * Scalar(-2));

  auto h = build_scheme(SchemeId::UpqHolomorphic, 1, 1, 1);
  CHECK(h.assignment[gen(h, "zb_{2,1}")] == WeylOp::deriv(h.lagrangian, 1) * Scalar(2));
  CHECK(h.lagrangian->size() == 2);

  auto mx = build_scheme(SchemeId::UpqMixed, 2, 1, 2);
  CHECK(mx.lagrangian->labels() ==
        std::vector<std::string>{"z_{1,1}", "z_{1,2}", "z_{2,1}", "z_{2,2}", "w_{1,1}", "w_{1,2}"});

  // every classical generator is assigned
  for (auto id : all_schemes()) {
    auto q = build_scheme(id, 2, 1, 2);
    for (auto& op : q.assignment) CHECK_FALSE(op.is_zero());
  }
}

TEST_CASE("mu_hat closed forms at the smallest sizes") {
  auto s = build_scheme(SchemeId::SpSchrodinger, 1, 0, 1);
  OpMatrix mu = quantized_moment_map(s);
  auto x = WeylOp::mult(s.lagrangian, 0), d = WeylOp::deriv(s.lagrangian, 0);
  CHECK(mu(0, 0) == x * d * I);
  CHECK(mu(0, 1) == x * x);
  CHECK(mu(1, 0) == d * d);
  CHECK(mu(1, 1) == d * x * -I);
  CHECK(mu(1, 1) == (x * d + WeylOp(s.lagrangian, Scalar(1))) * -I);

  auto h = build_scheme(SchemeId::UpqHolomorphic, 2, 1, 1);
  OpMatrix mh = quantized_moment_map(h);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      CHECK(mh(r, c) == WeylOp::mult(h.lagrangian, r) * WeylOp::deriv(h.lagrangian, c) * I);

  auto o = build_scheme(SchemeId::OStarMixed, 2, 0, 1);
  OpMatrix mo = quantized_moment_map(o);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      auto z = [&](std::size_t v) { return WeylOp::mult(o.lagrangian, v); };
      auto dz = [&](std::size_t v) { return WeylOp::deriv(o.lagrangian, v); };
      CHECK(mo(r, c) == (z(r) * dz(c) + z(2 + r) * dz(2 + c)) * I);
    }
}

TEST_CASE("pi examples") {
  auto s = build_scheme(SchemeId::SpSchrodinger, 2, 0, 1);
  auto spec = model_spec(s.model);
  auto x = [&](std::size_t v) { return WeylOp::mult(s.lagrangian, v); };
  auto d = [&](std::size_t v) { return WeylOp::deriv(s.lagrangian, v); };
  CHECK(pi(s, spec, find(spec, "X+", 1, 2).m) == d(0) * d(1) * I);
  CHECK(pi(s, spec, find(spec, "X0", 1, 1).m) == -(x(0) * d(0) + WeylOp(s.lagrangian, Scalar(1, 2))));
}

TEST_CASE("pi examples across schemes") {
  auto h = build_scheme(SchemeId::UpqHolomorphic, 1, 1, 1);
  auto hs = model_spec(h.model);
  CHECK(pi(h, hs, find(hs, "E", 1, 2).m) == -(WeylOp::mult(h.lagrangian, 1) * WeylOp::deriv(h.lagrangian, 0)));

  auto o = build_scheme(SchemeId::OStarMixed, 1, 0, 1);
  auto os = model_spec(o.model);
  auto z = WeylOp::mult(o.lagrangian, 0), w = WeylOp::mult(o.lagrangian, 1);
  auto dz = WeylOp::deriv(o.lagrangian, 0), dw = WeylOp::deriv(o.lagrangian, 1);
  CHECK(pi(o, os, find(os, "X0", 1, 1).m) == -(z * dz + w * dw + WeylOp(o.lagrangian, Scalar(1))));

  // k copies: the X0_{i,i} constant is k, not k^2
  auto o3 = build_scheme(SchemeId::OStarMixed, 1, 0, 3);
  auto os3 = model_spec(o3.model);
  WeylOp p = pi(o3, os3, find(os3, "X0", 1, 1).m);
  CHECK(p.constant_term() == Scalar(-3));
}

TEST_CASE("CCR for every scheme") {
  for (auto id : all_schemes())
    for (std::size_t k = 1; k <= 2; ++k) {
      auto s = build_scheme(id, 2, 1, k);
      CAPTURE(scheme_name(id));
      auto r = verify_ccr(s);
      CHECK(r.ok());
      CHECK(r.checks[0].pairs_checked == s.model.table->size() * s.model.table->size());
    }
  // explicit values
  auto s = build_scheme(SchemeId::SpSchrodinger, 1, 0, 1);
  CHECK(commutator(s.assignment[0], s.assignment[1]) == WeylOp(s.lagrangian, I));
  auto m = build_scheme(SchemeId::UpqMixed, 1, 1, 1);
  // [zb_2^, z_2^] = [w, -2 d_w] = 2
  CHECK(commutator(m.assignment[gen(m, "zb_{2,1}")], m.assignment[gen(m, "z_{2,1}")]) ==
        WeylOp(m.lagrangian, Scalar(2)));
  CHECK(commutator(m.assignment[gen(m, "z_{1,1}")], m.assignment[gen(m, "zb_{1,1}")]) ==
        WeylOp(m.lagrangian, Scalar(2)));
}

TEST_CASE("quantum homomorphism at desk sizes") {
  for (auto sz : desk_sizes()) {
    auto s = build_scheme(sz.id, sz.a, sz.b, sz.k);
    auto spec = model_spec(s.model);
    CAPTURE(scheme_name(sz.id));
    CAPTURE(sz.a);
    CAPTURE(sz.k);
    auto r = verify_quantum_homomorphism(s, spec);
    CHECK(r.ok());
    CHECK(r.checks[0].pairs_checked == spec.dim() * spec.dim());
  }
}

TEST_CASE("degree shifts") {
  for (auto sz : desk_sizes()) {
    auto s = build_scheme(sz.id, sz.a, sz.b, sz.k);
    CAPTURE(scheme_name(sz.id));
    CHECK(verify_degree_shifts(s, model_spec(s.model)).ok());
  }
}

TEST_CASE("formula conformance and flagged deviations") {
  for (auto sz : desk_sizes()) {
    auto s = build_scheme(sz.id, sz.a, sz.b, sz.k);
    auto spec = model_spec(s.model);
    CAPTURE(scheme_name(sz.id));
    CAPTURE(sz.a);
    CAPTURE(sz.k);
    auto r = verify_formula_conformance(s, spec);
    CHECK(r.ok());
    for (auto& f : r.checks[0].failures) MESSAGE(f);
  }
  SUBCASE("o* mixed k = 1 has no deviation, k = 2 flags the constant") {
    auto s1 = build_scheme(SchemeId::OStarMixed, 2, 0, 1);
    CHECK(verify_formula_conformance(s1, model_spec(s1.model)).data["deviations"].empty());
    auto s2 = build_scheme(SchemeId::OStarMixed, 2, 0, 2);
    auto d = verify_formula_conformance(s2, model_spec(s2.model)).data["deviations"];
    CHECK(d.size() == 2);  // X0_{1,1}, X0_{2,2}
  }
  SUBCASE("schrodinger flags only the off-diagonal X0 entries") {
    auto s = build_scheme(SchemeId::SpSchrodinger, 2, 0, 1);
    auto d = verify_formula_conformance(s, model_spec(s.model)).data["deviations"];
    CHECK(d.size() == 2);
  }
  SUBCASE("fock and u tables match without deviations") {
    for (auto id : {SchemeId::SpFock, SchemeId::UpqHolomorphic, SchemeId::UpqMixed}) {
      auto s = build_scheme(id, 2, 1, 2);
      CHECK(verify_formula_conformance(s, model_spec(s.model)).data["deviations"].empty());
    }
  }
  SUBCASE("o holomorphic flags every entry but X0_{i,i} of the Cartan sign") {
    auto s = build_scheme(SchemeId::OStarHolomorphic, 2, 0, 1);
    auto spec = model_spec(s.model);
    auto d = verify_formula_conformance(s, spec).data["deviations"];
    CHECK(d.size() == spec.dim());
  }
}

TEST_CASE("reference Schrodinger X0 entry breaks the bracket") {
  // With the reference transposed indices, [pi(X0_{1,2}), pi(X-_{1,1})] would vanish,
  // but [X0_{1,2}, X-_{1,1}] = -2 X-_{1,2} and pi(X-_{1,2}) != 0.
  auto s = build_scheme(SchemeId::SpSchrodinger, 2, 0, 1);
  auto spec = model_spec(s.model);
  auto table = closed_form_table(s, spec);
  std::size_t i012 = 0, im11 = 0, im12 = 0;
  for (std::size_t a = 0; a < spec.basis().size(); ++a) {
    auto l = spec.basis()[a].label();
    if (l == "X0_{1,2}") i012 = a;
    if (l == "X-_{1,1}") im11 = a;
    if (l == "X-_{1,2}") im12 = a;
  }
  CHECK(bracket(spec.basis()[i012].m, spec.basis()[im11].m) == Scalar(-2) * spec.basis()[im12].m);
  CHECK(commutator(table[i012].reference, table[im11].reference).is_zero());
  CHECK_FALSE(table[im12].reference.is_zero());
  CHECK(commutator(*table[i012].corrected, table[im11].reference) == table[im12].reference * Scalar(-2));
}

TEST_CASE("o* mixed: column and block expressions agree") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 1; k <= 2; ++k) {
      auto s = build_scheme(SchemeId::OStarMixed, n, 0, k);
      CHECK(quantized_moment_map(s) == quantized_block_moment_map(s));
    }
  CHECK_THROWS_AS(quantized_block_moment_map(build_scheme(SchemeId::UpqMixed, 1, 1, 1)), UsageError);
}
