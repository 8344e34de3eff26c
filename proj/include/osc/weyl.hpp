#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "osc/matrix.hpp"
#include "osc/poly.hpp"

namespace osc {

// Element of the Weyl algebra PD(V) in normal order: sum c x^alpha d^beta,
// multiplication parts to the left of derivative parts.
class WeylOp {
 public:
  using Key = std::pair<Monomial, Monomial>;  // (alpha, beta)
  struct KeyDesc {
    bool operator()(const Key& a, const Key& b) const {
      int c = Monomial::compare(a.first, b.first);
      if (c) return c > 0;
      return Monomial::compare(a.second, b.second) > 0;
    }
  };
  using Terms = std::map<Key, Scalar, KeyDesc>;

  explicit WeylOp(TablePtr t) : t_(std::move(t)) {}
  WeylOp(TablePtr t, const Scalar& c);
  static WeylOp mult(TablePtr t, std::size_t v);   // x_v
  static WeylOp deriv(TablePtr t, std::size_t v);  // d/dx_v
  static WeylOp term(TablePtr t, Monomial alpha, Monomial beta, const Scalar& c = Scalar(1));
  static WeylOp from_poly(const Poly& p);  // multiplication operator

  const TablePtr& table() const { return t_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coeff(const Monomial& alpha, const Monomial& beta) const;
  int filtration_degree() const;  // max |alpha|+|beta|, -1 for zero

  void add_term(const Monomial& alpha, const Monomial& beta, const Scalar& c);

  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  WeylOp& operator*=(const Scalar& c);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(WeylOp a, const Scalar& c) { return a *= c; }
  friend WeylOp operator*(const Scalar& c, WeylOp a) { return a *= c; }
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  WeylOp operator-() const;

  friend bool operator==(const WeylOp& a, const WeylOp& b);
  friend bool operator!=(const WeylOp& a, const WeylOp& b) { return !(a == b); }

  std::string str() const;

 private:
  TablePtr t_;
  Terms terms_;
};

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b);
WeylOp commutator(const WeylOp& a, const WeylOp& b);
Poly apply(const WeylOp& a, const Poly& f);
// {|alpha| - |beta|} over the terms.
std::set<int> total_degree_shifts(const WeylOp& a);

using PolyMatrix = Matrix<Poly>;
using OpMatrix = Matrix<WeylOp>;

}  // namespace osc
