#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "osc/scalar.hpp"

namespace osc {

class GeneratorTable;
using TablePtr = std::shared_ptr<const GeneratorTable>;

// Ordered list of generator labels. Shared (read-only) by every Poly/WeylOp
// built over it; operands must refer to the same table.
class GeneratorTable {
 public:
  static TablePtr make(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Throws UsageError when absent.
  std::size_t index_of(const std::string& label) const;
  bool contains(const std::string& label) const { return lookup_.count(label) != 0; }

  bool same_as(const GeneratorTable& o) const { return this == &o || labels_ == o.labels_; }

 private:
  explicit GeneratorTable(std::vector<std::string> labels);
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

// Labels "prefix_{i,a}" for i in [row0+1, row0+rows], a in [1, cols], row-major.
std::vector<std::string> grid_labels(const std::string& prefix, std::size_t rows,
                                     std::size_t cols, std::size_t row0 = 0);

void require_same_table(const TablePtr& a, const TablePtr& b, const char* what);

// Sparse exponent vector: sorted (var, exp) pairs with exp > 0.
class Monomial {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  static Monomial var(std::size_t v, unsigned e = 1);
  static Monomial from_dense(const std::vector<unsigned>& exps);

  const std::vector<Entry>& entries() const { return e_; }
  bool is_one() const { return e_.empty(); }
  unsigned degree() const;
  unsigned exponent(std::size_t v) const;
  std::vector<unsigned> dense(std::size_t n) const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires o.divides(*this)

  // Lexicographic order on dense exponent vectors, variable 0 most significant.
  static int compare(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

  std::string str(const GeneratorTable& t) const;

 private:
  std::vector<Entry> e_;
};

// Terms stored largest monomial first.
struct MonomialDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) > 0; }
};

// Sparse commutative polynomial over Q(i). Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialDesc>;

  explicit Poly(TablePtr t) : t_(std::move(t)) {}
  Poly(TablePtr t, const Scalar& c);
  static Poly variable(TablePtr t, std::size_t v);
  static Poly monomial(TablePtr t, Monomial m, const Scalar& c = Scalar(1));

  const TablePtr& table() const { return t_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coeff(const Monomial& m) const;
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Scalar& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly conj_coeffs() const;
  std::string str() const;

 private:
  TablePtr t_;
  Terms terms_;
};

Poly pow(const Poly& p, unsigned e);
Poly partial_derivative(const Poly& p, std::size_t v);

// Replace generator v of p's table by images[v] (all over `target`).
Poly substitute(const Poly& p, const std::vector<Poly>& images, const TablePtr& target);
Scalar evaluate(const Poly& p, const std::vector<Scalar>& point);

// All monomials of exactly degree d in n variables, largest first.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);
// Number of monomials of degree d in n variables; saturates at SIZE_MAX.
std::size_t count_monomials(std::size_t n, unsigned d);

}  // namespace osc
