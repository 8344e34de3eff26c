#include "osc/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "osc/errors.hpp"

namespace osc {

GeneratorTable::GeneratorTable(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!lookup_.emplace(labels_[i], i).second)
      throw UsageError("GeneratorTable: duplicate label " + labels_[i]);
  }
}

TablePtr GeneratorTable::make(std::vector<std::string> labels) {
  return TablePtr(new GeneratorTable(std::move(labels)));
}

std::size_t GeneratorTable::index_of(const std::string& label) const {
  auto it = lookup_.find(label);
  if (it == lookup_.end()) throw UsageError("unknown generator " + label);
  return it->second;
}

std::vector<std::string> grid_labels(const std::string& prefix, std::size_t rows,
                                     std::size_t cols, std::size_t row0) {
  std::vector<std::string> out;
  out.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t a = 0; a < cols; ++a)
      out.push_back(prefix + "_{" + std::to_string(row0 + i + 1) + "," + std::to_string(a + 1) + "}");
  return out;
}

void require_same_table(const TablePtr& a, const TablePtr& b, const char* what) {
  if (!a || !b || !a->same_as(*b))
    throw UsageError(std::string(what) + ": operands use different generator tables");
}

// ---- Monomial

Monomial Monomial::var(std::size_t v, unsigned e) {
  Monomial m;
  if (e) m.e_.emplace_back(static_cast<std::uint32_t>(v), e);
  return m;
}

Monomial Monomial::from_dense(const std::vector<unsigned>& exps) {
  Monomial m;
  for (std::size_t v = 0; v < exps.size(); ++v)
    if (exps[v]) m.e_.emplace_back(static_cast<std::uint32_t>(v), exps[v]);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto& [v, e] : e_) d += e;
  return d;
}

unsigned Monomial::exponent(std::size_t v) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), Entry(static_cast<std::uint32_t>(v), 0));
  return (it != e_.end() && it->first == v) ? it->second : 0;
}

std::vector<unsigned> Monomial::dense(std::size_t n) const {
  std::vector<unsigned> out(n, 0);
  for (auto& [v, e] : e_) {
    if (v >= n) throw UsageError("Monomial: variable outside table");
    out[v] = e;
  }
  return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  std::size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      r.e_.push_back(e_[i++]);
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      r.e_.push_back(o.e_[j++]);
    } else {
      r.e_.emplace_back(e_[i].first, e_[i].second + o.e_[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  std::size_t j = 0;
  for (auto& [v, e] : e_) {
    while (j < o.e_.size() && o.e_[j].first < v) ++j;
    if (j == o.e_.size() || o.e_[j].first != v || o.e_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!o.divides(*this)) throw DomainError("Monomial: division not exact");
  Monomial r;
  std::size_t j = 0;
  for (auto& [v, e] : e_) {
    unsigned sub = 0;
    if (j < o.e_.size() && o.e_[j].first == v) sub = o.e_[j++].second;
    if (e > sub) r.e_.emplace_back(v, e - sub);
  }
  return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  std::size_t i = 0;
  for (; i < a.e_.size() && i < b.e_.size(); ++i) {
    auto& x = a.e_[i];
    auto& y = b.e_[i];
    if (x.first == y.first) {
      if (x.second != y.second) return x.second > y.second ? 1 : -1;
      continue;
    }
    // The side holding the smaller variable has a nonzero entry where the other is 0.
    return x.first < y.first ? 1 : -1;
  }
  if (a.e_.size() == b.e_.size()) return 0;
  return a.e_.size() > b.e_.size() ? 1 : -1;
}

std::string Monomial::str(const GeneratorTable& t) const {
  if (e_.empty()) return "1";
  std::string out;
  for (auto& [v, e] : e_) {
    if (!out.empty()) out += "*";
    out += t.label(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---- Poly

Poly::Poly(TablePtr t, const Scalar& c) : t_(std::move(t)) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Poly Poly::variable(TablePtr t, std::size_t v) {
  if (v >= t->size()) throw UsageError("Poly::variable: index out of range");
  Poly p(std::move(t));
  p.terms_.emplace(Monomial::var(v), Scalar(1));
  return p;
}

Poly Poly::monomial(TablePtr t, Monomial m, const Scalar& c) {
  Poly p(std::move(t));
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar Poly::constant_term() const { return coeff(Monomial()); }

Scalar Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (auto& [m, c] : terms_) {
    int e = static_cast<int>(m.degree());
    if (d >= 0 && e != d) return false;
    d = e;
  }
  return true;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_table(t_, o.t_, "Poly +");
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_table(t_, o.t_, "Poly -");
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_table(a.t_, b.t_, "Poly *");
  Poly r(a.t_);
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  require_same_table(a.t_, b.t_, "Poly ==");
  return a.terms_ == b.terms_;
}

Poly Poly::conj_coeffs() const {
  Poly r(*this);
  for (auto& [m, v] : r.terms_) v = v.conj();
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (m.is_one()) {
      os << c;
    } else {
      if (!c.is_one()) os << "(" << c << ")*";
      os << m.str(*t_);
    }
  }
  return os.str();
}

Poly pow(const Poly& p, unsigned e) {
  Poly r(p.table(), Scalar(1)), b = p;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

Poly partial_derivative(const Poly& p, std::size_t v) {
  if (v >= p.table()->size()) throw UsageError("partial_derivative: index out of range");
  Poly r(p.table());
  for (auto& [m, c] : p.terms()) {
    unsigned e = m.exponent(v);
    if (!e) continue;
    r.add_term(m / Monomial::var(v), c * Scalar(static_cast<long>(e)));
  }
  return r;
}

Poly substitute(const Poly& p, const std::vector<Poly>& images, const TablePtr& target) {
  if (images.size() != p.table()->size()) throw UsageError("substitute: image count mismatch");
  for (auto& im : images) require_same_table(im.table(), target, "substitute");
  // powers[v][e] cached lazily
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const Poly& {
    auto& pw = powers[v];
    if (pw.empty()) pw.emplace_back(target, Scalar(1));
    while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
    return pw[e];
  };
  Poly r(target);
  for (auto& [m, c] : p.terms()) {
    Poly t(target, c);
    for (auto& [v, e] : m.entries()) t = t * power(v, e);
    r += t;
  }
  return r;
}

Scalar evaluate(const Poly& p, const std::vector<Scalar>& point) {
  if (point.size() != p.table()->size()) throw UsageError("evaluate: point dimension mismatch");
  Scalar r(0);
  for (auto& [m, c] : p.terms()) {
    Scalar t = c;
    for (auto& [v, e] : m.entries()) t *= pow(point[v], e);
    r += t;
  }
  return r;
}

namespace {

void enum_monomials(std::size_t n, std::size_t v, unsigned left, std::vector<unsigned>& cur,
                    std::vector<Monomial>& out) {
  if (v + 1 == n) {
    cur[v] = left;
    out.push_back(Monomial::from_dense(cur));
    cur[v] = 0;
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur[v] = e;
    enum_monomials(n, v + 1, left - e, cur, out);
  }
  cur[v] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(n, 0);
  enum_monomials(n, 0, d, cur, out);
  return out;
}

std::size_t count_monomials(std::size_t n, unsigned d) {
  if (n == 0) return d == 0 ? 1 : 0;
  // C(n-1+d, d) computed incrementally; each prefix is itself a binomial.
  unsigned __int128 r = 1;
  for (unsigned i = 1; i <= d; ++i) {
    r = r * (n - 1 + i) / i;
    if (r > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(r);
}

}  // namespace osc
