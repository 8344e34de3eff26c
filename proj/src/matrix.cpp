#include "osc/matrix.hpp"

#include <sstream>

namespace osc {

namespace {

void need_shape(bool ok, const char* what) {
  if (!ok) throw UsageError(std::string(what) + ": shape mismatch");
}

}  // namespace

DenseMatrix zeros(std::size_t rows, std::size_t cols) { return DenseMatrix(rows, cols, Scalar(0)); }

DenseMatrix identity(std::size_t n) {
  DenseMatrix m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

DenseMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  DenseMatrix m = zeros(n, n);
  m(i, j) = Scalar(1);
  return m;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  need_shape(a.cols() == b.rows(), "matmul");
  DenseMatrix r = zeros(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  need_shape(a.rows() == b.rows() && a.cols() == b.cols(), "add");
  DenseMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  need_shape(a.rows() == b.rows() && a.cols() == b.cols(), "sub");
  DenseMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
  return r;
}

DenseMatrix operator*(const Scalar& c, const DenseMatrix& a) {
  DenseMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= c;
  return r;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix r = zeros(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

DenseMatrix conj(const DenseMatrix& a) {
  DenseMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).conj();
  return r;
}

DenseMatrix conj_transpose(const DenseMatrix& a) { return conj(transpose(a)); }

DenseMatrix bracket(const DenseMatrix& a, const DenseMatrix& b) { return a * b - b * a; }

Scalar trace(const DenseMatrix& a) {
  need_shape(a.rows() == a.cols(), "trace");
  Scalar t(0);
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

bool is_zero(const DenseMatrix& a) {
  for (auto& x : a.data())
    if (!x.is_zero()) return false;
  return true;
}

DenseMatrix block2(const DenseMatrix& a, const DenseMatrix& b, const DenseMatrix& c,
                   const DenseMatrix& d) {
  std::size_t n = a.rows();
  for (auto* m : {&a, &b, &c, &d}) need_shape(m->rows() == n && m->cols() == n, "block2");
  DenseMatrix r = zeros(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = a(i, j);
      r(i, j + n) = b(i, j);
      r(i + n, j) = c(i, j);
      r(i + n, j + n) = d(i, j);
    }
  return r;
}

DenseMatrix sub_block(const DenseMatrix& a, std::size_t r0, std::size_t c0, std::size_t rows,
                      std::size_t cols) {
  need_shape(r0 + rows <= a.rows() && c0 + cols <= a.cols(), "sub_block");
  DenseMatrix r = zeros(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = a(r0 + i, c0 + j);
  return r;
}

std::string to_string(const DenseMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
  }
  os << "]";
  return os.str();
}

// ---- echelon engine

SparseVec RowEchelon::reduce(SparseVec v) const {
  // Rows are stored by pivot; subtracting the row for pivot p only touches columns >= p,
  // so a single ascending sweep suffices.
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    Scalar f = it->second;
    std::size_t col = it->first;
    for (auto& [c, x] : row->second) {
      auto [pos, fresh] = v.emplace(c, -(f * x));
      if (!fresh) {
        pos->second -= f * x;
        if (pos->second.is_zero()) v.erase(pos);
      }
    }
    it = v.upper_bound(col);
  }
  return v;
}

bool RowEchelon::insert(SparseVec v) {
  for (auto it = v.begin(); it != v.end();) {
    if (it->first >= ncols_) throw UsageError("RowEchelon: column out of range");
    it = it->second.is_zero() ? v.erase(it) : std::next(it);
  }
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Scalar lead = v.begin()->second.inv();
  for (auto& [c, x] : v) x *= lead;
  rows_.emplace(v.begin()->first, std::move(v));
  return true;
}

std::vector<SparseVec> RowEchelon::kernel() const {
  // Back-substitute to reduced form.
  std::map<std::size_t, SparseVec> red = rows_;
  for (auto it = red.rbegin(); it != red.rend(); ++it) {
    std::size_t p = it->first;
    for (auto& [q, row] : red) {
      if (q >= p) break;
      auto hit = row.find(p);
      if (hit == row.end()) continue;
      Scalar f = hit->second;
      for (auto& [c, x] : it->second) {
        auto [pos, fresh] = row.emplace(c, -(f * x));
        if (!fresh) {
          pos->second -= f * x;
          if (pos->second.is_zero()) row.erase(pos);
        }
      }
    }
  }
  std::vector<SparseVec> out;
  for (std::size_t f = 0; f < ncols_; ++f) {
    if (red.count(f)) continue;
    SparseVec k;
    k.emplace(f, Scalar(1));
    for (auto& [p, row] : red) {
      auto hit = row.find(f);
      if (hit != row.end()) k.emplace(p, -hit->second);
    }
    out.push_back(std::move(k));
  }
  return out;
}

namespace {

SparseVec row_of(const DenseMatrix& a, std::size_t i) {
  SparseVec v;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!a(i, j).is_zero()) v.emplace(j, a(i, j));
  return v;
}

}  // namespace

std::size_t rank(const DenseMatrix& a) {
  RowEchelon e(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) e.insert(row_of(a, i));
  return e.rank();
}

std::vector<std::vector<Scalar>> nullspace(const DenseMatrix& a) {
  RowEchelon e(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) e.insert(row_of(a, i));
  std::vector<std::vector<Scalar>> out;
  for (auto& k : e.kernel()) {
    std::vector<Scalar> v(a.cols(), Scalar(0));
    for (auto& [c, x] : k) v[c] = x;
    out.push_back(std::move(v));
  }
  return out;
}

DenseMatrix inverse(const DenseMatrix& a) {
  need_shape(a.rows() == a.cols(), "inverse");
  std::size_t n = a.rows();
  DenseMatrix m = a, inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) throw DomainError("inverse: singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Scalar s = m(col, col).inv();
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= s;
      inv(col, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      Scalar f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::optional<std::vector<Scalar>> solve(const DenseMatrix& a, const std::vector<Scalar>& b) {
  need_shape(b.size() == a.rows(), "solve");
  // Echelon on [a | b]; inconsistent iff some row reduces to a pivot in the last column.
  std::size_t n = a.cols();
  RowEchelon e(n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseVec v = row_of(a, i);
    if (!b[i].is_zero()) v.emplace(n, b[i]);
    e.insert(std::move(v));
  }
  // A kernel vector (y, t) of [a | b] with t != 0 gives x = -y / t.
  for (auto& k : e.kernel()) {
    auto last = k.find(n);
    if (last == k.end()) continue;
    Scalar s = -last->second.inv();
    std::vector<Scalar> x(n, Scalar(0));
    for (auto& [c, v] : k)
      if (c < n) x[c] = v * s;
    return x;
  }
  return std::nullopt;
}

}  // namespace osc
