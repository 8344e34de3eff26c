#include "osc/weyl.hpp"

#include <sstream>

namespace osc {

WeylOp::WeylOp(TablePtr t, const Scalar& c) : t_(std::move(t)) {
  if (!c.is_zero()) terms_.emplace(Key(), c);
}

WeylOp WeylOp::mult(TablePtr t, std::size_t v) {
  if (v >= t->size()) throw UsageError("WeylOp::mult: index out of range");
  return term(std::move(t), Monomial::var(v), Monomial());
}

WeylOp WeylOp::deriv(TablePtr t, std::size_t v) {
  if (v >= t->size()) throw UsageError("WeylOp::deriv: index out of range");
  return term(std::move(t), Monomial(), Monomial::var(v));
}

WeylOp WeylOp::term(TablePtr t, Monomial alpha, Monomial beta, const Scalar& c) {
  WeylOp w(std::move(t));
  w.add_term(alpha, beta, c);
  return w;
}

WeylOp WeylOp::from_poly(const Poly& p) {
  WeylOp w(p.table());
  for (auto& [m, c] : p.terms()) w.add_term(m, Monomial(), c);
  return w;
}

bool WeylOp::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.first.is_one() && terms_.begin()->first.second.is_one());
}

Scalar WeylOp::constant_term() const { return coeff(Monomial(), Monomial()); }

Scalar WeylOp::coeff(const Monomial& alpha, const Monomial& beta) const {
  auto it = terms_.find(Key(alpha, beta));
  return it == terms_.end() ? Scalar(0) : it->second;
}

int WeylOp::filtration_degree() const {
  int d = -1;
  for (auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.first.degree() + k.second.degree()));
  return d;
}

void WeylOp::add_term(const Monomial& alpha, const Monomial& beta, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(Key(alpha, beta), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  require_same_table(t_, o.t_, "WeylOp +");
  for (auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  require_same_table(t_, o.t_, "WeylOp -");
  for (auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

WeylOp& WeylOp::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

WeylOp WeylOp::operator-() const {
  WeylOp r(*this);
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

bool operator==(const WeylOp& a, const WeylOp& b) {
  require_same_table(a.t_, b.t_, "WeylOp ==");
  return a.terms_ == b.terms_;
}

namespace {

long binom(unsigned n, unsigned k) {
  long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * static_cast<long>(n - k + i) / static_cast<long>(i);
  return r;
}

long factorial(unsigned n) {
  long r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

struct Shared {
  std::uint32_t var;
  unsigned b, g;  // exponent of d in beta, of x in gamma
};

// d^beta x^gamma = sum_kappa prod_v C(b_v,k_v) C(g_v,k_v) k_v! x^(gamma-kappa) d^(beta-kappa)
void reorder(const Monomial& beta, const Monomial& gamma, const std::vector<Shared>& sh, std::size_t i,
             std::vector<unsigned>& kappa, const std::function<void(const Monomial&, const Monomial&, long)>& emit) {
  if (i == sh.size()) {
    long coeff = 1;
    Monomial kx;
    for (std::size_t j = 0; j < sh.size(); ++j) {
      unsigned k = kappa[j];
      if (!k) continue;
      coeff *= binom(sh[j].b, k) * binom(sh[j].g, k) * factorial(k);
      kx = kx * Monomial::var(sh[j].var, k);
    }
    emit(gamma / kx, beta / kx, coeff);
    return;
  }
  unsigned top = std::min(sh[i].b, sh[i].g);
  for (unsigned k = 0; k <= top; ++k) {
    kappa[i] = k;
    reorder(beta, gamma, sh, i + 1, kappa, emit);
  }
}

std::vector<Shared> shared_vars(const Monomial& beta, const Monomial& gamma) {
  std::vector<Shared> sh;
  auto& be = beta.entries();
  auto& ge = gamma.entries();
  std::size_t i = 0, j = 0;
  while (i < be.size() && j < ge.size()) {
    if (be[i].first == ge[j].first) {
      sh.push_back({be[i].first, be[i].second, ge[j].second});
      ++i;
      ++j;
    } else if (be[i].first < ge[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return sh;
}

}  // namespace

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
  require_same_table(a.t_, b.t_, "weyl_mul");
  WeylOp r(a.t_);
  std::vector<unsigned> kappa;
  for (auto& [ka, ca] : a.terms_) {
    const Monomial& alpha = ka.first;
    const Monomial& beta = ka.second;
    for (auto& [kb, cb] : b.terms_) {
      const Monomial& gamma = kb.first;
      const Monomial& delta = kb.second;
      Scalar c = ca * cb;
      auto sh = shared_vars(beta, gamma);
      if (sh.empty()) {
        r.add_term(alpha * gamma, beta * delta, c);
        continue;
      }
      kappa.assign(sh.size(), 0);
      reorder(beta, gamma, sh, 0, kappa, [&](const Monomial& g, const Monomial& bt, long k) {
        r.add_term(alpha * g, bt * delta, c * Scalar(k));
      });
    }
  }
  return r;
}

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b) { return a * b; }

WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

Poly apply(const WeylOp& a, const Poly& f) {
  require_same_table(a.table(), f.table(), "apply");
  Poly r(f.table());
  for (auto& [k, c] : a.terms()) {
    const Monomial& alpha = k.first;
    const Monomial& beta = k.second;
    for (auto& [m, cf] : f.terms()) {
      if (!beta.divides(m)) continue;
      long fall = 1;
      for (auto& [v, e] : beta.entries()) {
        unsigned me = m.exponent(v);
        for (unsigned t = 0; t < e; ++t) fall *= static_cast<long>(me - t);
      }
      r.add_term(alpha * (m / beta), c * cf * Scalar(fall));
    }
  }
  return r;
}

std::set<int> total_degree_shifts(const WeylOp& a) {
  std::set<int> s;
  for (auto& [k, c] : a.terms())
    s.insert(static_cast<int>(k.first.degree()) - static_cast<int>(k.second.degree()));
  return s;
}

std::string WeylOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool one = k.first.is_one() && k.second.is_one();
    if (one) {
      os << c;
      continue;
    }
    if (!c.is_one()) os << "(" << c << ")*";
    bool lead = false;
    if (!k.first.is_one()) {
      os << k.first.str(*t_);
      lead = true;
    }
    for (auto& [v, e] : k.second.entries()) {
      os << (lead ? "*" : "") << "d[" << t_->label(v) << "]";
      if (e > 1) os << "^" << e;
      lead = true;
    }
  }
  return os.str();
}

}  // namespace osc
