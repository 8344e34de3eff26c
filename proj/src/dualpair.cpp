#include "osc/dualpair.hpp"

#include <functional>
#include <map>
#include <set>

#include "osc/parallel.hpp"

namespace osc {

std::string dual_group_name(DualGroup g) {
  switch (g) {
    case DualGroup::O: return "O_k";
    case DualGroup::GL: return "GL_k";
    case DualGroup::GLTwisted: return "GL_k twisted";
    case DualGroup::Sp: return "Sp_k";
  }
  return "?";
}

DualGroup dual_group(SchemeId s) {
  switch (s) {
    case SchemeId::SpSchrodinger:
    case SchemeId::SpFock: return DualGroup::O;
    case SchemeId::UpqHolomorphic:
    case SchemeId::OStarHolomorphic: return DualGroup::GL;
    case SchemeId::UpqMixed: return DualGroup::GLTwisted;
    case SchemeId::OStarMixed: return DualGroup::Sp;
  }
  throw UsageError("unknown scheme");
}

std::vector<CoordBlock> coordinate_blocks(const QuantizationScheme& s) {
  const SymplecticModel& m = s.model;
  std::size_t k = m.k;
  auto grid = [](std::size_t rows, std::size_t cols, std::size_t offset) {
    GenMatrix g{rows, cols, {}};
    for (std::size_t i = 0; i < rows * cols; ++i) g.idx.push_back(offset + i);
    return g;
  };
  switch (s.id) {
    case SchemeId::SpSchrodinger:
    case SchemeId::SpFock: return {{grid(m.n, k, 0), false}};
    case SchemeId::UpqHolomorphic:
    case SchemeId::OStarHolomorphic: return {{grid(m.ambient, k, 0), false}};
    case SchemeId::UpqMixed: return {{grid(m.p, k, 0), false}, {grid(m.q, k, m.p * k), true}};
    case SchemeId::OStarMixed: {
      // [z | w], n x 2k
      GenMatrix u{m.n, 2 * k, std::vector<std::size_t>(m.n * 2 * k)};
      for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t a = 0; a < k; ++a) {
          u.idx[i * 2 * k + a] = i * k + a;
          u.idx[i * 2 * k + k + a] = m.n * k + i * k + a;
        }
      return {{u, false}};
    }
  }
  throw UsageError("unknown scheme");
}

namespace {

const Scalar I = Scalar::i();

std::size_t gprime_size(const QuantizationScheme& s) {
  return dual_group(s.id) == DualGroup::Sp ? 2 * s.model.k : s.model.k;
}

}  // namespace

WeylOp rho_prime(const QuantizationScheme& s, const DenseMatrix& y) {
  std::size_t sz = gprime_size(s);
  if (y.rows() != sz || y.cols() != sz) throw UsageError("rho': g' element has the wrong size");
  const TablePtr& t = s.lagrangian;
  WeylOp out(t);
  for (auto& blk : coordinate_blocks(s))
    for (std::size_t i = 0; i < blk.u.rows; ++i)
      for (std::size_t a = 0; a < sz; ++a)
        for (std::size_t b = 0; b < sz; ++b) {
          if (y(a, b).is_zero()) continue;
          if (!blk.twisted)
            out.add_term(Monomial::var(blk.u(i, a)), Monomial::var(blk.u(i, b)), y(a, b));
          else
            out.add_term(Monomial::var(blk.u(i, b)), Monomial::var(blk.u(i, a)), -y(a, b));
        }
  return out;
}

namespace {

// Isotropic basis for the symmetric form: c_a = e_a + i e_{k+1-a}, c_{k+1-a} = e_a - i e_{k+1-a}.
DenseMatrix isotropic_basis(std::size_t k) {
  DenseMatrix c = zeros(k, k);
  for (std::size_t a = 0; a < k / 2; ++a) {
    std::size_t b = k - 1 - a;
    c(a, a) = Scalar(1);
    c(b, a) = I;
    c(a, b) = Scalar(1);
    c(b, b) = -I;
  }
  if (k % 2) c(k / 2, k / 2) = Scalar(1);
  return c;
}

void orthogonal_borel(DualActionSpec& d) {
  std::size_t k = d.k;
  if (k < 2) {
    d.convention = "o_k = 0";
    return;
  }
  DenseMatrix c = isotropic_basis(k), ci = inverse(c);
  DenseMatrix q = transpose(c) * c;
  for (std::size_t t = 0; t < k / 2; ++t) {
    DenseMatrix z = unit(k, t, t) - unit(k, k - 1 - t, k - 1 - t);
    d.cartan.push_back(c * z * ci);
  }
  // strictly upper triangular Z with Z^T Q + Q Z = 0
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) slots.push_back({a, b});
  DenseMatrix eq = zeros(k * k, slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    DenseMatrix z = unit(k, slots[s].first, slots[s].second);
    DenseMatrix r = transpose(z) * q + q * z;
    for (std::size_t e = 0; e < k * k; ++e) eq(e, s) = r(e / k, e % k);
  }
  for (auto& v : nullspace(eq)) {
    DenseMatrix z = zeros(k, k);
    for (std::size_t s = 0; s < slots.size(); ++s) z(slots[s].first, slots[s].second) = v[s];
    d.raising.push_back(c * z * ci);
  }
  d.convention =
      "o_k Borel taken in the isotropic basis c_a = e_a + i e_{k+1-a}, c_{k+1-a} = e_a - i e_{k+1-a}: "
      "Cartan C(E_tt - E_{k+1-t,k+1-t})C^-1, raising C(strictly upper part)C^-1";
}

}  // namespace

DualActionSpec derived_dual_action(const QuantizationScheme& s) {
  DualActionSpec d;
  d.group = dual_group(s.id);
  d.k = s.model.k;
  d.size = gprime_size(s);
  std::size_t k = d.k;
  switch (d.group) {
    case DualGroup::O:
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
          d.basis.push_back({"A", a + 1, b + 1, unit(k, a, b) - unit(k, b, a)});
      orthogonal_borel(d);
      break;
    case DualGroup::GL:
    case DualGroup::GLTwisted:
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          d.basis.push_back({"E", a + 1, b + 1, unit(k, a, b)});
          if (a == b) d.cartan.push_back(unit(k, a, a));
          if (a < b) d.raising.push_back(unit(k, a, b));
        }
      d.convention = "gl_k: Cartan E_aa, raising E_ab (a < b)";
      break;
    case DualGroup::Sp:
      if (k > 0) {
        LieAlgebraSpec sp = build_sp(k);
        d.basis = sp.basis();
        for (auto& b : d.basis) {
          if (b.type == "X0" && b.i == b.j) d.cartan.push_back(b.m);
          if ((b.type == "X0" && b.i < b.j) || b.type == "X+") d.raising.push_back(b.m);
        }
      }
      d.convention = "sp_k: Cartan X0_aa, raising X0_ab (a < b) and X+_ab";
      break;
  }
  for (auto& b : d.basis) d.ops.push_back(rho_prime(s, b.m));
  return d;
}

Poly right_translate(const QuantizationScheme& s, const Poly& f, const DenseMatrix& g) {
  std::size_t sz = gprime_size(s);
  if (g.rows() != sz || g.cols() != sz) throw UsageError("right_translate: g has the wrong size");
  DenseMatrix gi;
  try {
    gi = inverse(g);
  } catch (const DomainError&) {
    throw UsageError("right_translate: g is singular");
  }
  const TablePtr& t = s.lagrangian;
  std::vector<Poly> images;
  for (std::size_t v = 0; v < t->size(); ++v) images.push_back(Poly::variable(t, v));
  for (auto& blk : coordinate_blocks(s))
    for (std::size_t i = 0; i < blk.u.rows; ++i)
      for (std::size_t a = 0; a < sz; ++a) {
        Poly img(t);
        for (std::size_t b = 0; b < sz; ++b) {
          const Scalar& c = blk.twisted ? gi(a, b) : g(b, a);
          if (!c.is_zero()) img += Poly::variable(t, blk.u(i, b)) * c;
        }
        images[blk.u(i, a)] = img;
      }
  return substitute(f, images, t);
}

namespace {

Report dual_report(const std::string& kind, const QuantizationScheme& s) {
  Report r;
  r.kind = kind;
  r.params["scheme"] = scheme_name(s.id);
  r.params["params"] = model_spec(s.model).params_str();
  r.params["k"] = s.model.k;
  r.params["dual_group"] = dual_group_name(dual_group(s.id));
  return r;
}

}  // namespace

Report verify_commutant(const QuantizationScheme& s, const LieAlgebraSpec& spec, const DualActionSpec& dual) {
  Report rep = dual_report("commutant", s);
  auto& chk = rep.add("[pi(X), rho'(Y)] = 0");
  auto pis = pi_basis(s, spec);
  auto fails = parallel_map<std::vector<std::string>>(pis.size(), [&](std::size_t a) {
    std::vector<std::string> out;
    for (std::size_t b = 0; b < dual.ops.size(); ++b)
      if (!commutator(pis[a], dual.ops[b]).is_zero())
        out.push_back(spec.basis()[a].label() + ", " + dual.basis[b].label());
    return out;
  });
  for (auto& f : fails) chk.failures.insert(chk.failures.end(), f.begin(), f.end());
  chk.pairs_checked = pis.size() * dual.ops.size();
  return rep;
}

Report verify_dual_homomorphism(const QuantizationScheme& s, const DualActionSpec& dual) {
  Report rep = dual_report("dual_homomorphism", s);
  auto& chk = rep.add("[rho'(Y1), rho'(Y2)] = rho'([Y1, Y2])");
  std::size_t d = dual.basis.size();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (commutator(dual.ops[a], dual.ops[b]) != rho_prime(s, bracket(dual.basis[a].m, dual.basis[b].m)))
        chk.failures.push_back(dual.basis[a].label() + ", " + dual.basis[b].label());
      ++chk.pairs_checked;
    }
  // first order: every term has exactly one derivative and one multiplication
  auto& fo = rep.add("rho'(Y) is a first-order operator");
  for (std::size_t a = 0; a < d; ++a) {
    for (auto& [key, c] : dual.ops[a].terms())
      if (key.first.degree() != 1 || key.second.degree() != 1) {
        fo.failures.push_back(dual.basis[a].label());
        break;
      }
    ++fo.pairs_checked;
  }
  return rep;
}

Report verify_adjoint_identities(const QuantizationScheme& s, const std::vector<DenseMatrix>& gs, unsigned d) {
  Report rep = dual_report("adjoint_identities", s);
  auto blocks = coordinate_blocks(s);
  for (auto& b : blocks)
    if (b.twisted) throw UsageError("adjoint identities are stated for plain right translation only");
  auto& dchk = rep.add("rho(g)^-1 d_{ia} rho(g) = sum_b g_ab d_{ib}");
  auto& xchk = rep.add("rho(g)^-1 u_{ia} rho(g) = sum_b (g^-1)_ba u_{ib}");
  const TablePtr& t = s.lagrangian;
  std::vector<Poly> slice;
  for (unsigned e = 0; e <= d; ++e)
    for (auto& m : monomials_of_degree(t->size(), e)) slice.push_back(Poly::monomial(t, m));
  std::size_t sz = gprime_size(s);
  for (std::size_t gi = 0; gi < gs.size(); ++gi) {
    const DenseMatrix& g = gs[gi];
    DenseMatrix ginv = inverse(g);
    auto fails = parallel_map<std::vector<std::string>>(slice.size(), [&](std::size_t fi) {
      std::vector<std::string> out;
      const Poly& f = slice[fi];
      Poly gf = right_translate(s, f, g);
      for (auto& blk : blocks)
        for (std::size_t i = 0; i < blk.u.rows; ++i)
          for (std::size_t a = 0; a < sz; ++a) {
            Poly lhs_d = right_translate(s, partial_derivative(gf, blk.u(i, a)), ginv);
            Poly lhs_x = right_translate(s, Poly::variable(t, blk.u(i, a)) * gf, ginv);
            Poly rhs_d(t), rhs_x(t);
            for (std::size_t b = 0; b < sz; ++b) {
              if (!g(a, b).is_zero()) rhs_d += partial_derivative(f, blk.u(i, b)) * g(a, b);
              if (!ginv(b, a).is_zero()) rhs_x += Poly::variable(t, blk.u(i, b)) * f * ginv(b, a);
            }
            std::string where = "g#" + std::to_string(gi) + " " + t->label(blk.u(i, a)) + " on " + f.str();
            if (lhs_d != rhs_d) out.push_back("d: " + where);
            if (lhs_x != rhs_x) out.push_back("x: " + where);
          }
      return out;
    });
    for (auto& f : fails)
      for (auto& m : f) (m[0] == 'd' ? dchk : xchk).failures.push_back(m);
    dchk.pairs_checked += slice.size();
    xchk.pairs_checked += slice.size();
  }
  rep.params["degree"] = d;
  rep.params["group_elements"] = gs.size();
  return rep;
}

Report parity_decomposition_check(std::size_t n, std::size_t k, unsigned d) {
  if (d < 2) throw UsageError("parity check needs d >= 2");
  QuantizationScheme s = build_scheme(SchemeId::SpSchrodinger, n, 0, k);
  LieAlgebraSpec spec = model_spec(s.model);
  Report rep = dual_report("parity", s);
  rep.params["degree"] = d;
  auto& chk = rep.add("pi(X) preserves the parity of the degree");
  auto pis = pi_basis(s, spec);
  for (unsigned e = 0; e <= d; ++e)
    for (auto& m : monomials_of_degree(s.lagrangian->size(), e)) {
      Poly f = Poly::monomial(s.lagrangian, m);
      for (std::size_t a = 0; a < pis.size(); ++a) {
        Poly img = apply(pis[a], f);
        for (auto& [mono, c] : img.terms())
          if ((mono.degree() + e) % 2) {
            chk.failures.push_back(spec.basis()[a].label() + " on " + f.str());
            break;
          }
        ++chk.pairs_checked;
      }
    }
  return rep;
}

namespace {

struct GBorel {
  std::vector<std::string> cartan_labels, raising_labels;
  std::vector<WeylOp> cartan, raising;
};

// Degree-lowering elements together with the upper triangular degree-preserving ones.
// For holomorphic schemes everything preserves degree and this is an ordinary Borel.
GBorel g_borel(const LieAlgebraSpec& spec, const std::vector<WeylOp>& pis) {
  GBorel b;
  const auto& basis = spec.basis();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto& e = basis[a];
    auto shifts = total_degree_shifts(pis[a]);
    bool flat = shifts == std::set<int>{0};
    bool cart = (e.type == "E" || e.type == "X0") && e.i == e.j;
    bool raise = shifts == std::set<int>{-2} ||
                 (flat && (((e.type == "E" || e.type == "X0") && e.i < e.j) || e.type == "X+"));
    if (cart) {
      b.cartan.push_back(pis[a]);
      b.cartan_labels.push_back(e.label());
    }
    if (raise) {
      b.raising.push_back(pis[a]);
      b.raising_labels.push_back(e.label());
    }
  }
  return b;
}

// Joint eigenspaces of commuting operators on span(basis). `basis` must be in reduced form
// over `cols`: basis[j] has coefficient 1 at free column free[j] and 0 at the other free columns.
std::vector<std::pair<std::vector<Scalar>, std::vector<SparseVec>>> joint_eigenspaces(
    const std::vector<SparseVec>& basis, const std::vector<std::size_t>& free,
    const std::vector<std::function<SparseVec(const SparseVec&)>>& ops, long bound) {
  std::size_t dim = basis.size();
  std::vector<DenseMatrix> mats;
  for (auto& op : ops) {
    DenseMatrix m = zeros(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      SparseVec img = op(basis[j]);
      for (std::size_t t = 0; t < dim; ++t) {
        auto it = img.find(free[t]);
        if (it != img.end()) m(t, j) = it->second;
      }
    }
    mats.push_back(std::move(m));
  }
  // spaces as column bases in K coordinates
  std::vector<std::pair<std::vector<Scalar>, DenseMatrix>> spaces{{{}, identity(dim)}};
  for (auto& m : mats) {
    std::vector<std::pair<std::vector<Scalar>, DenseMatrix>> next;
    for (auto& [w, b] : spaces) {
      std::size_t found = 0;
      DenseMatrix mb = m * b;
      for (long lam = -bound; lam <= bound; ++lam) {
        DenseMatrix shifted = mb - Scalar(lam) * b;
        auto ns = nullspace(shifted);
        if (ns.empty()) continue;
        DenseMatrix coeff = zeros(b.cols(), ns.size());
        for (std::size_t c = 0; c < ns.size(); ++c)
          for (std::size_t r = 0; r < b.cols(); ++r) coeff(r, c) = ns[c][r];
        auto w2 = w;
        w2.push_back(Scalar(lam));
        next.push_back({w2, b * coeff});
        found += ns.size();
      }
      if (found != b.cols()) throw InternalError("g' Cartan eigenvalues are not integers in range");
    }
    spaces = std::move(next);
  }
  std::vector<std::pair<std::vector<Scalar>, std::vector<SparseVec>>> out;
  for (auto& [w, b] : spaces) {
    std::vector<SparseVec> vecs;
    for (std::size_t c = 0; c < b.cols(); ++c) {
      SparseVec v;
      for (std::size_t j = 0; j < dim; ++j) {
        if (b(j, c).is_zero()) continue;
        for (auto& [col, x] : basis[j]) {
          auto [pos, fresh] = v.emplace(col, x * b(j, c));
          if (!fresh) {
            pos->second += x * b(j, c);
            if (pos->second.is_zero()) v.erase(pos);
          }
        }
      }
      vecs.push_back(std::move(v));
    }
    out.push_back({w, std::move(vecs)});
  }
  return out;
}

}  // namespace

Decomposition joint_highest_weight_vectors(const QuantizationScheme& s, const LieAlgebraSpec& spec,
                                           const DualActionSpec& dual, unsigned d, std::size_t cap) {
  const TablePtr& t = s.lagrangian;
  std::size_t nv = t->size();
  Decomposition dec;
  std::size_t total = 0;
  for (unsigned e = 0; e <= d; ++e) {
    std::size_t c = count_monomials(nv, e);
    dec.slice_dims.push_back(c);
    total = (c > cap || total + c > cap) ? cap + 1 : total + c;
  }
  if (total > cap)
    throw SizeError("slice up to degree " + std::to_string(d) + " exceeds " + std::to_string(cap) +
                    " monomials; lower the degree");

  GBorel gb = g_borel(spec, pi_basis(s, spec));
  dec.g_cartan = gb.cartan_labels;
  dec.g_raising = gb.raising_labels;
  dec.gprime_convention = dual.convention;
  std::vector<WeylOp> g_cartan = gb.cartan, annihilators = gb.raising, gp_cartan;
  for (auto& y : dual.raising) annihilators.push_back(rho_prime(s, y));
  for (auto& h : dual.cartan) gp_cartan.push_back(rho_prime(s, h));

  for (unsigned e = 0; e <= d; ++e) {
    auto monos = monomials_of_degree(nv, e);
    // split by g weight; the g Cartan acts diagonally on monomials
    std::map<std::vector<Scalar>, std::vector<Monomial>> groups;
    for (auto& m : monos) {
      Poly f = Poly::monomial(t, m);
      std::vector<Scalar> w;
      for (auto& h : g_cartan) {
        Poly img = apply(h, f);
        if (img.is_zero()) {
          w.push_back(Scalar(0));
          continue;
        }
        if (img.size() != 1 || img.terms().begin()->first != m)
          throw InternalError("g Cartan element is not diagonal on monomials");
        w.push_back(img.terms().begin()->second);
      }
      groups[w].push_back(m);
    }
    std::vector<const std::pair<const std::vector<Scalar>, std::vector<Monomial>>*> order;
    for (auto& g : groups) order.push_back(&g);
    auto found = parallel_map<std::vector<JointVector>>(order.size(), [&](std::size_t gi) {
      const auto& [wg, ms] = *order[gi];
      std::map<Monomial, std::size_t> col;
      for (std::size_t j = 0; j < ms.size(); ++j) col[ms[j]] = j;
      std::map<std::pair<std::size_t, Monomial>, SparseVec> rows;
      for (std::size_t a = 0; a < annihilators.size(); ++a)
        for (std::size_t j = 0; j < ms.size(); ++j) {
          Poly img = apply(annihilators[a], Poly::monomial(t, ms[j]));
          for (auto& [m, c] : img.terms()) rows[{a, m}][j] = c;
        }
      RowEchelon ech(ms.size());
      for (auto& [key, r] : rows) ech.insert(r);
      std::vector<SparseVec> ker = ech.kernel();
      std::vector<std::size_t> free;
      // in kernel() output the free column is the largest index present
      for (auto& v : ker) free.push_back(v.rbegin()->first);
      std::vector<std::function<SparseVec(const SparseVec&)>> ops;
      for (auto& h : gp_cartan)
        ops.push_back([&, h](const SparseVec& v) {
          Poly f(t);
          for (auto& [c, x] : v) f.add_term(ms[c], x);
          Poly img = apply(h, f);
          SparseVec out;
          for (auto& [m, x] : img.terms()) {
            auto it = col.find(m);
            if (it == col.end()) throw InternalError("g' Cartan leaves the weight block");
            out[it->second] = x;
          }
          return out;
        });
      std::vector<JointVector> out;
      for (auto& [wgp, vecs] : joint_eigenspaces(ker, free, ops, long(e) + 1))
        for (auto& v : vecs) {
          Poly f(t);
          for (auto& [c, x] : v) f.add_term(ms[c], x);
          out.push_back({e, wg, wgp, f});
        }
      return out;
    });
    for (auto& f : found) dec.vectors.insert(dec.vectors.end(), f.begin(), f.end());
  }
  return dec;
}

Report decomposition_report(const QuantizationScheme& s, const Decomposition& dec) {
  Report rep = dual_report("decomposition", s);
  rep.data["slice_dims"] = dec.slice_dims;
  rep.data["g_cartan"] = dec.g_cartan;
  rep.data["g_raising"] = dec.g_raising;
  rep.data["gprime_convention"] = dec.gprime_convention;
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (auto& v : dec.vectors) {
    nlohmann::ordered_json j;
    j["degree"] = v.degree;
    std::vector<std::string> wg, wgp;
    for (auto& x : v.weight_g) wg.push_back(x.str());
    for (auto& x : v.weight_gprime) wgp.push_back(x.str());
    j["weight_g"] = wg;
    j["weight_gprime"] = wgp;
    j["vector"] = v.f.str();
    vs.push_back(j);
  }
  rep.data["vectors"] = vs;
  // independence: per degree, the vectors found must have full rank
  auto& chk = rep.add("joint highest weight vectors are linearly independent");
  std::map<unsigned, std::vector<const Poly*>> by_degree;
  for (auto& v : dec.vectors) by_degree[v.degree].push_back(&v.f);
  for (auto& [deg, ps] : by_degree) {
    std::map<Monomial, std::size_t, MonomialDesc> idx;
    for (auto* p : ps)
      for (auto& [m, c] : p->terms()) idx.emplace(m, 0);
    std::size_t n = 0;
    for (auto& [m, i] : idx) i = n++;
    RowEchelon ech(n);
    std::size_t r = 0;
    for (auto* p : ps) {
      SparseVec v;
      for (auto& [m, c] : p->terms()) v[idx[m]] = c;
      r += ech.insert(v);
    }
    if (r != ps.size()) chk.failures.push_back("degree " + std::to_string(deg));
    ++chk.pairs_checked;
  }
  return rep;
}

}  // namespace osc
