#include "osc/emit.hpp"

#include <sstream>

namespace osc {

Json scalar_to_json(const Scalar& s) { return Json{{"re", s.re().get_str()}, {"im", s.im().get_str()}}; }

Scalar scalar_from_json(const Json& j) {
  try {
    mpq_class re(j.at("re").get<std::string>()), im(j.at("im").get<std::string>());
    re.canonicalize();
    im.canonicalize();
    return Scalar(re, im);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad scalar in json: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad scalar in json: ") + e.what());
  }
}

Json matrix_to_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

DenseMatrix matrix_from_json(const Json& j) {
  std::size_t r = j.size(), c = r ? j[0].size() : 0;
  DenseMatrix m = zeros(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (j[i].size() != c) throw UsageError("ragged matrix in json");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

namespace {

Json monomial_to_json(const Monomial& m) {
  Json a = Json::array();
  for (auto& [v, e] : m.entries()) a.push_back({v, e});
  return a;
}

Monomial monomial_from_json(const Json& j, std::size_t nvars) {
  Monomial m;
  for (auto& e : j) {
    auto v = e.at(0).get<std::size_t>();
    if (v >= nvars) throw UsageError("generator index out of range in json");
    m = m * Monomial::var(v, e.at(1).get<unsigned>());
  }
  return m;
}

}  // namespace

Json weyl_to_json(const WeylOp& w) {
  Json terms = Json::array();
  for (auto& [key, c] : w.terms())
    terms.push_back({{"x", monomial_to_json(key.first)}, {"d", monomial_to_json(key.second)}, {"c", scalar_to_json(c)}});
  return terms;
}

WeylOp weyl_from_json(const Json& j, const TablePtr& t) {
  WeylOp w(t);
  for (auto& term : j)
    w.add_term(monomial_from_json(term.at("x"), t->size()), monomial_from_json(term.at("d"), t->size()),
               scalar_from_json(term.at("c")));
  return w;
}

EmitData collect_emit(const LieAlgebraSpec& spec, const QuantizationScheme* s, const EmitSections& what) {
  EmitData d;
  d.lie_case = case_name(spec.kind());
  d.params = spec.params_str();
  if (what.basis) d.basis = spec.basis();
  if (what.structure) d.structure = spec.structure_constants();
  if (!s) return d;
  d.scheme = scheme_name(s->id);
  d.k = s->model.k;
  d.lagrangian = s->lagrangian->labels();
  if (!what.mu_hat && !what.pi) return d;
  OpMatrix mu = quantized_moment_map(*s);
  if (what.mu_hat) d.mu_hat = mu;
  if (what.pi)
    for (auto& b : spec.basis()) d.pi.push_back({b.label(), pi(mu, spec, b.m)});
  return d;
}

Json emit_to_json(const EmitData& d) {
  Json j;
  j["schema"] = "v1";
  j["kind"] = "emit";
  j["case"] = d.lie_case;
  j["params"] = d.params;
  if (d.scheme) {
    j["scheme"] = *d.scheme;
    j["k"] = d.k;
    j["lagrangian"] = d.lagrangian;
  }
  if (!d.basis.empty()) {
    Json b = Json::array();
    for (auto& e : d.basis) b.push_back({{"type", e.type}, {"i", e.i}, {"j", e.j}, {"matrix", matrix_to_json(e.m)}});
    j["basis"] = b;
  }
  if (!d.structure.empty()) {
    Json sc = Json::array();
    for (auto& row : d.structure) {
      Json r = Json::array();
      for (auto& [g, c] : row) r.push_back({{"index", g}, {"c", scalar_to_json(c)}});
      sc.push_back(r);
    }
    j["structure_constants"] = sc;
  }
  if (d.mu_hat) {
    Json m = Json::array();
    for (std::size_t r = 0; r < d.mu_hat->rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < d.mu_hat->cols(); ++c) row.push_back(weyl_to_json((*d.mu_hat)(r, c)));
      m.push_back(row);
    }
    j["mu_hat"] = m;
  }
  if (!d.pi.empty()) {
    Json p = Json::array();
    for (auto& [label, op] : d.pi) p.push_back({{"label", label}, {"op", weyl_to_json(op)}});
    j["pi"] = p;
  }
  return j;
}

EmitData emit_from_json(const Json& j) {
  try {
    if (j.at("schema") != "v1" || j.at("kind") != "emit") throw UsageError("not a v1 emit document");
    EmitData d;
    d.lie_case = j.at("case").get<std::string>();
    d.params = j.at("params").get<std::string>();
    TablePtr t;
    if (j.contains("scheme")) {
      d.scheme = j["scheme"].get<std::string>();
      d.k = j.at("k").get<std::size_t>();
      d.lagrangian = j.at("lagrangian").get<std::vector<std::string>>();
      t = GeneratorTable::make(d.lagrangian);
    }
    if (j.contains("basis"))
      for (auto& e : j["basis"])
        d.basis.push_back({e.at("type").get<std::string>(), e.at("i").get<std::size_t>(), e.at("j").get<std::size_t>(),
                           matrix_from_json(e.at("matrix"))});
    if (j.contains("structure_constants"))
      for (auto& row : j["structure_constants"]) {
        std::vector<std::pair<std::size_t, Scalar>> r;
        for (auto& e : row) r.push_back({e.at("index").get<std::size_t>(), scalar_from_json(e.at("c"))});
        d.structure.push_back(std::move(r));
      }
    if ((j.contains("mu_hat") || j.contains("pi")) && !t) throw UsageError("operators without a generator table");
    if (j.contains("mu_hat")) {
      const Json& m = j["mu_hat"];
      std::size_t n = m.size();
      OpMatrix op(n, n, WeylOp(t));
      for (std::size_t r = 0; r < n; ++r) {
        if (m[r].size() != n) throw UsageError("mu_hat is not square");
        for (std::size_t c = 0; c < n; ++c) op(r, c) = weyl_from_json(m[r][c], t);
      }
      d.mu_hat = std::move(op);
    }
    if (j.contains("pi"))
      for (auto& e : j["pi"]) d.pi.push_back({e.at("label").get<std::string>(), weyl_from_json(e.at("op"), t)});
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed emit document: ") + e.what());
  }
}

std::string latex_label(const std::string& g) {
  auto us = g.find('_');
  std::string head = g.substr(0, us), tail = us == std::string::npos ? "" : g.substr(us);
  if (head.size() == 2 && head[1] == 'b') return "\\bar{" + head.substr(0, 1) + "}" + tail;
  return g;
}

namespace {

std::string coeff_latex(const Scalar& c, bool first, bool bare) {
  // bare: the coefficient stands alone (constant term)
  std::string s = c.latex();
  bool neg = !s.empty() && s[0] == '-';
  bool compound = c.re() != 0 && c.im() != 0;
  std::string body = neg && !compound ? s.substr(1) : s;
  if (compound) body = "\\left(" + body + "\\right)";
  if (!bare && (body == "1")) body.clear();
  std::string sign = neg && !compound ? "-" : (first ? "" : "+");
  if (!first) sign = " " + sign + " ";
  return sign + body;
}

std::string monomial_latex(const Monomial& m, const GeneratorTable& t, bool deriv) {
  std::string out;
  for (auto& [v, e] : m.entries()) {
    std::string l = latex_label(t.label(v));
    std::string base = deriv ? "\\partial_{" + l + "}" : l;
    if (e > 1) base = (deriv ? base : "{" + base + "}") + "^{" + std::to_string(e) + "}";
    out += base + " ";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

std::string matrix_latex(const DenseMatrix& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " & " : "") << m(i, j).latex();
    os << (i + 1 < m.rows() ? " \\\\ " : "");
  }
  os << "\\end{pmatrix}";
  return os.str();
}

std::string basis_latex(const std::string& label) {
  // "X+_{1,2}" -> "X^{+}_{1,2}"
  auto us = label.find('_');
  std::string head = label.substr(0, us), tail = label.substr(us);
  if (head.size() == 2 && head[0] == 'X' && (head[1] == '+' || head[1] == '-' || head[1] == '0'))
    return std::string("X^{") + head[1] + "}" + tail;
  if (head.size() == 2) return std::string(1, head[0]) + "^{" + head.substr(1) + "}" + tail;
  return label;
}

}  // namespace

std::string weyl_latex(const WeylOp& w) {
  if (w.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [key, c] : w.terms()) {
    bool bare = key.first.is_one() && key.second.is_one();
    out += coeff_latex(c, first, bare);
    std::string x = monomial_latex(key.first, *w.table(), false), d = monomial_latex(key.second, *w.table(), true);
    std::string body = x + (x.empty() || d.empty() ? "" : " ") + d;
    if (!body.empty()) out += (out.empty() || out.back() == ' ' || out.back() == '-' ? "" : " ") + body;
    first = false;
  }
  return out;
}

std::string emit_to_latex(const EmitData& d) {
  std::ostringstream os;
  os << "% " << d.lie_case << " " << d.params;
  if (d.scheme) os << ", scheme " << *d.scheme << ", k=" << d.k;
  os << "\n";
  if (!d.basis.empty()) {
    os << "\\paragraph{Basis}\n\\begin{align*}\n";
    for (std::size_t a = 0; a < d.basis.size(); ++a)
      os << basis_latex(d.basis[a].label()) << " &= " << matrix_latex(d.basis[a].m)
         << (a + 1 < d.basis.size() ? " \\\\\n" : "\n");
    os << "\\end{align*}\n";
  }
  if (!d.structure.empty()) {
    std::size_t n = d.basis.size();
    os << "\\paragraph{Brackets}\n\\begin{align*}\n";
    bool any = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        const auto& row = d.structure[a * n + b];
        if (row.empty()) continue;
        if (any) os << " \\\\\n";
        any = true;
        os << "[" << basis_latex(d.basis[a].label()) << ", " << basis_latex(d.basis[b].label()) << "] &= ";
        bool first = true;
        for (auto& [g, c] : row) {
          std::string cl = coeff_latex(c, first, false);
          bool glue = cl.empty() || cl.back() == ' ' || cl.back() == '-';
          os << cl << (glue ? "" : " ") << basis_latex(d.basis[g].label());
          first = false;
        }
      }
    os << (any ? "\n" : "") << "\\end{align*}\n";
  }
  if (d.mu_hat) {
    const OpMatrix& m = *d.mu_hat;
    os << "\\paragraph{Quantized moment map}\n\\[\n\\hat\\mu = \\begin{pmatrix}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " & " : "") << weyl_latex(m(i, j));
      os << (i + 1 < m.rows() ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}\n\\]\n";
  }
  if (!d.pi.empty()) {
    os << "\\paragraph{Representation}\n\\begin{align*}\n";
    for (std::size_t a = 0; a < d.pi.size(); ++a)
      os << "\\pi(" << basis_latex(d.pi[a].first) << ") &= " << weyl_latex(d.pi[a].second)
         << (a + 1 < d.pi.size() ? " \\\\\n" : "\n");
    os << "\\end{align*}\n";
  }
  return os.str();
}

}  // namespace osc
