#include <algorithm>

#include "crsym/crmodel.hpp"
#include "crsym/prolong.hpp"

namespace crsym {

Realification realify(const CRModel& m) {
  size_t n = m.coords.size();
  std::vector<std::string> vars = {"x", "y"};
  for (size_t i = 1; i < n; ++i) vars.push_back("t_" + m.coords[i]);
  for (const auto& p : m.params) vars.push_back(p);
  RingPtr rr = make_ring(vars);
  std::vector<MPoly> images(m.ring->nvars());
  std::vector<bool> have(m.ring->nvars(), false);
  MPoly x = MPoly::variable(rr, 0), y = MPoly::variable(rr, 1);
  MPoly iy = y * GaussRat::i();
  images[0] = x + iy;
  images[n] = x - iy;
  have[0] = have[n] = true;
  for (size_t p = 0; p < m.params.size(); ++p) {
    images[2 * n + p] = MPoly::variable(rr, 2 + (n - 1) + p);
    have[2 * n + p] = true;
  }
  // by weight induction; equations are stored in declaration order and may
  // only reference strictly lower weights
  for (const auto& [cname, P] : m.equations) {
    int ci = m.coord_index(cname);
    for (size_t v = 0; v < m.ring->nvars(); ++v)
      if (P.depends_on(v) && !have[v])
        throw std::invalid_argument("realify: cyclic dependence through " +
                                    m.ring->var_name(v));
    MPoly ph = P.substitute(rr, images);
    MPoly t = MPoly::variable(rr, 2 + (ci - 1));
    images[ci] = t + ph * GaussRat::i();
    images[n + ci] = t - ph * GaussRat::i();
    have[ci] = have[n + ci] = true;
  }
  for (size_t v = 0; v < m.ring->nvars(); ++v)
    if (!have[v]) throw std::invalid_argument("realify: no equation for " +
                                              m.ring->var_name(v));
  return {rr, images};
}

TangencyReport verify_tangency(const CRModel& m, const PolyVectorField& s) {
  if (s.ring != m.ring)
    throw std::invalid_argument("verify_tangency: field not over the model ring");
  Realification re = realify(m);
  size_t n = m.coords.size();
  TangencyReport rep;
  GaussRat inv2i = GaussRat(1) / (GaussRat::i() * GaussRat(2));
  for (const auto& [cname, P] : m.equations) {
    int ci = m.coord_index(cname);
    MPoly w = MPoly::variable(m.ring, ci);
    MPoly wbar = MPoly::variable(m.ring, n + ci);
    MPoly rho = (w - wbar) * inv2i - P;
    MPoly t(m.ring);
    for (size_t j = 0; j < n; ++j) {
      if (!s.comps[j].is_zero()) t += s.comps[j] * rho.derivative(j);
      MPoly fbar = m.conj(s.comps[j]);
      if (!fbar.is_zero()) t += fbar * rho.derivative(n + j);
    }
    MPoly pulled = t.substitute(re.real_ring, re.images);
    if (!pulled.is_zero()) {
      rep.ok = false;
      rep.residuals.emplace_back(cname, pulled.to_string());
    }
  }
  return rep;
}

namespace {

// real-rational span membership: solve sum c_k F_k = W with c_k in Q
std::optional<QVec> real_span_member(const PolyVectorField& w,
                                     const std::vector<PolyVectorField>& span) {
  std::map<std::pair<int, MPoly::Exp>, int> cols;
  auto scan = [&](const PolyVectorField& f) {
    for (int i = 0; i < f.n_coords; ++i)
      for (const auto& [e, c] : f.comps[i].terms()) {
        auto key = std::make_pair(i, e);
        if (!cols.count(key)) {
          int sidx = static_cast<int>(cols.size());
          cols[key] = sidx;
        }
      }
  };
  for (const auto& f : span) scan(f);
  scan(w);
  auto flat = [&](const PolyVectorField& f) {
    CVec v(cols.size(), GaussRat(0));
    for (int i = 0; i < f.n_coords; ++i)
      for (const auto& [e, c] : f.comps[i].terms()) v[cols.at({i, e})] = c;
    return v;
  };
  QMat sys(static_cast<int>(2 * cols.size()), static_cast<int>(span.size()));
  QVec rhs;
  std::vector<CVec> fl;
  for (const auto& f : span) fl.push_back(flat(f));
  CVec wf = flat(w);
  for (size_t r = 0; r < cols.size(); ++r) {
    for (size_t k = 0; k < span.size(); ++k) {
      sys(static_cast<int>(2 * r), static_cast<int>(k)) = fl[k][r].re();
      sys(static_cast<int>(2 * r + 1), static_cast<int>(k)) = fl[k][r].im();
    }
    rhs.push_back(wf[r].re());
    rhs.push_back(wf[r].im());
  }
  return sys.solve(rhs);
}

int real_rank(const std::vector<PolyVectorField>& fs) {
  if (fs.empty()) return 0;
  std::map<std::pair<int, MPoly::Exp>, int> cols;
  for (const auto& f : fs)
    for (int i = 0; i < f.n_coords; ++i)
      for (const auto& [e, c] : f.comps[i].terms()) {
        auto key = std::make_pair(i, e);
        if (!cols.count(key)) {
          int sidx = static_cast<int>(cols.size());
          cols[key] = sidx;
        }
      }
  QMat mt(0, static_cast<int>(2 * cols.size()));
  for (const auto& f : fs) {
    QVec row(2 * cols.size(), Rat(0));
    for (int i = 0; i < f.n_coords; ++i)
      for (const auto& [e, c] : f.comps[i].terms()) {
        row[2 * cols.at({i, e})] = c.re();
        row[2 * cols.at({i, e}) + 1] = c.im();
      }
    mt.append_row(row);
  }
  return mt.rank();
}

PolyVectorField specialize_field(const CRModel& m, const PolyVectorField& f,
                                 const std::map<std::string, Rat>& params) {
  std::map<size_t, GaussRat> at;
  for (const auto& [name, v] : params) {
    auto idx = m.ring->index_of(name);
    if (!idx) throw std::invalid_argument("unknown parameter " + name);
    at[*idx] = GaussRat(v);
  }
  PolyVectorField r = f;
  for (auto& c : r.comps) c = c.eval_partial(at);
  return r;
}

std::vector<std::map<std::string, Rat>> sample_assignments(
    const CRModel& m, const std::vector<Rat>& extra) {
  std::vector<std::map<std::string, Rat>> out;
  if (m.params.empty()) {
    out.push_back({});
    return out;
  }
  std::vector<Rat> values = default_parameter_samples();
  for (const auto& e : extra) values.push_back(e);
  for (const auto& v : values) {
    std::map<std::string, Rat> a;
    for (const auto& p : m.params) a[p] = v;
    out.push_back(a);
  }
  if (m.params.size() > 1) {
    // a few mixed assignments
    for (const auto& v : values) {
      std::map<std::string, Rat> a;
      for (size_t i = 0; i < m.params.size(); ++i)
        a[m.params[i]] = (i == 0) ? v : Rat(0);
      out.push_back(a);
      std::map<std::string, Rat> b;
      for (size_t i = 0; i < m.params.size(); ++i)
        b[m.params[i]] = (i + 1 == m.params.size()) ? v : Rat(1);
      out.push_back(b);
    }
  }
  return out;
}

}  // namespace

nlohmann::json SymmetryReport::to_json() const {
  nlohmann::json j;
  j["tangency"] = nlohmann::json::object();
  for (const auto& [n, ok] : tangency) j["tangency"][n] = ok;
  j["rank"] = rank;
  j["closed"] = closed;
  j["dimension"] = dimension;
  if (!offending.empty()) j["offending"] = offending;
  j["constants"] = nlohmann::json::array();
  for (const auto& row : constants) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : row.coeffs) coeffs.push_back(c.to_string());
    j["constants"].push_back({{"a", row.a}, {"b", row.b}, {"coeffs", coeffs}});
  }
  j["max_commuting"] = max_commuting;
  j["max_cliques"] = max_cliques;
  return j;
}

SymmetryReport closure(const CRModel& m, const std::vector<Rat>& extra_samples) {
  SymmetryReport rep;
  for (const auto& f : m.fields) {
    auto t = verify_tangency(m, f);
    rep.tangency.emplace_back(f.name, t.ok);
    if (!t.ok) {
      rep.offending = "field " + f.name + " is not tangent";
      return rep;
    }
  }
  auto assignments = sample_assignments(m, extra_samples);
  rep.samples = assignments;
  bool first = true;
  for (const auto& sigma : assignments) {
    std::vector<PolyVectorField> fs;
    for (const auto& f : m.fields) fs.push_back(specialize_field(m, f, sigma));
    int rk = real_rank(fs);
    if (first) rep.rank = rk;
    if (rk != rep.rank) {
      rep.offending = "field rank varies across parameter samples";
      return rep;
    }
    for (size_t a = 0; a < fs.size(); ++a)
      for (size_t b = a + 1; b < fs.size(); ++b) {
        PolyVectorField w = vf_bracket(fs[a], fs[b]);
        std::optional<QVec> coef;
        if (w.is_zero())
          coef = QVec(fs.size(), Rat(0));
        else
          coef = real_span_member(w, fs);
        if (!coef) {
          rep.offending = "[" + m.fields[a].name + "," + m.fields[b].name +
                          "] escapes the span; residual " +
                          (w.comps.empty() ? "0" : w.to_json()["components"].dump());
          return rep;
        }
        if (first)
          rep.constants.push_back({m.fields[a].name, m.fields[b].name, *coef});
      }
    first = false;
  }
  rep.closed = true;
  rep.dimension = rep.rank;
  // Jacobi of the emitted table (representative sample)
  {
    int nf = static_cast<int>(m.fields.size());
    auto c = [&](int a, int b, int k) {
      if (a == b) return Rat(0);
      bool flip = a > b;
      if (flip) std::swap(a, b);
      for (const auto& row : rep.constants)
        if (row.a == m.fields[a].name && row.b == m.fields[b].name)
          return flip ? -row.coeffs[k] : row.coeffs[k];
      return Rat(0);
    };
    for (int x = 0; x < nf; ++x)
      for (int y = x + 1; y < nf; ++y)
        for (int z = y + 1; z < nf; ++z)
          for (int t = 0; t < nf; ++t) {
            Rat s(0);
            for (int k = 0; k < nf; ++k)
              s += c(x, y, k) * c(k, z, t) + c(y, z, k) * c(k, x, t) +
                   c(z, x, k) * c(k, y, t);
            if (!s.is_zero())
              throw InternalConsistencyError("closure: Jacobi fails on the table");
          }
  }
  // largest pairwise-commuting subset of the listed fields, symbolically
  {
    int nf = static_cast<int>(m.fields.size());
    std::vector<uint32_t> adj(nf, 0);
    for (int a = 0; a < nf; ++a)
      for (int b = a + 1; b < nf; ++b)
        if (vf_bracket(m.fields[a], m.fields[b]).is_zero()) {
          adj[a] |= 1u << b;
          adj[b] |= 1u << a;
        }
    int best = 0;
    std::vector<uint32_t> best_sets;
    for (uint32_t s = 1; s < (1u << nf); ++s) {
      bool ok = true;
      for (int a = 0; a < nf && ok; ++a)
        if ((s & (1u << a)) && ((s & ~(1u << a)) & ~adj[a]) != 0) ok = false;
      if (!ok) continue;
      int size = __builtin_popcount(s);
      if (size > best) {
        best = size;
        best_sets.clear();
      }
      if (size == best) best_sets.push_back(s);
    }
    rep.max_commuting = best;
    for (uint32_t s : best_sets) {
      std::vector<std::string> names;
      for (int a = 0; a < nf; ++a)
        if (s & (1u << a)) names.push_back(m.fields[a].name);
      rep.max_cliques.push_back(names);
    }
  }
  return rep;
}

nlohmann::json ModelSymbol::to_json() const {
  nlohmann::json jj;
  jj["symbol"] = symbol.to_json();
  jj["reduced_growth"] = reduced_growth;
  jj["J"] = j.to_json();
  jj["r"] = r;
  if (hc_type) {
    jj["type"] = to_string(hc_type->type);
    jj["det"] = hc_type->det.to_string();
  }
  return jj;
}

ModelSymbol model_symbol(const CRModel& m, const std::map<std::string, Rat>& params) {
  for (const auto& p : m.params)
    if (!params.count(p))
      throw std::invalid_argument("model_symbol: assign parameter " + p);
  std::vector<PolyVectorField> fs;
  std::vector<int> fw;
  std::vector<int> wts(m.ring->nvars(), 0);
  for (size_t i = 0; i < m.coords.size(); ++i) {
    wts[i] = m.weights[i];
    wts[m.coords.size() + i] = m.weights[i];
  }
  for (const auto& f0 : m.fields) {
    auto t = verify_tangency(m, f0);
    if (!t.ok)
      throw std::invalid_argument("model_symbol: field " + f0.name + " is not tangent");
    PolyVectorField f = specialize_field(m, f0, params);
    // weight of the field: from any nonzero monomial
    std::optional<int> weight;
    for (size_t i = 0; i < m.coords.size(); ++i) {
      if (f.comps[i].is_zero()) continue;
      const auto& e = f.comps[i].terms().begin()->first;
      int wmono = 0;
      for (size_t v = 0; v < e.size(); ++v) wmono += e[v] * wts[v];
      weight = wts[i] - wmono;
      break;
    }
    if (!weight) continue;  // zero field
    if (*weight <= 0) continue;  // scaling and rotation directions
    fs.push_back(f);
    fw.push_back(*weight);
  }
  ModelSymbol out{nilpotent_symbol(fs, fw,
                                   std::vector<int>(wts.begin(),
                                                    wts.begin() + m.coords.size()),
                                   /*require_fundamental=*/false),
                  {},
                  {},
                  0,
                  std::nullopt};
  out.reduced_growth = out.symbol.growth().reduced;
  // the model J in the symbol basis: multiplication by i on the values of
  // the weight -1 fields at the origin
  {
    std::vector<PolyVectorField> g1;
    for (size_t i = 0; i < fs.size(); ++i)
      if (fw[i] == 1) g1.push_back(fs[i]);
    if (g1.size() != 2)
      throw std::invalid_argument("model_symbol: expected two weight -1 fields");
    std::map<size_t, GaussRat> origin;
    for (size_t v = 0; v < m.ring->nvars(); ++v) origin[v] = GaussRat(0);
    auto value_at0 = [&](const PolyVectorField& f) {
      CVec v;
      for (size_t i = 0; i < m.coords.size(); ++i)
        v.push_back(f.comps[i].eval_partial(origin).constant_value());
      return v;
    };
    CVec v1 = value_at0(g1[0]), v2 = value_at0(g1[1]);
    // solve i*v1 = b v1 + a v2 over the reals
    QMat sys(static_cast<int>(2 * v1.size()), 2);
    QVec rhs;
    for (size_t i = 0; i < v1.size(); ++i) {
      GaussRat iv = GaussRat::i() * v1[i];
      sys(static_cast<int>(2 * i), 0) = v1[i].re();
      sys(static_cast<int>(2 * i), 1) = v2[i].re();
      sys(static_cast<int>(2 * i + 1), 0) = v1[i].im();
      sys(static_cast<int>(2 * i + 1), 1) = v2[i].im();
      rhs.push_back(iv.re());
      rhs.push_back(iv.im());
    }
    auto sol = sys.solve(rhs);
    if (!sol)
      throw std::invalid_argument("model_symbol: the weight -1 fields do not span a J-line");
    out.j = ComplexStructure{(*sol)[1], (*sol)[0]};
  }
  out.r = cr_g0(out.symbol, out.j.matrix()).r;
  out.hc_type = classify_symbol_over_hc(out.symbol);
  return out;
}

}  // namespace crsym
