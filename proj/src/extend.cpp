#include "crsym/extend.hpp"

#include <algorithm>

namespace crsym {

GradedCochain::GradedCochain(GNLA m, int degree) : m_(std::move(m)), degree_(degree) {}

GradedCochain& GradedCochain::set(const std::string& a, const std::string& b, Rat v) {
  int ia = m_.index_of(a), ib = m_.index_of(b);
  if (ia < 0 || ib < 0) throw std::invalid_argument("cochain: unknown basis element");
  if (m_.grade_of(ia) + m_.grade_of(ib) != -degree_)
    throw std::invalid_argument("cochain: pair (" + a + "," + b +
                                ") is not of total degree " + std::to_string(degree_));
  if (ia == ib) throw std::invalid_argument("cochain: diagonal pair");
  if (ia > ib) {
    std::swap(ia, ib);
    v = -v;
  }
  if (v.is_zero())
    vals_.erase({ia, ib});
  else
    vals_[{ia, ib}] = v;
  return *this;
}

Rat GradedCochain::eval_basis(int a, int b) const {
  if (a == b) return Rat(0);
  bool flip = a > b;
  if (flip) std::swap(a, b);
  auto it = vals_.find({a, b});
  if (it == vals_.end()) return Rat(0);
  return flip ? -it->second : it->second;
}

Rat GradedCochain::eval(const QVec& x, const QVec& y) const {
  Rat s(0);
  for (const auto& [key, v] : vals_) {
    s += x[key.first] * y[key.second] * v;
    s -= x[key.second] * y[key.first] * v;
  }
  return s;
}

bool GradedCochain::is_zero() const { return vals_.empty(); }

GradedCochain GradedCochain::operator+(const GradedCochain& o) const {
  GradedCochain r = *this;
  for (const auto& [key, v] : o.vals_) {
    auto it = r.vals_.find(key);
    if (it == r.vals_.end()) {
      if (!v.is_zero()) r.vals_[key] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) r.vals_.erase(it);
    }
  }
  return r;
}

GradedCochain GradedCochain::operator*(const Rat& c) const {
  GradedCochain r(m_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [key, v] : vals_) r.vals_[key] = v * c;
  return r;
}

std::vector<std::pair<int, int>> GradedCochain::pair_universe(const GNLA& m, int degree) {
  std::vector<std::pair<int, int>> u;
  for (int a = 0; a < m.dim(); ++a)
    for (int b = a + 1; b < m.dim(); ++b)
      if (m.grade_of(a) + m.grade_of(b) == -degree) u.emplace_back(a, b);
  return u;
}

QVec GradedCochain::flat() const {
  auto universe = pair_universe(m_, degree_);
  QVec f;
  for (auto [a, b] : universe) f.push_back(eval_basis(a, b));
  return f;
}

nlohmann::json GradedCochain::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [key, v] : vals_)
    j.push_back({{"a", m_.name(key.first)},
                 {"b", m_.name(key.second)},
                 {"value", v.to_string()}});
  return j;
}

GradedCochain GradedCochain::from_json(const GNLA& m, int degree, const nlohmann::json& j) {
  GradedCochain w(m, degree);
  for (const auto& e : j)
    w.set(e.at("a").get<std::string>(), e.at("b").get<std::string>(),
          Rat::parse(e.at("value").get<std::string>()));
  return w;
}

bool is_closed(const GradedCochain& w) {
  const GNLA& m = w.base();
  for (int a = 0; a < m.dim(); ++a)
    for (int b = a + 1; b < m.dim(); ++b)
      for (int c = b + 1; c < m.dim(); ++c) {
        if (m.grade_of(a) + m.grade_of(b) + m.grade_of(c) != -w.degree()) continue;
        Rat s(0);
        auto term = [&](int x, int y, int z) {
          Rat t(0);
          for (const auto& u : m.bracket_basis(x, y)) t += u.c * w.eval_basis(u.idx, z);
          return t;
        };
        s -= term(a, b, c);
        s += term(a, c, b);
        s -= term(b, c, a);
        if (!s.is_zero()) return false;
      }
  return true;
}

std::vector<GradedCochain> cocycles(const GNLA& m) {
  int degree = m.depth() + 1;
  auto universe = GradedCochain::pair_universe(m, degree);
  std::map<std::pair<int, int>, int> pos;
  for (size_t i = 0; i < universe.size(); ++i) pos[universe[i]] = static_cast<int>(i);
  auto coeff_of = [&](int x, int y) {
    // coefficient vector of w(e_x, e_y) over unknowns
    QVec row(universe.size(), Rat(0));
    if (x == y) return row;
    bool flip = x > y;
    if (flip) std::swap(x, y);
    auto it = pos.find({x, y});
    if (it != pos.end()) row[it->second] = flip ? Rat(-1) : Rat(1);
    return row;
  };
  Mat<Rat> sys(0, static_cast<int>(universe.size()));
  for (int a = 0; a < m.dim(); ++a)
    for (int b = a + 1; b < m.dim(); ++b)
      for (int c = b + 1; c < m.dim(); ++c) {
        if (m.grade_of(a) + m.grade_of(b) + m.grade_of(c) != -degree) continue;
        QVec row(universe.size(), Rat(0));
        auto add_term = [&](int x, int y, int z, int sgn) {
          for (const auto& u : m.bracket_basis(x, y)) {
            QVec cw = coeff_of(u.idx, z);
            for (size_t i = 0; i < row.size(); ++i) row[i] += Rat(sgn) * u.c * cw[i];
          }
        };
        add_term(a, b, c, -1);
        add_term(a, c, b, +1);
        add_term(b, c, a, -1);
        bool nz = false;
        for (const auto& e : row)
          if (!e.is_zero()) nz = true;
        if (nz) sys.append_row(row);
      }
  std::vector<GradedCochain> out;
  for (const auto& sol : sys.nullspace()) {
    GradedCochain w(m, degree);
    for (size_t i = 0; i < universe.size(); ++i)
      if (!sol[i].is_zero())
        w.set(m.name(universe[i].first), m.name(universe[i].second), sol[i]);
    out.push_back(std::move(w));
  }
  return out;
}

GNLA extend_by(const GNLA& m, const std::vector<GradedCochain>& w) {
  if (w.empty()) throw std::invalid_argument("extend_by: no cocycles");
  int degree = m.depth() + 1;
  for (const auto& c : w) {
    if (c.degree() != degree)
      throw std::invalid_argument("extend_by: cocycle degree mismatch");
    if (!is_closed(c)) throw std::invalid_argument("extend_by: cochain is not closed");
  }
  {  // independence
    Mat<Rat> flat(0, static_cast<int>(GradedCochain::pair_universe(m, degree).size()));
    for (const auto& c : w) flat.append_row(c.flat());
    if (flat.rank() != static_cast<int>(w.size()))
      throw std::invalid_argument("extend_by: cocycles are dependent");
  }
  int d = static_cast<int>(w.size());
  // fundamentality of the would-be extension, checked on the pairing
  // g_{-1} x g_{-depth} -> R^d
  int d1 = m.grade_dim(1), dnu = m.grade_dim(m.depth());
  {
    Mat<Rat> p(0, d);  // rows: (x, y) pairs; surjectivity = generation
    for (int x = 0; x < d1; ++x)
      for (int y = 0; y < dnu; ++y) {
        QVec row(d, Rat(0));
        for (int t = 0; t < d; ++t)
          row[t] = w[t].eval_basis(m.grade_begin(1) + x, m.grade_begin(m.depth()) + y);
        p.append_row(row);
      }
    if (p.rank() != d)
      throw std::invalid_argument(
          "extension not fundamental: new grade is not bracket-generated");
    Mat<Rat> q(0, dnu);  // nondegeneracy in the g_{-depth} argument = centrality
    for (int x = 0; x < d1; ++x)
      for (int t = 0; t < d; ++t) {
        QVec row(dnu, Rat(0));
        for (int y = 0; y < dnu; ++y)
          row[y] = w[t].eval_basis(m.grade_begin(1) + x, m.grade_begin(m.depth()) + y);
        q.append_row(row);
      }
    auto ker = q.nullspace();
    if (!ker.empty()) {
      QVec witness(m.dim(), Rat(0));
      for (int y = 0; y < dnu; ++y) witness[m.grade_begin(m.depth()) + y] = ker[0][y];
      throw std::invalid_argument("extension not fundamental: " +
                                  m.format_vector(witness) + " stays central");
    }
  }
  std::vector<int> nd = m.dims();
  nd.push_back(d);
  std::vector<std::string> names;
  for (int i = 0; i < m.dim(); ++i) names.push_back(m.name(i));
  for (int t = 0; t < d; ++t) {
    std::string n = "e" + std::to_string(m.depth() + 1);
    if (d > 1) n += std::string(t + 1, '\'');
    names.push_back(n);
  }
  GNLABuilder b(nd, names);
  for (int x = 0; x < m.dim(); ++x)
    for (int y = x + 1; y < m.dim(); ++y) {
      SparseVec v = m.bracket_basis(x, y);
      for (int t = 0; t < d; ++t) {
        Rat c = w[t].eval_basis(x, y);
        if (!c.is_zero()) v.push_back({m.dim() + t, c});
      }
      if (!v.empty()) b.set_bracket_idx(x, y, std::move(v));
    }
  GNLA ext = b.build();
  auto val = ext.validate();
  if (!val.ok)
    throw InternalConsistencyError("extend_by: closed cocycle produced invalid algebra: " +
                                   val.message);
  auto fund = ext.is_fundamental();
  if (!fund.ok) throw std::invalid_argument("extension not fundamental: " + fund.message);
  return ext;
}

GradedCochain g0_action(const Derivation0& a, const GradedCochain& w) {
  const GNLA& m = w.base();
  GradedCochain r(m, w.degree());
  for (auto [x, y] : GradedCochain::pair_universe(m, w.degree())) {
    QVec ax = a.apply(m, m.unit(x)), ay = a.apply(m, m.unit(y));
    Rat v = -w.eval(ax, m.unit(y)) - w.eval(m.unit(x), ay);
    if (!v.is_zero()) r.set(m.name(x), m.name(y), v);
  }
  return r;
}

GradedCochain pullback(const GradedCochain& w, const std::vector<QMat>& blocks) {
  const GNLA& m = w.base();
  GradedCochain r(m, w.degree());
  auto apply = [&](int idx) {
    QVec v(m.dim(), Rat(0));
    int k = -m.grade_of(idx);
    int loc = idx - m.grade_begin(k);
    for (int rr = 0; rr < m.grade_dim(k); ++rr)
      v[m.grade_begin(k) + rr] = blocks[k - 1](rr, loc);
    return v;
  };
  for (auto [x, y] : GradedCochain::pair_universe(m, w.degree())) {
    Rat v = w.eval(apply(x), apply(y));
    if (!v.is_zero()) r.set(m.name(x), m.name(y), v);
  }
  return r;
}

std::string to_string(ExtensionType t) {
  switch (t) {
    case ExtensionType::hyperbolic: return "hyperbolic";
    case ExtensionType::elliptic: return "elliptic";
    case ExtensionType::parabolic: return "parabolic";
  }
  return "?";
}

namespace {

QMat hc_pairing(const GradedCochain& w) {
  const GNLA& m = w.base();
  if (m.dims() != std::vector<int>{2, 1, 2} || w.degree() != 4)
    throw std::invalid_argument("classify: expected a degree-4 cochain over m_HC");
  QMat p(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      p(i, j) = w.eval_basis(m.grade_begin(1) + i, m.grade_begin(3) + j);
  if (p(0, 1) != p(1, 0))
    throw InternalConsistencyError("classify: cocycle pairing is not symmetric");
  return p;
}

}  // namespace

HcClassification classify_hc_extension(const GradedCochain& w) {
  if (w.is_zero()) throw std::invalid_argument("classify: zero cocycle");
  QMat p = hc_pairing(w);
  Rat det = p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0);
  ExtensionType t = det.sgn() > 0   ? ExtensionType::elliptic
                    : det.sgn() < 0 ? ExtensionType::hyperbolic
                                    : ExtensionType::parabolic;
  return {t, p, det};
}

HcClassification classify_hc_pencil(const GradedCochain& w1, const GradedCochain& w2) {
  if (w1.is_zero() || w2.is_zero()) throw std::invalid_argument("classify: zero cocycle");
  QMat m1 = hc_pairing(w1), m2 = hc_pairing(w2);
  auto det2 = [](const QMat& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); };
  Rat a = det2(m1), c = det2(m2);
  Rat b = det2(m1 + m2) - a - c;  // polarization
  Rat disc = b * b - Rat(4) * a * c;
  ExtensionType t = disc.sgn() < 0   ? ExtensionType::elliptic
                    : disc.sgn() > 0 ? ExtensionType::hyperbolic
                                     : ExtensionType::parabolic;
  return {t, m1, disc};
}

std::optional<HcClassification> classify_symbol_over_hc(const GNLA& symbol) {
  const auto& g = symbol.growth().reduced;
  if (g.size() != 4 || g[0] != 2 || g[1] != 1 || g[2] != 2 || g[3] < 1 || g[3] > 2)
    return std::nullopt;
  GNLA hc = symbol.truncated();
  if (!hc.same_structure(m_hc()))
    throw InternalConsistencyError("classify_symbol_over_hc: truncation is not m_HC");
  int d4 = symbol.grade_dim(4);
  std::vector<GradedCochain> ws;
  for (int t = 0; t < d4; ++t) {
    GradedCochain w(hc, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        int a = symbol.grade_begin(1) + i;
        int b = symbol.grade_begin(3) + j;
        Rat v(0);
        for (const auto& term : symbol.bracket_basis(a, b))
          if (term.idx == symbol.grade_begin(4) + t) v = term.c;
        if (!v.is_zero()) w.set(hc.name(a), hc.name(b), v);
      }
    ws.push_back(w);
  }
  if (d4 == 1) return classify_hc_extension(ws[0]);
  return classify_hc_pencil(ws[0], ws[1]);
}

// --- the (2,1,...,1) enumerator ------------------------------------------

namespace {

struct Line {
  Rat alpha, beta;
};

const std::vector<Line>& sample_lines() {
  static const std::vector<Line> v = {
      {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)},  {Rat(1), Rat(-1)},
      {Rat(2), Rat(1)}, {Rat(1), Rat(2)}, {Rat(7), Rat(1)},  {Rat(-3), Rat(2)},
      {Rat(5), Rat(7)}, {Rat(1), Rat(7)}, {Rat(-1), Rat(2)},
  };
  return v;
}

// normal-form reduction of a 1-dim extension of a growth (2,1,...,1) base
std::optional<GNLA> reduce_line(const GNLA& m, GradedCochain w) {
  int nu = m.depth();
  int e1p = m.grade_begin(1), e1pp = e1p + 1;
  int etop = m.grade_begin(nu);
  Rat a = w.eval_basis(e1p, etop);
  Rat b = w.eval_basis(e1pp, etop);
  if (a.is_zero() && b.is_zero()) {
    // generation fails for this line
    return std::nullopt;
  }
  if (nu == 2) {
    // base heis3: the full GL(2) acts; kill b, then rescale
    if (a.is_zero()) {
      QMat swap(2, 2);
      swap(0, 1) = Rat(1);
      swap(1, 0) = Rat(1);
      auto phi = automorphism_from_g1(m, swap);
      if (!phi) throw InternalConsistencyError("enumerate_211: swap does not lift");
      w = pullback(w, *phi);
      a = w.eval_basis(e1p, etop);
      b = w.eval_basis(e1pp, etop);
    }
    if (!b.is_zero()) {
      QMat g = QMat::identity(2);  // e1'' -> e1'' - (b/a) e1'
      g(0, 1) = -(b / a);
      auto phi = automorphism_from_g1(m, g);
      if (!phi) throw InternalConsistencyError("enumerate_211: shear does not lift");
      w = pullback(w, *phi);
      a = w.eval_basis(e1p, etop);
      b = w.eval_basis(e1pp, etop);
    }
  } else if (!b.is_zero()) {
    // replace e1' by e1' + lambda e1''
    QMat g = QMat::identity(2);
    g(1, 0) = -(a / b);
    auto phi = automorphism_from_g1(m, g);
    if (!phi)
      throw InternalConsistencyError("enumerate_211: proof move is not an automorphism");
    w = pullback(w, *phi);
    a = w.eval_basis(e1p, etop);
    b = w.eval_basis(e1pp, etop);
    if (!a.is_zero())
      throw InternalConsistencyError("enumerate_211: shear failed to remove a");
  }
  // rescale the new central element
  Rat scale = b.is_zero() ? a : b;
  w = w * scale.inv();
  try {
    return extend_by(m, {w});
  } catch (const std::invalid_argument&) {
    return std::nullopt;  // not fundamental
  }
}

}  // namespace

Enumeration211 enumerate_211(int max_depth) {
  if (max_depth < 3 || max_depth > 9)
    throw std::invalid_argument("enumerate_211: max_depth in 3..9 required");
  Enumeration211 out;
  std::vector<std::pair<std::string, GNLA>> current = {{"Gou(2)", heis3()}};
  for (int depth = 3; depth <= max_depth; ++depth) {
    std::vector<std::pair<std::string, GNLA>> next;
    for (const auto& [label, m] : current) {
      auto z = cocycles(m);
      if (z.size() > 2)
        throw InternalConsistencyError("enumerate_211: cocycle space of dim > 2 over " +
                                       label);
      if (z.empty()) continue;
      for (const auto& line : sample_lines()) {
        if (z.size() == 1 && !(line.alpha == Rat(1) && line.beta == Rat(0))) continue;
        GradedCochain w = z[0] * line.alpha;
        if (z.size() == 2) w = w + z[1] * line.beta;
        if (w.is_zero()) continue;
        auto ext = reduce_line(m, w);
        if (!ext) continue;
        GNLA cand = ext->renamed_standard();
        std::string cand_label;
        if (cand.same_structure(gou(depth)))
          cand_label = "Gou(" + std::to_string(depth) + ")";
        else if (depth >= 5 && depth % 2 == 1 && cand.same_structure(ngou(depth)))
          cand_label = "nGou(" + std::to_string(depth) + ")";
        else
          throw InternalConsistencyError(
              "enumerate_211: extension escapes both normal forms at depth " +
              std::to_string(depth));
        bool seen = false;
        for (const auto& [l, g] : next)
          if (l == cand_label) seen = true;
        if (!seen) next.emplace_back(cand_label, cand);
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Enumeration211::DepthClasses dc;
    dc.depth = depth;
    for (const auto& [l, g] : next) {
      dc.labels.push_back(l);
      dc.algebras.push_back(g);
    }
    out.per_depth.push_back(std::move(dc));
    current = next;
  }
  return out;
}

}  // namespace crsym
