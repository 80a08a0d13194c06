#include "crsym/vfield.hpp"

#include <algorithm>
#include <map>

namespace crsym {

PolyVectorField PolyVectorField::zero(RingPtr ring, int n_coords, std::string name) {
  PolyVectorField f;
  f.ring = std::move(ring);
  f.n_coords = n_coords;
  f.comps.assign(n_coords, MPoly(f.ring));
  f.name = std::move(name);
  return f;
}

PolyVectorField PolyVectorField::coordinate(RingPtr ring, int n_coords, int axis,
                                            std::string name) {
  PolyVectorField f = zero(std::move(ring), n_coords, std::move(name));
  f.comps[axis] = MPoly::constant(f.ring, GaussRat(1));
  return f;
}

bool PolyVectorField::is_zero() const {
  return std::all_of(comps.begin(), comps.end(),
                     [](const MPoly& p) { return p.is_zero(); });
}

PolyVectorField PolyVectorField::operator+(const PolyVectorField& o) const {
  PolyVectorField r = *this;
  for (int i = 0; i < n_coords; ++i) r.comps[i] = comps[i] + o.comps[i];
  return r;
}

PolyVectorField PolyVectorField::operator*(const GaussRat& c) const {
  PolyVectorField r = *this;
  for (auto& p : r.comps) p = p * c;
  return r;
}

nlohmann::json PolyVectorField::to_json() const {
  nlohmann::json j;
  j["coords"] = nlohmann::json::array();
  for (int i = 0; i < n_coords; ++i) j["coords"].push_back(ring->var_name(i));
  nlohmann::json comps_j = nlohmann::json::object();
  for (int i = 0; i < n_coords; ++i)
    if (!comps[i].is_zero()) comps_j[ring->var_name(i)] = comps[i].to_string();
  j["components"] = comps_j;
  if (!name.empty()) j["name"] = name;
  return j;
}

PolyVectorField vf_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  if (x.ring != y.ring || x.n_coords != y.n_coords)
    throw std::invalid_argument("vf_bracket: different coordinate systems");
  PolyVectorField r = PolyVectorField::zero(x.ring, x.n_coords);
  for (int i = 0; i < x.n_coords; ++i) {
    MPoly acc(x.ring);
    for (int j = 0; j < x.n_coords; ++j) {
      if (!x.comps[j].is_zero()) acc += x.comps[j] * y.comps[i].derivative(j);
      if (!y.comps[j].is_zero()) acc -= y.comps[j] * x.comps[i].derivative(j);
    }
    r.comps[i] = acc;
  }
  return r;
}

namespace {

// flatten fields over a shared (coord, monomial) index
std::vector<CVec> flatten(const std::vector<PolyVectorField>& fs,
                          const PolyVectorField& extra, bool with_extra) {
  std::map<std::pair<int, MPoly::Exp>, int> cols;
  auto scan = [&](const PolyVectorField& f) {
    for (int i = 0; i < f.n_coords; ++i)
      for (const auto& [e, c] : f.comps[i].terms()) {
        auto key = std::make_pair(i, e);
        if (!cols.count(key)) {
          int s = static_cast<int>(cols.size());
          cols[key] = s;
        }
      }
  };
  for (const auto& f : fs) scan(f);
  if (with_extra) scan(extra);
  auto flat = [&](const PolyVectorField& f) {
    CVec v(cols.size(), GaussRat(0));
    for (int i = 0; i < f.n_coords; ++i)
      for (const auto& [e, c] : f.comps[i].terms()) v[cols.at({i, e})] = c;
    return v;
  };
  std::vector<CVec> out;
  for (const auto& f : fs) out.push_back(flat(f));
  if (with_extra) out.push_back(flat(extra));
  return out;
}

}  // namespace

std::optional<CVec> vf_member(const PolyVectorField& v,
                              const std::vector<PolyVectorField>& span) {
  auto flats = flatten(span, v, true);
  CVec target = flats.back();
  flats.pop_back();
  return span_member(target, flats);
}

ChartGrowth growth_at(const DistributionChart& d, bool weak) {
  if (d.gens.empty()) throw std::invalid_argument("growth_at: empty chart");
  const auto& ring = d.gens[0].ring;
  int nc = d.gens[0].n_coords;
  if (static_cast<int>(d.base_point.size()) != nc)
    throw std::invalid_argument("growth_at: base point size");
  if (static_cast<int>(ring->nvars()) != nc)
    throw std::invalid_argument("growth_at: parameters present; specialize first");
  std::map<size_t, GaussRat> at;
  for (int i = 0; i < nc; ++i) at[i] = d.base_point[i];
  auto eval = [&](const PolyVectorField& f) {
    CVec v(nc, GaussRat(0));
    for (int i = 0; i < nc; ++i) {
      MPoly p = f.comps[i].eval_partial(at);
      v[i] = p.constant_value();
    }
    return v;
  };
  auto rank_of = [&](const std::vector<CVec>& vecs) {
    // rank of the real span: split each complex coordinate into re/im
    QMat m(0, 2 * nc);
    for (const auto& v : vecs) {
      QVec row(2 * nc, Rat(0));
      for (int i = 0; i < nc; ++i) {
        row[2 * i] = v[i].re();
        row[2 * i + 1] = v[i].im();
      }
      m.append_row(row);
    }
    return m.rank();
  };
  std::vector<PolyVectorField> flag = d.gens;
  std::vector<CVec> values;
  for (const auto& g : d.gens) values.push_back(eval(g));
  int r1 = rank_of(values);
  if (r1 != static_cast<int>(d.gens.size()))
    throw std::invalid_argument("growth_at: generators dependent at base point");
  ChartGrowth out;
  out.cumulative.push_back(r1);
  size_t level_begin = 0;
  // complexified frames span real directions in the re/im splitting, so the
  // rank can exceed the coordinate count; stop only at stabilization or at
  // the full real dimension
  for (int step = 0; step < 2 * nc + 1; ++step) {
    size_t level_end = flag.size();
    std::vector<PolyVectorField> next;
    if (weak) {
      for (const auto& g : d.gens)
        for (size_t i = level_begin; i < level_end; ++i)
          next.push_back(vf_bracket(g, flag[i]));
    } else {
      for (size_t i = 0; i < level_end; ++i)
        for (size_t j = i + 1; j < level_end; ++j)
          next.push_back(vf_bracket(flag[i], flag[j]));
    }
    for (auto& f : next) {
      flag.push_back(f);
      values.push_back(eval(f));
    }
    int r = rank_of(values);
    if (r == out.cumulative.back()) break;
    out.cumulative.push_back(r);
    level_begin = weak ? level_end : 0;
    if (r == 2 * nc) break;
  }
  int prev = 0;
  for (int c : out.cumulative) {
    out.reduced.push_back(c - prev);
    prev = c;
  }
  return out;
}

DistributionChart prolong_chart(const DistributionChart& d, const std::string& fiber_name) {
  if (d.gens.size() != 2) throw std::invalid_argument("prolong_chart: need 2 generators");
  const auto& oldring = d.gens[0].ring;
  int nc = d.gens[0].n_coords;
  if (static_cast<int>(oldring->nvars()) != nc)
    throw std::invalid_argument("prolong_chart: parameters unsupported here");
  {
    // rank 2 at the base point is part of the contract
    ChartGrowth g = growth_at(d);
    (void)g;
  }
  std::vector<std::string> vars = oldring->vars();
  vars.push_back(fiber_name);
  RingPtr ring = make_ring(vars);
  std::vector<MPoly> images;
  for (int i = 0; i < nc; ++i) images.push_back(MPoly::variable(ring, i));
  auto inj = [&](const MPoly& p) { return p.substitute(ring, images); };
  MPoly p = MPoly::variable(ring, nc);
  PolyVectorField X = PolyVectorField::zero(ring, nc + 1, "Dx");
  for (int i = 0; i < nc; ++i)
    X.comps[i] = inj(d.gens[0].comps[i]) + p * inj(d.gens[1].comps[i]);
  PolyVectorField dp = PolyVectorField::coordinate(ring, nc + 1, nc, "d" + fiber_name);
  DistributionChart out;
  out.gens = {X, dp};
  out.base_point = d.base_point;
  out.base_point.push_back(GaussRat(0));
  return out;
}

GNLA nilpotent_symbol(const std::vector<PolyVectorField>& fields,
                      const std::vector<int>& field_weights,
                      const std::vector<int>& coord_weights,
                      bool require_fundamental) {
  if (fields.size() != field_weights.size())
    throw std::invalid_argument("nilpotent_symbol: weight count mismatch");
  if (fields.empty()) throw std::invalid_argument("nilpotent_symbol: no fields");
  const auto& ring = fields[0].ring;
  int nc = fields[0].n_coords;
  std::vector<int> wts(ring->nvars(), 0);  // parameters keep weight 0
  for (int i = 0; i < nc; ++i) wts[i] = coord_weights[i];
  // homogeneity of each declared field
  for (size_t f = 0; f < fields.size(); ++f) {
    int k = field_weights[f];
    if (k < 1) throw std::invalid_argument("nilpotent_symbol: weights must be negative");
    for (int i = 0; i < nc; ++i) {
      auto bad = fields[f].comps[i].find_non_homogeneous(wts, wts[i] - k);
      if (bad)
        throw std::invalid_argument(
            "nilpotent_symbol: field " + (fields[f].name.empty() ? std::to_string(f)
                                                                 : fields[f].name) +
            " is not homogeneous of weight -" + std::to_string(k) + ": monomial " +
            MPoly::monomial_string(*ring, *bad) + " in the " + ring->var_name(i) +
            " component");
    }
  }
  // grade -1 generators, in the given order
  std::vector<PolyVectorField> gens;
  for (size_t f = 0; f < fields.size(); ++f)
    if (field_weights[f] == 1) gens.push_back(fields[f]);
  if (gens.size() < 2) throw std::invalid_argument("nilpotent_symbol: need weight -1 fields");
  {
    auto flats = flatten(gens, gens[0], false);
    Mat<GaussRat> m(0, static_cast<int>(flats.empty() ? 0 : flats[0].size()));
    for (const auto& v : flats) m.append_row(v);
    if (m.rank() != static_cast<int>(gens.size()))
      throw std::invalid_argument("nilpotent_symbol: weight -1 fields are dependent");
  }
  std::vector<std::vector<PolyVectorField>> grades = {gens};
  int maxw = *std::max_element(wts.begin(), wts.end());
  for (int k = 2; k <= maxw; ++k) {
    std::vector<PolyVectorField> layer;
    for (const auto& g : gens)
      for (const auto& v : grades[k - 2]) {
        PolyVectorField w = vf_bracket(g, v);
        if (w.is_zero()) continue;
        if (!vf_member(w, layer)) layer.push_back(w);
      }
    if (layer.empty()) break;
    grades.push_back(layer);
  }
  // cross-check any supplied deeper fields against the generated basis
  for (size_t f = 0; f < fields.size(); ++f) {
    int k = field_weights[f];
    if (k == 1) continue;
    if (k > static_cast<int>(grades.size()) ||
        !vf_member(fields[f], grades[k - 1]))
      throw std::invalid_argument("nilpotent_symbol: supplied field " + fields[f].name +
                                  " is not in the bracket-generated span");
  }
  // structure constants in the generated basis
  std::vector<int> dims;
  std::vector<PolyVectorField> basis;
  std::vector<int> basis_grade;
  for (size_t k = 0; k < grades.size(); ++k) {
    dims.push_back(static_cast<int>(grades[k].size()));
    for (const auto& f : grades[k]) {
      basis.push_back(f);
      basis_grade.push_back(static_cast<int>(k) + 1);
    }
  }
  GNLABuilder bld(dims);
  int depth = static_cast<int>(dims.size());
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b) {
      int gt = basis_grade[a] + basis_grade[b];
      PolyVectorField w = vf_bracket(basis[a], basis[b]);
      if (w.is_zero()) continue;
      if (gt > depth)
        throw InternalConsistencyError("nilpotent_symbol: bracket escapes the depth");
      auto coef = vf_member(w, basis);
      if (!coef)
        throw std::invalid_argument(
            "nilpotent_symbol: bracket escapes the span; specialize parameters first");
      SparseVec sv;
      for (size_t i = 0; i < basis.size(); ++i) {
        if ((*coef)[i].is_zero()) continue;
        if (basis_grade[i] != gt)
          throw InternalConsistencyError("nilpotent_symbol: graded bracket mixed grades");
        if (!(*coef)[i].is_real())
          throw InternalConsistencyError(
              "nilpotent_symbol: non-real structure constant " + (*coef)[i].to_string());
        sv.push_back({static_cast<int>(i), (*coef)[i].re()});
      }
      if (!sv.empty()) bld.set_bracket_idx(static_cast<int>(a), static_cast<int>(b), sv);
    }
  GNLA m = bld.build();
  auto val = m.validate();
  if (!val.ok) throw InternalConsistencyError("nilpotent_symbol: " + val.message);
  if (require_fundamental) {
    auto fund = m.is_fundamental();
    if (!fund.ok)
      throw std::invalid_argument("nilpotent_symbol: not fundamental: " + fund.message);
  }
  return m;
}

DistributionChart goursat_chart(int n) {
  if (n < 2) throw std::invalid_argument("goursat_chart: n >= 2");
  std::vector<std::string> vars = {"x"};
  for (int i = 0; i <= n - 1; ++i) vars.push_back("y" + std::to_string(i));
  RingPtr ring = make_ring(vars);
  int nc = n + 1;
  PolyVectorField dx = PolyVectorField::zero(ring, nc, "Dx");
  dx.comps[0] = MPoly::constant(ring, GaussRat(1));
  for (int i = 0; i <= n - 2; ++i)
    dx.comps[1 + i] = MPoly::variable(ring, 1 + i + 1);  // y_{i+1} d/dy_i
  PolyVectorField last = PolyVectorField::coordinate(ring, nc, nc - 1, "dy_top");
  DistributionChart d;
  d.gens = {dx, last};
  d.base_point.assign(nc, GaussRat(0));
  return d;
}

DistributionChart hilbert_cartan_chart() {
  RingPtr ring = make_ring({"x", "y0", "z0", "z1", "z2"});
  PolyVectorField dx = PolyVectorField::zero(ring, 5, "Dx");
  dx.comps[0] = MPoly::constant(ring, GaussRat(1));
  dx.comps[1] = MPoly::variable(ring, 4, 2);  // z2^2 d/dy0
  dx.comps[2] = MPoly::variable(ring, 3);     // z1 d/dz0
  dx.comps[3] = MPoly::variable(ring, 4);     // z2 d/dz1
  PolyVectorField dz2 = PolyVectorField::coordinate(ring, 5, 4, "dz2");
  DistributionChart d;
  d.gens = {dx, dz2};
  d.base_point.assign(5, GaussRat(0));
  return d;
}

DistributionChart g2b_chart() {
  RingPtr ring = make_ring({"x", "y0", "z0", "z1", "z2", "z3"});
  PolyVectorField dx = PolyVectorField::zero(ring, 6, "Dx");
  dx.comps[0] = MPoly::constant(ring, GaussRat(1));
  dx.comps[1] = MPoly::variable(ring, 4, 2);  // z2^2 d/dy0
  dx.comps[2] = MPoly::variable(ring, 3);     // z1 d/dz0
  dx.comps[3] = MPoly::variable(ring, 4);     // z2 d/dz1
  dx.comps[4] = MPoly::variable(ring, 5);     // z3 d/dz2
  PolyVectorField dz3 = PolyVectorField::coordinate(ring, 6, 5, "dz3");
  DistributionChart d;
  d.gens = {dx, dz3};
  d.base_point.assign(6, GaussRat(0));
  return d;
}

}  // namespace crsym
