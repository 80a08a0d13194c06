#include "crsym/prolong.hpp"

#include <algorithm>

namespace crsym {

QVec Derivation0::apply(const GNLA& m, const QVec& v) const {
  QVec r(m.dim(), Rat(0));
  for (int k = 1; k <= m.depth(); ++k) {
    int b0 = m.grade_begin(k), dk = m.grade_dim(k);
    for (int c = 0; c < dk; ++c) {
      if (v[b0 + c].is_zero()) continue;
      for (int rr = 0; rr < dk; ++rr) r[b0 + rr] += blocks[k - 1](rr, c) * v[b0 + c];
    }
  }
  return r;
}

QVec Derivation0::flat() const {
  QVec f;
  for (const auto& b : blocks)
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) f.push_back(b(i, j));
  return f;
}

Derivation0 grading_element(const GNLA& m) {
  Derivation0 z;
  for (int k = 1; k <= m.depth(); ++k) {
    QMat b(m.grade_dim(k), m.grade_dim(k));
    for (int i = 0; i < m.grade_dim(k); ++i) b(i, i) = Rat(-k);
    z.blocks.push_back(b);
  }
  return z;
}

bool leibniz_holds(const GNLA& m, const Derivation0& d) {
  for (int a = 0; a < m.dim(); ++a)
    for (int b = a + 1; b < m.dim(); ++b) {
      QVec lhs = d.apply(m, m.bracket(m.unit(a), m.unit(b)));
      QVec rhs = m.bracket(d.apply(m, m.unit(a)), m.unit(b));
      QVec t = m.bracket(m.unit(a), d.apply(m, m.unit(b)));
      for (int i = 0; i < m.dim(); ++i)
        if (lhs[i] != rhs[i] + t[i]) return false;
    }
  return true;
}

std::vector<Derivation0> der0(const GNLA& m) {
  // unknown layout: per grade k, row-major d_k x d_k block
  std::vector<int> off(m.depth() + 1, 0);
  int nu = 0;
  for (int k = 1; k <= m.depth(); ++k) {
    off[k] = nu;
    nu += m.grade_dim(k) * m.grade_dim(k);
  }
  auto var = [&](int k, int r, int c) { return off[k] + r * m.grade_dim(k) + c; };
  Mat<Rat> sys(0, nu);
  for (int a = 0; a < m.dim(); ++a)
    for (int b = a + 1; b < m.dim(); ++b) {
      int ga = -m.grade_of(a), gb = -m.grade_of(b);
      int gt = ga + gb;
      if (gt > m.depth()) continue;
      int t0 = m.grade_begin(gt), dt = m.grade_dim(gt);
      std::vector<QVec> rows(dt, QVec(nu, Rat(0)));
      // A [e_a, e_b]
      for (const auto& t : m.bracket_basis(a, b)) {
        int tloc = t.idx - t0;
        for (int r = 0; r < dt; ++r) rows[r][var(gt, r, tloc)] += t.c;
      }
      // -[A e_a, e_b]
      int aloc = a - m.grade_begin(ga);
      for (int r = 0; r < m.grade_dim(ga); ++r) {
        for (const auto& t : m.bracket_basis(m.grade_begin(ga) + r, b))
          rows[t.idx - t0][var(ga, r, aloc)] -= t.c;
      }
      // -[e_a, A e_b]
      int bloc = b - m.grade_begin(gb);
      for (int r = 0; r < m.grade_dim(gb); ++r) {
        for (const auto& t : m.bracket_basis(a, m.grade_begin(gb) + r))
          rows[t.idx - t0][var(gb, r, bloc)] -= t.c;
      }
      for (auto& row : rows) {
        bool nz = false;
        for (const auto& e : row)
          if (!e.is_zero()) nz = true;
        if (nz) sys.append_row(row);
      }
    }
  std::vector<Derivation0> out;
  for (const auto& sol : sys.nullspace()) {
    Derivation0 d;
    for (int k = 1; k <= m.depth(); ++k) {
      QMat b(m.grade_dim(k), m.grade_dim(k));
      for (int r = 0; r < m.grade_dim(k); ++r)
        for (int c = 0; c < m.grade_dim(k); ++c) b(r, c) = sol[var(k, r, c)];
      d.blocks.push_back(b);
    }
    out.push_back(std::move(d));
  }
  return out;
}

CrG0 cr_g0(const GNLA& m, const QMat& j_on_g1) {
  auto basis = der0(m);
  int d1 = m.grade_dim(1);
  if (j_on_g1.rows() != d1 || j_on_g1.cols() != d1)
    throw std::invalid_argument("cr_g0: J must act on g_{-1}");
  Mat<Rat> sys(0, static_cast<int>(basis.size()));
  for (int r = 0; r < d1; ++r)
    for (int c = 0; c < d1; ++c) {
      QVec row(basis.size(), Rat(0));
      bool nz = false;
      for (size_t i = 0; i < basis.size(); ++i) {
        const QMat& A = basis[i].blocks[0];
        Rat v(0);
        for (int k = 0; k < d1; ++k) v += A(r, k) * j_on_g1(k, c) - j_on_g1(r, k) * A(k, c);
        row[i] = v;
        if (!v.is_zero()) nz = true;
      }
      if (nz) sys.append_row(row);
    }
  CrG0 out;
  for (const auto& sol : sys.nullspace()) {
    Derivation0 d;
    for (int k = 1; k <= m.depth(); ++k) {
      QMat b(m.grade_dim(k), m.grade_dim(k));
      for (size_t i = 0; i < basis.size(); ++i) {
        if (sol[i].is_zero()) continue;
        for (int r = 0; r < m.grade_dim(k); ++r)
          for (int c = 0; c < m.grade_dim(k); ++c)
            b(r, c) += sol[i] * basis[i].blocks[k - 1](r, c);
      }
      d.blocks.push_back(b);
    }
    out.basis.push_back(std::move(d));
  }
  out.r = static_cast<int>(out.basis.size());
  return out;
}

namespace {

// Positive-degree element of the full prolongation tower: block maps
// phi_i : g_{-i} -> T_{p-i}, stored as (dim T_{p-i}) x d_i matrices.
struct PosElem {
  std::vector<QMat> phi;  // index i-1
};

struct Tower {
  const GNLA& m;
  std::vector<Derivation0> d0;           // T_0 basis
  std::vector<std::vector<PosElem>> U;   // U[p-1] = basis of full degree p

  int tdim(int q) const {
    if (q < 0) return -q <= m.depth() ? m.grade_dim(-q) : 0;
    if (q == 0) return static_cast<int>(d0.size());
    return static_cast<int>(U[q - 1].size());
  }

  // coordinates in T_{q-j} of [basis r of T_q, e_b] with b in g_{-j}
  QVec pair_bracket(int q, int r, int j, int bloc) const {
    QVec out(tdim(q - j), Rat(0));
    if (q < 0) {
      int gt = -q + j;
      if (gt > m.depth()) return out;
      int a = m.grade_begin(-q) + r;
      int b = m.grade_begin(j) + bloc;
      for (const auto& t : m.bracket_basis(a, b))
        out[t.idx - m.grade_begin(gt)] += t.c;
      return out;
    }
    if (q == 0) {
      const QMat& A = d0[r].blocks[j - 1];
      for (int i = 0; i < m.grade_dim(j); ++i) out[i] = A(i, bloc);
      return out;
    }
    const PosElem& e = U[q - 1][r];
    const QMat& blk = e.phi[j - 1];
    for (int i = 0; i < blk.rows(); ++i) out[i] = blk(i, bloc);
    return out;
  }
};

}  // namespace

nlohmann::json ProlongationReport::to_json() const {
  nlohmann::json j;
  j["dims_negative"] = dims_negative;
  j["dim_g0"] = dim_g0;
  j["dims_positive"] = dims_positive;
  j["rigid"] = rigid;
  j["terminated"] = terminated;
  if (total)
    j["total"] = *total;
  else
    j["total"] = nullptr;
  return j;
}

ProlongationReport prolong(const GNLA& m, const std::vector<Derivation0>& g0,
                           int max_degree, bool stop_at_zero) {
  Tower tw{m, der0(m), {}};
  // coordinates of g0 inside der0
  std::vector<QVec> d0flat;
  for (const auto& d : tw.d0) d0flat.push_back(d.flat());
  std::vector<QVec> cr_prev;  // CR component coordinates inside T_{p-1}
  for (const auto& g : g0) {
    auto c = span_member(g.flat(), d0flat);
    if (!c) throw std::invalid_argument("prolong: g0 is not inside der0(m)");
    cr_prev.push_back(*c);
  }
  ProlongationReport rep;
  for (int k = m.depth(); k >= 1; --k) rep.dims_negative.push_back(m.grade_dim(k));
  rep.dim_g0 = static_cast<int>(g0.size());

  for (int p = 1; p <= max_degree; ++p) {
    std::vector<int> off(m.depth() + 1, 0);
    int nu = 0;
    for (int i = 1; i <= m.depth(); ++i) {
      off[i] = nu;
      nu += tw.tdim(p - i) * m.grade_dim(i);
    }
    auto var = [&](int i, int r, int c) { return off[i] + r * m.grade_dim(i) + c; };
    Mat<Rat> sys(0, nu);
    for (int a = 0; a < m.dim(); ++a)
      for (int b = a + 1; b < m.dim(); ++b) {
        int i = -m.grade_of(a), j = -m.grade_of(b);
        int target = p - i - j;
        int td = tw.tdim(target);
        if (td == 0) continue;
        std::vector<QVec> rows(td, QVec(nu, Rat(0)));
        // phi([e_a, e_b])
        if (i + j <= m.depth())
          for (const auto& t : m.bracket_basis(a, b)) {
            int tloc = t.idx - m.grade_begin(i + j);
            for (int r = 0; r < td; ++r) rows[r][var(i + j, r, tloc)] += t.c;
          }
        // -[phi(e_a), e_b]
        int aloc = a - m.grade_begin(i), bloc = b - m.grade_begin(j);
        for (int r = 0; r < tw.tdim(p - i); ++r) {
          QVec v = tw.pair_bracket(p - i, r, j, bloc);
          for (int t = 0; t < td; ++t)
            if (!v[t].is_zero()) rows[t][var(i, r, aloc)] -= v[t];
        }
        // -[e_a, phi(e_b)] = +[phi(e_b), e_a]
        for (int r = 0; r < tw.tdim(p - j); ++r) {
          QVec v = tw.pair_bracket(p - j, r, i, aloc);
          for (int t = 0; t < td; ++t)
            if (!v[t].is_zero()) rows[t][var(j, r, bloc)] += v[t];
        }
        for (auto& row : rows) {
          bool nz = false;
          for (const auto& e : row)
            if (!e.is_zero()) nz = true;
          if (nz) sys.append_row(row);
        }
      }
    std::vector<PosElem> Up;
    for (const auto& sol : sys.nullspace()) {
      PosElem e;
      for (int i = 1; i <= m.depth(); ++i) {
        QMat blk(tw.tdim(p - i), m.grade_dim(i));
        for (int r = 0; r < blk.rows(); ++r)
          for (int c = 0; c < blk.cols(); ++c) blk(r, c) = sol[var(i, r, c)];
        e.phi.push_back(blk);
      }
      Up.push_back(std::move(e));
    }
    // CR filter: the bracket with g_{-1} (evaluation of phi_1) must land in
    // the previous CR component
    int prev_dim = tw.tdim(p - 1);
    Mat<Rat> subT(static_cast<int>(cr_prev.size()), prev_dim);
    for (size_t c = 0; c < cr_prev.size(); ++c)
      for (int i = 0; i < prev_dim; ++i) subT(static_cast<int>(c), i) = cr_prev[c][i];
    auto annihilators = subT.nullspace();  // covectors vanishing on the CR subspace
    Mat<Rat> filter(0, static_cast<int>(Up.size()));
    for (const auto& w : annihilators)
      for (int col = 0; col < m.grade_dim(1); ++col) {
        QVec row(Up.size(), Rat(0));
        bool nz = false;
        for (size_t s = 0; s < Up.size(); ++s) {
          Rat v(0);
          for (int i = 0; i < prev_dim; ++i) v += w[i] * Up[s].phi[0](i, col);
          row[s] = v;
          if (!v.is_zero()) nz = true;
        }
        if (nz) filter.append_row(row);
      }
    auto cr_coords = filter.nullspace();
    if (Up.empty()) cr_coords.clear();
    int crdim = static_cast<int>(cr_coords.size());
    rep.dims_positive.push_back(crdim);
    if (p == 1) rep.rigid = (crdim == 0);
    tw.U.push_back(std::move(Up));
    cr_prev = cr_coords;
    if (crdim == 0) {
      rep.terminated = true;
      if (stop_at_zero) break;
    }
  }
  if (rep.terminated) {
    long long tot = m.dim() + rep.dim_g0;
    for (int d : rep.dims_positive) tot += d;
    rep.total = tot;
  }
  return rep;
}

long long symmetry_bound(const GNLA& m, const QMat& j_on_g1) {
  auto g0 = cr_g0(m, j_on_g1);
  if (m.depth() <= 2) {
    auto rep = prolong(m, g0.basis);
    if (!rep.total)
      throw std::invalid_argument("symmetry_bound: prolongation does not terminate");
    return *rep.total;
  }
  auto rep = prolong(m, g0.basis, 1, true);
  if (rep.dims_positive.empty() || rep.dims_positive[0] != 0)
    throw InternalConsistencyError(
        "symmetry_bound: positive prolongation survives at depth > 2");
  return m.dim() + g0.r;
}

}  // namespace crsym
