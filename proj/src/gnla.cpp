#include "crsym/gnla.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace crsym {

struct GNLA::Impl {
  int depth = 0;
  std::vector<int> dims;
  std::vector<std::string> names;
  std::vector<int> grades;       // negative
  std::vector<int> grade_start;  // grade_start[k-1] = first index of g_{-k}
  std::unordered_map<std::string, int> name_idx;
  // br[a * n + b] for a < b
  std::vector<SparseVec> br;
};

std::vector<std::string> standard_basis_names(const std::vector<int>& dims) {
  std::vector<std::string> names;
  for (size_t k = 0; k < dims.size(); ++k)
    for (int j = 0; j < dims[k]; ++j) {
      std::string n = "e" + std::to_string(k + 1);
      if (dims[k] > 1) n += std::string(j + 1, '\'');
      names.push_back(n);
    }
  return names;
}

int GNLA::depth() const { return p_->depth; }
const std::vector<int>& GNLA::dims() const { return p_->dims; }
int GNLA::dim() const { return static_cast<int>(p_->names.size()); }
int GNLA::grade_of(int idx) const { return p_->grades[idx]; }
int GNLA::grade_dim(int k) const {
  return (k >= 1 && k <= p_->depth) ? p_->dims[k - 1] : 0;
}
int GNLA::grade_begin(int k) const { return p_->grade_start[k - 1]; }
const std::string& GNLA::name(int idx) const { return p_->names[idx]; }

int GNLA::index_of(const std::string& name) const {
  auto it = p_->name_idx.find(name);
  return it == p_->name_idx.end() ? -1 : it->second;
}

SparseVec GNLA::bracket_basis(int a, int b) const {
  if (a == b) return {};
  if (a < b) return p_->br[size_t(a) * dim() + b];
  SparseVec v = p_->br[size_t(b) * dim() + a];
  for (auto& t : v) t.c = -t.c;
  return v;
}

QVec GNLA::bracket_elem(int a, const QVec& y) const {
  QVec r(dim(), Rat(0));
  for (int b = 0; b < dim(); ++b) {
    if (y[b].is_zero()) continue;
    for (const auto& t : bracket_basis(a, b)) r[t.idx] += y[b] * t.c;
  }
  return r;
}

QVec GNLA::bracket(const QVec& x, const QVec& y) const {
  QVec r(dim(), Rat(0));
  for (int a = 0; a < dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < dim(); ++b) {
      if (y[b].is_zero()) continue;
      for (const auto& t : bracket_basis(a, b)) r[t.idx] += x[a] * y[b] * t.c;
    }
  }
  return r;
}

QVec GNLA::unit(int idx) const {
  QVec v(dim(), Rat(0));
  v[idx] = Rat(1);
  return v;
}

std::string GNLA::format_vector(const QVec& v) const {
  std::string s;
  for (int i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + v[i].to_string() + ")*" + name(i);
  }
  return s.empty() ? "0" : s;
}

CheckReport GNLA::validate() const {
  const int n = dim();
  // grading additivity on stored pairs (checked silently first: when it
  // holds, Jacobi may skip triples below -depth)
  CheckReport grading{true, ""};
  for (int a = 0; a < n && grading.ok; ++a)
    for (int b = a + 1; b < n && grading.ok; ++b) {
      int g = grade_of(a) + grade_of(b);
      for (const auto& t : p_->br[size_t(a) * n + b]) {
        if (-g > depth()) {
          grading = {false, "grading: [" + name(a) + "," + name(b) +
                                "] nonzero below depth"};
          break;
        }
        if (grade_of(t.idx) != g) {
          grading = {false, "grading: [" + name(a) + "," + name(b) + "] has term " +
                                name(t.idx) + " of grade " +
                                std::to_string(grade_of(t.idx))};
          break;
        }
      }
    }
  // Jacobi on basis triples; reported first so an injected bad relation is
  // diagnosed at its violating triple
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (grading.ok && -(grade_of(a) + grade_of(b) + grade_of(c)) > depth())
          continue;
        std::map<int, Rat> acc;
        auto accumulate = [&](int x, int y, int z) {
          for (const auto& t : bracket_basis(x, y))
            for (const auto& u : bracket_basis(t.idx, z)) {
              acc[u.idx] += t.c * u.c;
            }
        };
        accumulate(a, b, c);
        accumulate(b, c, a);
        accumulate(c, a, b);
        for (const auto& [idx, coef] : acc)
          if (!coef.is_zero())
            return {false, "Jacobi fails at (" + name(a) + "," + name(b) + "," +
                               name(c) + ")"};
      }
  return grading;
}

CheckReport GNLA::is_fundamental() const {
  const int n = dim();
  // (i) iterated brackets of g_{-1} span every grade
  std::vector<QVec> prev;
  for (int i = 0; i < grade_dim(1); ++i) prev.push_back(unit(grade_begin(1) + i));
  for (int k = 2; k <= depth(); ++k) {
    std::vector<QVec> next;
    for (int i = 0; i < grade_dim(1); ++i)
      for (const auto& v : prev) next.push_back(bracket_elem(grade_begin(1) + i, v));
    // restrict to grade -k coordinates
    int b0 = grade_begin(k), dk = grade_dim(k);
    Mat<Rat> m(0, dk);
    std::vector<QVec> local;
    for (const auto& v : next) {
      QVec loc(v.begin() + b0, v.begin() + b0 + dk);
      m.append_row(loc);
      local.push_back(loc);
    }
    if (m.rank() < dk) {
      for (int j = 0; j < dk; ++j) {
        QVec e(dk, Rat(0));
        e[j] = Rat(1);
        if (!span_member(e, local))
          return {false, "not generated: " + name(b0 + j) +
                             " is not an iterated bracket of g_{-1}"};
      }
    }
    prev = std::move(next);
  }
  // (ii) center == g_{-depth}
  Mat<Rat> ad(0, n);
  for (int b = 0; b < n; ++b) {
    // rows: coordinates of [x, e_b] as linear map of x
    std::vector<QVec> rows(n, QVec(n, Rat(0)));
    for (int a = 0; a < n; ++a)
      for (const auto& t : bracket_basis(a, b)) rows[t.idx][a] += t.c;
    for (int coord = 0; coord < n; ++coord) {
      bool nz = false;
      for (const auto& x : rows[coord])
        if (!x.is_zero()) nz = true;
      if (nz) ad.append_row(rows[coord]);
    }
  }
  auto center = ad.nullspace();
  int dnu = grade_dim(depth());
  if (static_cast<int>(center.size()) != dnu) {
    for (const auto& v : center) {
      for (int i = 0; i < n - dnu; ++i)
        if (!v[i].is_zero())
          return {false, "center exceeds g_{-depth}: contains " + format_vector(v)};
    }
    return {false, "center smaller than g_{-depth}"};
  }
  return {true, ""};
}

GrowthReport GNLA::growth() const {
  GrowthReport g;
  g.reduced = dims();
  int acc = 0;
  for (int d : g.reduced) g.cumulative.push_back(acc += d);
  return g;
}

GNLA GNLA::renamed(std::vector<std::string> names) const {
  auto impl = std::make_shared<Impl>(*p_);
  if (names.size() != impl->names.size())
    throw std::invalid_argument("renamed: name count mismatch");
  impl->names = std::move(names);
  impl->name_idx.clear();
  for (size_t i = 0; i < impl->names.size(); ++i)
    impl->name_idx[impl->names[i]] = static_cast<int>(i);
  GNLA g;
  g.p_ = impl;
  return g;
}

GNLA GNLA::renamed_standard() const { return renamed(standard_basis_names(dims())); }

GNLA GNLA::truncated() const {
  if (depth() < 2) throw std::invalid_argument("truncated: depth < 2");
  std::vector<int> nd(dims().begin(), dims().end() - 1);
  int keep = 0;
  for (int d : nd) keep += d;
  GNLABuilder b(nd, std::vector<std::string>(p_->names.begin(), p_->names.begin() + keep));
  for (int a = 0; a < keep; ++a)
    for (int c = a + 1; c < keep; ++c) {
      SparseVec v;
      for (const auto& t : p_->br[size_t(a) * dim() + c])
        if (t.idx < keep) v.push_back(t);
      if (!v.empty()) b.set_bracket_idx(a, c, std::move(v));
    }
  return b.build();
}

nlohmann::json GNLA::to_json() const {
  nlohmann::json j;
  j["depth"] = depth();
  j["dims"] = dims();
  j["basis"] = nlohmann::json::array();
  for (int i = 0; i < dim(); ++i)
    j["basis"].push_back({{"name", name(i)}, {"grade", grade_of(i)}});
  j["brackets"] = nlohmann::json::array();
  for (int a = 0; a < dim(); ++a)
    for (int b = a + 1; b < dim(); ++b) {
      const auto& v = p_->br[size_t(a) * dim() + b];
      if (v.empty()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : v)
        terms.push_back({{"c", name(t.idx)}, {"coeff", t.c.to_string()}});
      j["brackets"].push_back({{"a", name(a)}, {"b", name(b)}, {"terms", terms}});
    }
  return j;
}

GNLA GNLA::from_json(const nlohmann::json& j) {
  std::vector<int> dims = j.at("dims").get<std::vector<int>>();
  if (static_cast<int>(dims.size()) != j.at("depth").get<int>())
    throw std::invalid_argument("GNLA JSON: depth/dims mismatch");
  std::vector<std::string> names;
  std::vector<int> grades;
  for (const auto& b : j.at("basis")) {
    names.push_back(b.at("name").get<std::string>());
    grades.push_back(b.at("grade").get<int>());
  }
  // basis must be listed grade by grade
  {
    size_t pos = 0;
    for (size_t k = 0; k < dims.size(); ++k)
      for (int c = 0; c < dims[k]; ++c, ++pos) {
        if (pos >= grades.size() || grades[pos] != -static_cast<int>(k + 1))
          throw std::invalid_argument("GNLA JSON: basis not ordered by grade");
      }
    if (pos != grades.size()) throw std::invalid_argument("GNLA JSON: basis size");
  }
  GNLABuilder bld(dims, names);
  for (const auto& e : j.at("brackets")) {
    std::vector<std::pair<std::string, Rat>> terms;
    for (const auto& t : e.at("terms"))
      terms.emplace_back(t.at("c").get<std::string>(),
                         Rat::parse(t.at("coeff").get<std::string>()));
    bld.set_bracket(e.at("a").get<std::string>(), e.at("b").get<std::string>(), terms);
  }
  return bld.build();
}

bool GNLA::same_structure(const GNLA& o) const {
  if (dims() != o.dims()) return false;
  if (p_->names != o.p_->names) return false;
  for (int a = 0; a < dim(); ++a)
    for (int b = a + 1; b < dim(); ++b) {
      const auto &x = p_->br[size_t(a) * dim() + b], &y = o.p_->br[size_t(a) * dim() + b];
      if (x.size() != y.size()) return false;
      for (size_t i = 0; i < x.size(); ++i)
        if (x[i].idx != y[i].idx || x[i].c != y[i].c) return false;
    }
  return true;
}

GNLABuilder::GNLABuilder(std::vector<int> dims)
    : GNLABuilder(dims, standard_basis_names(dims)) {}

GNLABuilder::GNLABuilder(std::vector<int> dims, std::vector<std::string> names)
    : dims_(std::move(dims)), names_(std::move(names)) {
  int total = 0;
  for (size_t k = 0; k < dims_.size(); ++k) {
    if (dims_[k] <= 0 && k + 1 < dims_.size())
      throw std::invalid_argument("GNLA: zero grade inside depth");
    total += dims_[k];
    for (int j = 0; j < dims_[k]; ++j) grades_.push_back(-static_cast<int>(k + 1));
  }
  if (static_cast<int>(names_.size()) != total)
    throw std::invalid_argument("GNLA: name count mismatch");
}

int GNLABuilder::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("GNLA: unknown basis element " + name);
}

void GNLABuilder::set_bracket(const std::string& a, const std::string& b,
                              const std::vector<std::pair<std::string, Rat>>& terms) {
  SparseVec v;
  for (const auto& [c, coef] : terms) v.push_back({index_of(c), coef});
  set_bracket_idx(index_of(a), index_of(b), std::move(v));
}

void GNLABuilder::set_bracket_idx(int a, int b, SparseVec v) {
  if (a == b) throw std::invalid_argument("GNLA: bracket [x,x]");
  if (a > b) {
    for (auto& t : v) t.c = -t.c;
    std::swap(a, b);
  }
  std::sort(v.begin(), v.end(), [](const SparseTerm& x, const SparseTerm& y) {
    return x.idx < y.idx;
  });
  auto key = std::make_pair(a, b);
  auto it = br_.find(key);
  if (it != br_.end()) {
    // allow a redundant antisymmetric duplicate, reject conflicts
    if (it->second.size() == v.size()) {
      bool same = true;
      for (size_t i = 0; i < v.size(); ++i)
        if (v[i].idx != it->second[i].idx || v[i].c != it->second[i].c) same = false;
      if (same) return;
    }
    throw std::invalid_argument("GNLA: bracket set twice for pair");
  }
  br_[key] = std::move(v);
}

GNLA GNLABuilder::build() {
  auto impl = std::make_shared<GNLA::Impl>();
  impl->depth = static_cast<int>(dims_.size());
  impl->dims = dims_;
  impl->names = names_;
  impl->grades = grades_;
  int start = 0;
  for (int d : dims_) {
    impl->grade_start.push_back(start);
    start += d;
  }
  for (size_t i = 0; i < names_.size(); ++i) impl->name_idx[names_[i]] = static_cast<int>(i);
  size_t n = names_.size();
  impl->br.assign(n * n, SparseVec{});
  for (auto& [key, v] : br_) {
    // drop explicit zeros
    SparseVec w;
    for (auto& t : v)
      if (!t.c.is_zero()) w.push_back(t);
    impl->br[size_t(key.first) * n + key.second] = std::move(w);
  }
  GNLA g;
  g.p_ = impl;
  return g;
}

// --- graded maps ---------------------------------------------------------

std::vector<QMat> derivation_from_g1(const GNLA& m, const QMat& on_g1) {
  std::vector<QMat> blocks;
  blocks.push_back(on_g1);
  for (int k = 2; k <= m.depth(); ++k) {
    int dk = m.grade_dim(k);
    // Solve A_k from Leibniz on pairs (g_{-1}, g_{-(k-1)}) whose brackets
    // span g_{-k}.  Unknowns: dk*dk entries.
    Mat<Rat> sys(0, dk * dk);
    QVec rhs_all;
    std::vector<QVec> rows;
    for (int i = 0; i < m.grade_dim(1); ++i) {
      int x = m.grade_begin(1) + i;
      for (int j = 0; j < m.grade_dim(k - 1); ++j) {
        int y = m.grade_begin(k - 1) + j;
        QVec v = m.bracket(m.unit(x), m.unit(y));
        // rhs = [A x, y] + [x, A y]
        QVec ax(m.dim(), Rat(0)), ay(m.dim(), Rat(0));
        for (int r = 0; r < m.grade_dim(1); ++r)
          ax[m.grade_begin(1) + r] = on_g1(r, i);
        for (int r = 0; r < m.grade_dim(k - 1); ++r)
          ay[m.grade_begin(k - 1) + r] = blocks[k - 2](r, j);
        QVec rhs = m.bracket(ax, m.unit(y));
        QVec t = m.bracket(m.unit(x), ay);
        for (int r = 0; r < m.dim(); ++r) rhs[r] += t[r];
        // equation: A_k * v_local = rhs_local
        int b0 = m.grade_begin(k);
        for (int r = 0; r < dk; ++r) {
          QVec row(dk * dk, Rat(0));
          for (int c = 0; c < dk; ++c) row[r * dk + c] = v[b0 + c];
          sys.append_row(row);
          rhs_all.push_back(rhs[b0 + r]);
        }
      }
    }
    auto sol = sys.solve(rhs_all);
    if (!sol) throw std::invalid_argument("derivation_from_g1: map does not propagate");
    QMat Ak(dk, dk);
    for (int r = 0; r < dk; ++r)
      for (int c = 0; c < dk; ++c) Ak(r, c) = (*sol)[r * dk + c];
    blocks.push_back(Ak);
  }
  return blocks;
}

static QVec apply_blocks(const GNLA& m, const std::vector<QMat>& blocks, const QVec& v) {
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

std::optional<std::vector<QMat>> automorphism_from_g1(const GNLA& m, const QMat& on_g1) {
  std::vector<QMat> blocks;
  blocks.push_back(on_g1);
  for (int k = 2; k <= m.depth(); ++k) {
    int dk = m.grade_dim(k);
    Mat<Rat> sys(0, dk * dk);
    QVec rhs_all;
    for (int i = 0; i < m.grade_dim(1); ++i) {
      int x = m.grade_begin(1) + i;
      for (int j = 0; j < m.grade_dim(k - 1); ++j) {
        int y = m.grade_begin(k - 1) + j;
        QVec v = m.bracket(m.unit(x), m.unit(y));
        QVec gx(m.dim(), Rat(0)), gy(m.dim(), Rat(0));
        for (int r = 0; r < m.grade_dim(1); ++r) gx[m.grade_begin(1) + r] = on_g1(r, i);
        for (int r = 0; r < m.grade_dim(k - 1); ++r)
          gy[m.grade_begin(k - 1) + r] = blocks[k - 2](r, j);
        QVec rhs = m.bracket(gx, gy);
        int b0 = m.grade_begin(k);
        for (int r = 0; r < dk; ++r) {
          QVec row(dk * dk, Rat(0));
          for (int c = 0; c < dk; ++c) row[r * dk + c] = v[b0 + c];
          sys.append_row(row);
          rhs_all.push_back(rhs[b0 + r]);
        }
      }
    }
    auto sol = sys.solve(rhs_all);
    if (!sol) return std::nullopt;
    QMat Gk(dk, dk);
    for (int r = 0; r < dk; ++r)
      for (int c = 0; c < dk; ++c) Gk(r, c) = (*sol)[r * dk + c];
    blocks.push_back(Gk);
  }
  // verify multiplicativity on all pairs
  for (int a = 0; a < m.dim(); ++a)
    for (int b = a + 1; b < m.dim(); ++b) {
      QVec lhs = apply_blocks(m, blocks, m.bracket(m.unit(a), m.unit(b)));
      QVec rhs = m.bracket(apply_blocks(m, blocks, m.unit(a)),
                           apply_blocks(m, blocks, m.unit(b)));
      for (int i = 0; i < m.dim(); ++i)
        if (lhs[i] != rhs[i]) return std::nullopt;
    }
  return blocks;
}

GNLA transformed(const GNLA& m, const std::vector<QMat>& blocks) {
  // inverse blocks
  std::vector<QMat> inv;
  for (int k = 1; k <= m.depth(); ++k) {
    int dk = m.grade_dim(k);
    const QMat& B = blocks[k - 1];
    QMat aug(dk, 2 * dk);
    for (int i = 0; i < dk; ++i) {
      for (int j = 0; j < dk; ++j) aug(i, j) = B(i, j);
      aug(i, dk + i) = Rat(1);
    }
    auto piv = aug.rref();
    if (static_cast<int>(piv.size()) != dk)
      throw std::invalid_argument("transformed: singular block");
    QMat I(dk, dk);
    for (int i = 0; i < dk; ++i)
      for (int j = 0; j < dk; ++j) I(i, j) = aug(i, dk + j);
    inv.push_back(I);
  }
  std::vector<std::string> names;
  for (int i = 0; i < m.dim(); ++i) names.push_back(m.name(i));
  GNLABuilder b(m.dims(), names);
  auto apply_inv = [&](const QVec& v) {
    QVec r(m.dim(), Rat(0));
    for (int k = 1; k <= m.depth(); ++k) {
      int b0 = m.grade_begin(k), dk = m.grade_dim(k);
      for (int c = 0; c < dk; ++c)
        for (int rr = 0; rr < dk; ++rr) r[b0 + rr] += inv[k - 1](rr, c) * v[b0 + c];
    }
    return r;
  };
  for (int x = 0; x < m.dim(); ++x)
    for (int y = x + 1; y < m.dim(); ++y) {
      QVec v = m.bracket(apply_inv(m.unit(x)), apply_inv(m.unit(y)));
      QVec w = apply_blocks(m, blocks, v);
      SparseVec sv;
      for (int i = 0; i < m.dim(); ++i)
        if (!w[i].is_zero()) sv.push_back({i, w[i]});
      if (!sv.empty()) b.set_bracket_idx(x, y, std::move(sv));
    }
  return b.build();
}

}  // namespace crsym
