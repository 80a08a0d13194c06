#include <algorithm>
#include <map>
#include <numeric>

#include "crsym/gnla.hpp"

namespace crsym {

GNLA heis3() {
  GNLABuilder b({2, 1});
  b.set_bracket("e1'", "e1''", {{"e2", Rat(1)}});
  return b.build();
}

GNLA gou(int n) {
  if (n < 2) throw std::invalid_argument("Gou(n) requires n >= 2");
  std::vector<int> dims(n, 1);
  dims[0] = 2;
  GNLABuilder b(dims);
  b.set_bracket("e1'", "e1''", {{"e2", Rat(1)}});
  for (int k = 2; k < n; ++k)
    b.set_bracket("e1'", "e" + std::to_string(k), {{"e" + std::to_string(k + 1), Rat(1)}});
  return b.build();
}

GNLA ngou(int n) {
  if (n < 5 || n % 2 == 0)
    throw std::invalid_argument("nGou(n) requires odd n >= 5");
  int k = (n - 1) / 2;
  std::vector<int> dims(n, 1);
  dims[0] = 2;
  GNLABuilder b(dims);
  b.set_bracket("e1'", "e1''", {{"e2", Rat(1)}});
  for (int j = 2; j <= n - 2; ++j)
    b.set_bracket("e1'", "e" + std::to_string(j), {{"e" + std::to_string(j + 1), Rat(1)}});
  std::string en = "e" + std::to_string(n);
  b.set_bracket("e1''", "e" + std::to_string(n - 1), {{en, Rat(1)}});
  for (int j = 2; j <= k; ++j) {
    Rat sign = (j % 2 == 0) ? Rat(-1) : Rat(1);
    b.set_bracket("e" + std::to_string(j), "e" + std::to_string(n - j), {{en, sign}});
  }
  return b.build();
}

GNLA m_hc() {
  GNLABuilder b({2, 1, 2});
  b.set_bracket("e1'", "e1''", {{"e2", Rat(1)}});
  b.set_bracket("e1'", "e2", {{"e3'", Rat(1)}});
  b.set_bracket("e1''", "e2", {{"e3''", Rat(1)}});
  return b.build();
}

GNLA ell6() {
  GNLABuilder b({2, 1, 2, 1});
  b.set_bracket("e1'", "e1''", {{"e2", Rat(1)}});
  b.set_bracket("e1'", "e2", {{"e3'", Rat(1)}});
  b.set_bracket("e1''", "e2", {{"e3''", Rat(1)}});
  b.set_bracket("e1'", "e3'", {{"e4", Rat(1)}});
  b.set_bracket("e1''", "e3''", {{"e4", Rat(1)}});
  return b.build();
}

GNLA ell7() {
  GNLABuilder b({2, 1, 2, 2});
  b.set_bracket("e1'", "e1''", {{"e2", Rat(1)}});
  b.set_bracket("e1'", "e2", {{"e3'", Rat(1)}});
  b.set_bracket("e1''", "e2", {{"e3''", Rat(1)}});
  b.set_bracket("e1'", "e3'", {{"e4'", Rat(1)}});
  b.set_bracket("e1''", "e3''", {{"e4'", Rat(-1)}});
  b.set_bracket("e1'", "e3''", {{"e4''", Rat(1)}});
  b.set_bracket("e1''", "e3'", {{"e4''", Rat(1)}});
  return b.build();
}

GNLA ell8() {
  GNLABuilder b({2, 1, 2, 1, 2});
  b.set_bracket("e1'", "e1''", {{"e2", Rat(1)}});
  b.set_bracket("e1'", "e2", {{"e3'", Rat(1)}});
  b.set_bracket("e1''", "e2", {{"e3''", Rat(1)}});
  b.set_bracket("e1'", "e3'", {{"e4", Rat(1)}});
  b.set_bracket("e1''", "e3''", {{"e4", Rat(1)}});
  b.set_bracket("e1'", "e4", {{"e5'", Rat(1)}});
  b.set_bracket("e2", "e3''", {{"e5'", Rat(1)}});
  b.set_bracket("e1''", "e4", {{"e5''", Rat(1)}});
  b.set_bracket("e2", "e3'", {{"e5''", Rat(-1)}});
  return b.build();
}

// --- free GNLA on the Lyndon basis --------------------------------------

long long necklace_dim(int k) {
  if (k < 1 || k > 62) throw std::invalid_argument("necklace_dim: k out of range");
  long long sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    // Moebius mu(d)
    int x = d, mu = 1;
    for (int p = 2; p * p <= x; ++p) {
      if (x % p == 0) {
        x /= p;
        if (x % p == 0) {
          mu = 0;
          break;
        }
        mu = -mu;
      }
    }
    if (mu != 0 && x > 1) mu = -mu;
    if (mu) sum += mu * (1ll << (k / d));
  }
  return sum / k;
}

namespace {

bool is_lyndon(const std::string& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w.compare(w.substr(i)) >= 0) return false;
  return true;
}

// lexicographically least (equivalently longest Lyndon) proper suffix
std::pair<std::string, std::string> std_factorization(const std::string& w) {
  size_t best = 1;
  for (size_t i = 2; i < w.size(); ++i)
    if (w.compare(i, std::string::npos, w, best, std::string::npos) < 0) best = i;
  return {w.substr(0, best), w.substr(best)};
}

std::vector<std::string> lyndon_words_upto(int n) {
  // Duval's generation on {x < y}
  std::vector<std::string> out;
  std::string w = "x";
  while (true) {
    out.push_back(w);
    std::string t = w;
    while (static_cast<int>(t.size()) < n) t.push_back(t[t.size() % w.size()]);
    while (!t.empty() && t.back() == 'y') t.pop_back();
    if (t.empty()) break;
    t.back() = 'y';
    w = t;
  }
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

struct FreeBracketTable {
  int depth;
  std::vector<std::string> words;                // sorted by (len, lex)
  std::map<std::string, int> index;
  std::map<std::pair<std::string, std::string>, SparseVec> memo;

  SparseVec bracket(const std::string& u, const std::string& v);
};

SparseVec negate(SparseVec v) {
  for (auto& t : v) t.c = -t.c;
  return v;
}

SparseVec add(const SparseVec& a, const SparseVec& b) {
  std::map<int, Rat> acc;
  for (const auto& t : a) acc[t.idx] += t.c;
  for (const auto& t : b) acc[t.idx] += t.c;
  SparseVec r;
  for (const auto& [i, c] : acc)
    if (!c.is_zero()) r.push_back({i, c});
  return r;
}

SparseVec scale(const SparseVec& a, const Rat& c) {
  SparseVec r;
  for (const auto& t : a) r.push_back({t.idx, t.c * c});
  return r;
}

SparseVec FreeBracketTable::bracket(const std::string& u, const std::string& v) {
  if (u == v) return {};
  if (u.size() + v.size() > static_cast<size_t>(depth)) return {};
  bool flip = (u > v);
  const std::string &a = flip ? v : u, &b = flip ? u : v;
  auto key = std::make_pair(a, b);
  auto it = memo.find(key);
  if (it == memo.end()) {
    SparseVec res;
    std::string w = a + b;
    if (is_lyndon(w) && std_factorization(w) == key) {
      res.push_back({index.at(w), Rat(1)});
    } else {
      auto [a1, a2] = std_factorization(a);
      // [a, b] = [[a1, b], a2] + [a1, [a2, b]]
      for (const auto& t : bracket(a1, b))
        res = add(res, scale(bracket(words[t.idx], a2), t.c));
      for (const auto& t : bracket(a2, b))
        res = add(res, scale(bracket(a1, words[t.idx]), t.c));
    }
    it = memo.emplace(key, std::move(res)).first;
  }
  return flip ? negate(it->second) : it->second;
}

}  // namespace

GNLA free_gnla(int depth, int depth_limit) {
  if (depth < 1) throw std::invalid_argument("free_gnla: depth >= 1 required");
  if (depth > depth_limit)
    throw ResourceLimitError("free_gnla: depth " + std::to_string(depth) +
                             " exceeds limit " + std::to_string(depth_limit));
  FreeBracketTable T;
  T.depth = depth;
  T.words = lyndon_words_upto(depth);
  for (size_t i = 0; i < T.words.size(); ++i) T.index[T.words[i]] = static_cast<int>(i);
  std::vector<int> dims(depth, 0);
  for (const auto& w : T.words) dims[w.size() - 1]++;
  for (int k = 1; k <= depth; ++k)
    if (dims[k - 1] != necklace_dim(k))
      throw InternalConsistencyError("free_gnla: Lyndon count != necklace number");
  GNLABuilder b(dims, T.words);
  for (size_t i = 0; i < T.words.size(); ++i)
    for (size_t j = i + 1; j < T.words.size(); ++j) {
      if (T.words[i].size() + T.words[j].size() > static_cast<size_t>(depth)) continue;
      SparseVec v = T.bracket(T.words[i], T.words[j]);
      if (!v.empty()) b.set_bracket_idx(static_cast<int>(i), static_cast<int>(j), std::move(v));
    }
  return b.build();
}

// --- quotients -----------------------------------------------------------

GNLA quotient(const GNLA& m, int k, const std::vector<QVec>& W) {
  if (k < 1 || k > m.depth()) throw std::invalid_argument("quotient: bad grade");
  for (const auto& w : W)
    if (static_cast<int>(w.size()) != m.grade_dim(k))
      throw std::invalid_argument("quotient: W vectors must be grade-local");
  // ideal per grade, spanned and rref-reduced
  std::vector<Mat<Rat>> ideal(m.depth() + 1, Mat<Rat>(0, 0));
  std::vector<std::vector<int>> pivots(m.depth() + 1);
  {
    Mat<Rat> mk(0, m.grade_dim(k));
    for (const auto& w : W) mk.append_row(w);
    pivots[k] = mk.rref();
    ideal[k] = mk;
  }
  for (int j = k + 1; j <= m.depth(); ++j) {
    Mat<Rat> mj(0, m.grade_dim(j));
    for (int i = 1; i <= j - k; ++i) {
      int jp = j - i;
      if (jp < k || pivots[jp].empty()) continue;
      for (size_t r = 0; r < pivots[jp].size(); ++r) {
        QVec v(m.dim(), Rat(0));
        for (int c = 0; c < m.grade_dim(jp); ++c)
          v[m.grade_begin(jp) + c] = ideal[jp](static_cast<int>(r), c);
        for (int x = 0; x < m.grade_dim(i); ++x) {
          QVec bv = m.bracket_elem(m.grade_begin(i) + x, v);
          QVec loc(bv.begin() + m.grade_begin(j), bv.begin() + m.grade_begin(j) + m.grade_dim(j));
          bool nz = false;
          for (const auto& e : loc)
            if (!e.is_zero()) nz = true;
          if (nz) mj.append_row(loc);
        }
      }
    }
    pivots[j] = mj.rref();
    // keep only the nonzero rows
    Mat<Rat> red(0, m.grade_dim(j));
    for (size_t r = 0; r < pivots[j].size(); ++r) {
      QVec row(m.grade_dim(j));
      for (int c = 0; c < m.grade_dim(j); ++c) row[c] = mj(static_cast<int>(r), c);
      red.append_row(row);
    }
    ideal[j] = red;
  }
  // complement coordinates per grade
  std::vector<std::vector<int>> keep(m.depth() + 1);
  std::vector<int> ndims;
  for (int j = 1; j <= m.depth(); ++j) {
    std::vector<bool> is_piv(m.grade_dim(j), false);
    if (j >= k)
      for (int c : pivots[j]) is_piv[c] = true;
    for (int c = 0; c < m.grade_dim(j); ++c)
      if (!is_piv[c]) keep[j].push_back(c);
    ndims.push_back(static_cast<int>(keep[j].size()));
  }
  while (!ndims.empty() && ndims.back() == 0) ndims.pop_back();
  int ndepth = static_cast<int>(ndims.size());
  for (int j = 1; j <= ndepth; ++j)
    if (ndims[j - 1] == 0)
      throw std::invalid_argument("quotient not fundamental: grade -" + std::to_string(j) +
                                  " collapses entirely");
  // reduce a grade-local vector mod the ideal
  auto reduce = [&](int j, QVec loc) {
    if (j >= k)
      for (size_t r = 0; r < pivots[j].size(); ++r) {
        int pc = pivots[j][r];
        if (loc[pc].is_zero()) continue;
        Rat f = loc[pc];
        for (int c = 0; c < m.grade_dim(j); ++c)
          loc[c] -= f * ideal[j](static_cast<int>(r), c);
      }
    return loc;
  };
  // new index map; surviving coordinates keep their names
  std::vector<int> new_begin(ndepth + 1, 0);
  for (int j = 2; j <= ndepth; ++j) new_begin[j] = new_begin[j - 1] + ndims[j - 2];
  std::vector<std::string> nnames;
  for (int j = 1; j <= ndepth; ++j)
    for (int c : keep[j]) nnames.push_back(m.name(m.grade_begin(j) + c));
  GNLABuilder bld(ndims, nnames);
  for (int i = 1; i <= ndepth; ++i)
    for (int j = i; j <= ndepth; ++j) {
      if (i + j > ndepth) continue;
      for (size_t xi = 0; xi < keep[i].size(); ++xi)
        for (size_t yj = 0; yj < keep[j].size(); ++yj) {
          int a = m.grade_begin(i) + keep[i][xi];
          int b = m.grade_begin(j) + keep[j][yj];
          if (b <= a) continue;
          QVec v = m.bracket(m.unit(a), m.unit(b));
          QVec loc(v.begin() + m.grade_begin(i + j),
                   v.begin() + m.grade_begin(i + j) + m.grade_dim(i + j));
          loc = reduce(i + j, std::move(loc));
          SparseVec sv;
          for (size_t c = 0; c < keep[i + j].size(); ++c)
            if (!loc[keep[i + j][c]].is_zero())
              sv.push_back({new_begin[i + j] + static_cast<int>(c), loc[keep[i + j][c]]});
          if (!sv.empty())
            bld.set_bracket_idx(new_begin[i] + static_cast<int>(xi),
                                new_begin[j] + static_cast<int>(yj), std::move(sv));
        }
    }
  GNLA q = bld.build();
  auto val = q.validate();
  if (!val.ok) throw std::invalid_argument("quotient: invalid result: " + val.message);
  auto fund = q.is_fundamental();
  if (!fund.ok) throw std::invalid_argument("quotient not fundamental: " + fund.message);
  return q;
}

std::vector<QVec> cauchy_directions(const GNLA& m, int level) {
  if (level != 1 && level != 2) throw std::invalid_argument("cauchy_directions: level 1 or 2");
  int d1 = m.grade_dim(1);
  Mat<Rat> sys(0, d1);
  int lo = (level == 1) ? 1 : 2;
  int hi = (level == 1) ? m.depth() : 2;
  for (int j = lo; j <= hi; ++j)
    for (int y = 0; y < m.grade_dim(j); ++y) {
      int b = m.grade_begin(j) + y;
      std::vector<QVec> coord_rows(m.dim(), QVec(d1, Rat(0)));
      for (int x = 0; x < d1; ++x) {
        int a = m.grade_begin(1) + x;
        for (const auto& t : m.bracket_basis(a, b)) coord_rows[t.idx][x] += t.c;
      }
      for (const auto& row : coord_rows) {
        bool nz = false;
        for (const auto& e : row)
          if (!e.is_zero()) nz = true;
        if (nz) sys.append_row(row);
      }
    }
  return sys.nullspace();
}

GNLA deprolong(const GNLA& m) {
  const auto& d = m.dims();
  if (m.depth() < 3 || d[0] != 2 || d[1] != 1 || d[2] != 1)
    throw std::runtime_error("not deprolongable");
  auto c2 = cauchy_directions(m, 2);
  if (c2.size() != 1) throw std::runtime_error("not deprolongable");
  QVec x = c2[0];
  int piv = x[0].is_zero() ? 1 : 0;  // coordinate of the killed direction
  int keep = 1 - piv;
  // induced brackets are only defined when the killed direction brackets
  // trivially with every grade below -1
  {
    QVec xv(m.dim(), Rat(0));
    xv[m.grade_begin(1)] = x[0];
    xv[m.grade_begin(1) + 1] = x[1];
    for (int j = 2; j <= m.depth(); ++j)
      for (int c = 0; c < m.grade_dim(j); ++c) {
        QVec w = m.bracket(xv, m.unit(m.grade_begin(j) + c));
        for (const auto& e : w)
          if (!e.is_zero()) throw std::runtime_error("not deprolongable");
      }
  }
  std::vector<int> ndims;
  ndims.push_back(2);  // (g_{-1}/<x>) + g_{-2}
  for (int j = 3; j <= m.depth(); ++j) ndims.push_back(m.grade_dim(j));
  int ndepth = static_cast<int>(ndims.size());
  // representatives of the new basis: class of the kept g_{-1} direction,
  // then the image of g_{-2} (last, for determinism), then g_{-3}...
  std::vector<QVec> reps;
  std::vector<int> rep_grade;  // new (positive) grade per position
  {
    QVec v(m.dim(), Rat(0));
    v[m.grade_begin(1) + keep] = Rat(1);
    reps.push_back(v);
    rep_grade.push_back(1);
    reps.push_back(m.unit(m.grade_begin(2)));
    rep_grade.push_back(1);
  }
  for (int j = 3; j <= m.depth(); ++j)
    for (int c = 0; c < m.grade_dim(j); ++c) {
      reps.push_back(m.unit(m.grade_begin(j) + c));
      rep_grade.push_back(j - 1);
    }
  // old coordinate -> new index; the killed direction has no image
  std::vector<int> old_to_new(m.dim(), -1);
  old_to_new[m.grade_begin(1) + keep] = 0;
  old_to_new[m.grade_begin(2)] = 1;
  {
    int pos = 2;
    for (int j = 3; j <= m.depth(); ++j)
      for (int c = 0; c < m.grade_dim(j); ++c) old_to_new[m.grade_begin(j) + c] = pos++;
  }
  auto new_grade_of_old = [&](int idx) {
    int g = -m.grade_of(idx);
    return g <= 2 ? 1 : g - 1;
  };
  GNLABuilder bld(ndims);
  for (size_t a = 0; a < reps.size(); ++a)
    for (size_t b = a + 1; b < reps.size(); ++b) {
      QVec v = m.bracket(reps[a], reps[b]);
      int expected = rep_grade[a] + rep_grade[b];
      SparseVec sv;
      for (int i = 0; i < m.dim(); ++i) {
        if (v[i].is_zero()) continue;
        if (old_to_new[i] < 0 || new_grade_of_old(i) != expected || expected > ndepth)
          throw std::runtime_error("not deprolongable");
        sv.push_back({old_to_new[i], v[i]});
      }
      if (!sv.empty())
        bld.set_bracket_idx(static_cast<int>(a), static_cast<int>(b), std::move(sv));
    }
  GNLA r = bld.build();
  auto val = r.validate();
  if (!val.ok) throw std::runtime_error("not deprolongable");
  auto fund = r.is_fundamental();
  if (!fund.ok) throw std::runtime_error("not deprolongable");
  return r;
}

GNLA catalog(const std::string& name, int param) {
  if (name == "heis3") return heis3();
  if (name == "Gou" || name == "gou") return gou(param);
  if (name == "nGou" || name == "ngou") return ngou(param);
  if (name == "m_HC" || name == "mhc") return m_hc();
  if (name == "ell6") return ell6();
  if (name == "ell7") return ell7();
  if (name == "ell8") return ell8();
  if (name == "mprime5") return mprime5();
  if (name == "mdblprime5") return mdblprime5();
  if (name == "free") return free_gnla(param);
  throw std::invalid_argument("catalog: unknown name " + name);
}

// --- sub-free quotients of free(5) --------------------------------------

namespace {

// derivation of the free algebra determined on generators x, y
std::vector<QVec> generator_derivation(const GNLA& f, const QVec& dx, const QVec& dy) {
  // image of every basis element, by Leibniz along standard factorizations;
  // basis elements are named by their Lyndon words
  std::vector<QVec> img(f.dim());
  for (int i = 0; i < f.dim(); ++i) {
    const std::string& w = f.name(i);
    if (w == "x") {
      img[i] = dx;
    } else if (w == "y") {
      img[i] = dy;
    } else {
      auto uv = std_factorization(w);
      int u = f.index_of(uv.first), v = f.index_of(uv.second);
      img[i] = f.bracket(img[u], f.unit(v));
      QVec t = f.bracket(f.unit(u), img[v]);
      for (int r = 0; r < f.dim(); ++r) img[i][r] += t[r];
    }
  }
  return img;
}

QVec apply_derivation(const std::vector<QVec>& der, const QVec& v) {
  QVec r(der[0].size(), Rat(0));
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (size_t j = 0; j < r.size(); ++j) r[j] += v[i] * der[i][j];
  }
  return r;
}

QVec grade_local(const GNLA& m, int k, const QVec& v) {
  return QVec(v.begin() + m.grade_begin(k), v.begin() + m.grade_begin(k) + m.grade_dim(k));
}

// sl2 isotypic pieces of g_{-5} in free(5): the span of the ad_x^4(y)
// F-orbit (spin 3/2... the 4-dimensional piece) and the complementary
// 2-dimensional piece killed by E in weight +1.
void g5_pieces(const GNLA& f, std::vector<QVec>& big, std::vector<QVec>& small) {
  QVec zero(f.dim(), Rat(0));
  QVec ex = f.unit(f.index_of("x")), ey = f.unit(f.index_of("y"));
  auto E = generator_derivation(f, zero, ex);  // E: y -> x
  auto F = generator_derivation(f, ey, zero);  // F: x -> y
  // highest weight vector of the 4-dim piece: the Lyndon word xxxxy
  QVec v = f.unit(f.index_of("xxxxy"));
  big.clear();
  for (int t = 0; t < 4; ++t) {
    big.push_back(grade_local(f, 5, v));
    v = apply_derivation(F, v);
  }
  // weight +1 vectors killed by E: combinations of xxxyy, xxyxy
  int i1 = f.index_of("xxxyy"), i2 = f.index_of("xxyxy");
  QVec e1 = apply_derivation(E, f.unit(i1)), e2 = apply_derivation(E, f.unit(i2));
  Mat<Rat> sys(0, 2);
  for (int r = 0; r < f.dim(); ++r) sys.append_row({e1[r], e2[r]});
  auto ns = sys.nullspace();
  if (ns.size() != 1)
    throw InternalConsistencyError("free(5): unexpected highest weight space");
  QVec u(f.dim(), Rat(0));
  for (int r = 0; r < f.dim(); ++r) u[r] = ns[0][0] * f.unit(i1)[r] + ns[0][1] * f.unit(i2)[r];
  small.clear();
  small.push_back(grade_local(f, 5, u));
  small.push_back(grade_local(f, 5, apply_derivation(F, u)));
}

}  // namespace

GNLA mprime5() {
  GNLA f = free_gnla(5);
  std::vector<QVec> big, small;
  g5_pieces(f, big, small);
  return quotient(f, 5, big).renamed_standard();
}

GNLA mdblprime5() {
  GNLA f = free_gnla(5);
  std::vector<QVec> big, small;
  g5_pieces(f, big, small);
  return quotient(f, 5, small).renamed_standard();
}

}  // namespace crsym
