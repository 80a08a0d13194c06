#ifndef CRSYM_MATRIX_HPP
#define CRSYM_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "crsym/mpoly.hpp"
#include "crsym/rat.hpp"

namespace crsym {

// Dense matrix over an exact field scalar (Rat or GaussRat).
template <class S>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  S& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if ((*this)(i, k) == S(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  Mat operator*(const S& c) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
  }

  void append_row(const std::vector<S>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("Mat: row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
  }

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (!((*this)(i, c) == S(0))) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      S inv = S(1) / (*this)(r, c);
      for (int j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r) continue;
        S f = (*this)(i, c);
        if (f == S(0)) continue;
        for (int j = c; j < cols_; ++j)
          (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Mat m = *this;
    return static_cast<int>(m.rref().size());
  }

  // Basis of {v : Mv = 0}; vector count equals cols - rank.
  std::vector<std::vector<S>> nullspace() const {
    Mat m = *this;
    std::vector<int> piv = m.rref();
    std::vector<bool> is_piv(cols_, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<S>> basis;
    for (int free_c = 0; free_c < cols_; ++free_c) {
      if (is_piv[free_c]) continue;
      std::vector<S> v(cols_, S(0));
      v[free_c] = S(1);
      for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = S(0) - m(static_cast<int>(r), free_c);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // One solution of Mx = b, if consistent.
  std::optional<std::vector<S>> solve(const std::vector<S>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("Mat::solve: size");
    Mat aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    std::vector<int> piv = aug.rref();
    for (int c : piv)
      if (c == cols_) return std::nullopt;  // inconsistent
    std::vector<S> x(cols_, S(0));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), cols_);
    return x;
  }

 private:
  int rows_, cols_;
  std::vector<S> a_;
};

using QMat = Mat<Rat>;
using CMat = Mat<GaussRat>;
using QVec = std::vector<Rat>;
using CVec = std::vector<GaussRat>;

// Fraction-free rank: clears row denominators, then Bareiss elimination
// over the integers.  Agrees with QMat::rank (property-tested).
int bareiss_rank(const QMat& m);

// Coefficients expressing v in span(S), or nullopt.
template <class S>
std::optional<std::vector<S>> span_member(const std::vector<S>& v,
                                          const std::vector<std::vector<S>>& span) {
  size_t n = v.size();
  for (const auto& s : span)
    if (s.size() != n) throw std::invalid_argument("span_member: length mismatch");
  Mat<S> m(static_cast<int>(n), static_cast<int>(span.size()));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < span.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = span[j][i];
  return m.solve(v);
}

// Matrix with polynomial entries; exact questions require specialization.
class ParamMat {
 public:
  ParamMat(int rows, int cols, RingPtr ring)
      : ring_(std::move(ring)), m_(rows, cols) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m_(i, j) = MPoly(ring_);
  }

  int rows() const { return m_.rows(); }
  int cols() const { return m_.cols(); }
  MPoly& operator()(int i, int j) { return m_(i, j); }
  const MPoly& operator()(int i, int j) const { return m_(i, j); }

  bool has_parameters() const;
  // Throws "specialize parameters first" when entries are non-constant.
  CMat to_numeric() const;
  CMat specialize(const std::map<size_t, GaussRat>& vals) const;
  int rank() const { return to_numeric().rank(); }

 private:
  RingPtr ring_;
  Mat<MPoly> m_;
};

// Default rational sample values used wherever parametric questions are
// answered by specialization.
const std::vector<Rat>& default_parameter_samples();

}  // namespace crsym

#endif
