#include "crsym/matrix.hpp"

namespace crsym {

int bareiss_rank(const QMat& m) {
  int rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  // clear denominators per row
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (int i = 0; i < rows; ++i) {
    BigInt l(1);
    for (int j = 0; j < cols; ++j) l = BigInt::lcm(l, m(i, j).den());
    for (int j = 0; j < cols; ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
  }
  BigInt prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) std::swap(a[p], a[r]);
    const BigInt pivot = a[r][c];
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        a[i][j] = (a[i][j] * pivot - a[i][c] * a[r][j]) / prev;
      a[i][c] = BigInt(0);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

bool ParamMat::has_parameters() const {
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j)
      if (!m_(i, j).is_constant()) return true;
  return false;
}

CMat ParamMat::to_numeric() const {
  if (has_parameters())
    throw std::invalid_argument("specialize parameters first");
  CMat r(rows(), cols());
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) r(i, j) = m_(i, j).constant_value();
  return r;
}

CMat ParamMat::specialize(const std::map<size_t, GaussRat>& vals) const {
  CMat r(rows(), cols());
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      MPoly p = m_(i, j).eval_partial(vals);
      if (!p.is_constant())
        throw std::invalid_argument("specialize parameters first");
      r(i, j) = p.constant_value();
    }
  return r;
}

const std::vector<Rat>& default_parameter_samples() {
  static const std::vector<Rat> s = {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(7)};
  return s;
}

}  // namespace crsym
