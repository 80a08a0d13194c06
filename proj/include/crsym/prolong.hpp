#ifndef CRSYM_PROLONG_HPP
#define CRSYM_PROLONG_HPP

#include <optional>

#include "crsym/gnla.hpp"

namespace crsym {

// Grading-preserving derivation, one exact block per grade; determined by
// its g_{-1} block on fundamental symbols.
struct Derivation0 {
  std::vector<QMat> blocks;  // blocks[k-1] acts on g_{-k}

  QVec apply(const GNLA& m, const QVec& v) const;
  QVec flat() const;  // concatenated entries, for linear algebra over der0
};

// Exact basis of der_0(m); always contains the grading element.
std::vector<Derivation0> der0(const GNLA& m);
Derivation0 grading_element(const GNLA& m);
bool leibniz_holds(const GNLA& m, const Derivation0& d);

struct CrG0 {
  std::vector<Derivation0> basis;
  int r = 0;  // dimension
};

// {A in der0(m) : A|g_{-1} commutes with J}; J may also be a positive-scalar
// class representative (the commutant is unchanged).
CrG0 cr_g0(const GNLA& m, const QMat& j_on_g1);

struct ProlongationReport {
  std::vector<int> dims_negative;  // from the deepest grade up to -1
  int dim_g0 = 0;
  std::vector<int> dims_positive;  // computed positive components, stop at 0
  bool rigid = false;              // g_1 = 0
  bool terminated = false;         // some positive component vanished
  std::optional<long long> total;  // dim m + dim g_0 + sum positives when finite

  nlohmann::json to_json() const;
};

// Tanaka prolongation of (m, g0) with the CR filter: degree-k solutions of
// Leibniz are intersected with the condition that the bracket with g_{-1}
// lands in the previous CR component.  `g0` must be a subspace of der0(m).
ProlongationReport prolong(const GNLA& m, const std::vector<Derivation0>& g0,
                           int max_degree = 6, bool stop_at_zero = true);

// dim m + r for depth > 2 after machine-verifying g_1 = 0; delegates to the
// full prolongation for depth <= 2.  Throws InternalConsistencyError when a
// positive component survives at depth > 2.
long long symmetry_bound(const GNLA& m, const QMat& j_on_g1);

}  // namespace crsym

#endif
