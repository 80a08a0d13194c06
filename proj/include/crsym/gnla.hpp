#ifndef CRSYM_GNLA_HPP
#define CRSYM_GNLA_HPP

#include <json.hpp>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crsym/matrix.hpp"
#include "crsym/rat.hpp"

namespace crsym {

// Raised when a computation contradicts a structural fact that is supposed
// to hold (CLI exit code 3).
struct InternalConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SparseTerm {
  int idx;
  Rat c;
};
using SparseVec = std::vector<SparseTerm>;

struct GrowthReport {
  std::vector<int> reduced;     // (r_1, r_2, ...) with r_k = dim g_{-k}
  std::vector<int> cumulative;  // partial sums, strictly increasing
};

struct CheckReport {
  bool ok = true;
  std::string message;  // first violation, empty when ok
};

// Standard basis names: one element per grade prints as "e<k>", several as
// "e<k>'", "e<k>''", ...
std::vector<std::string> standard_basis_names(const std::vector<int>& dims);

// Graded nilpotent Lie algebra m = g_{-depth} + ... + g_{-1} with exact
// structure constants.  Immutable and cheap to copy.
class GNLA {
 public:
  int depth() const;
  const std::vector<int>& dims() const;
  int dim() const;
  int grade_of(int idx) const;  // negative
  int grade_dim(int k) const;   // dim g_{-k}
  int grade_begin(int k) const; // basis index of first element of g_{-k}
  const std::string& name(int idx) const;
  int index_of(const std::string& name) const;  // -1 if absent

  // Bracket of basis elements (any order; antisymmetry applied).
  SparseVec bracket_basis(int a, int b) const;
  QVec bracket(const QVec& x, const QVec& y) const;
  QVec bracket_elem(int a, const QVec& y) const;

  CheckReport validate() const;        // antisymmetry, grading, Jacobi
  CheckReport is_fundamental() const;  // bracket-generated; center == g_{-depth}
  GrowthReport growth() const;

  GNLA renamed(std::vector<std::string> names) const;
  GNLA renamed_standard() const;
  // Drop the lowest grade (inverse of a central extension).
  GNLA truncated() const;

  nlohmann::json to_json() const;
  static GNLA from_json(const nlohmann::json& j);

  bool same_structure(const GNLA& o) const;  // dims, names and constants equal

  QVec unit(int idx) const;
  std::string format_vector(const QVec& v) const;

 private:
  friend class GNLABuilder;
  struct Impl;
  std::shared_ptr<const Impl> p_;
};

class GNLABuilder {
 public:
  explicit GNLABuilder(std::vector<int> dims);
  GNLABuilder(std::vector<int> dims, std::vector<std::string> names);

  int index_of(const std::string& name) const;
  // Sets [a, b] = terms (a, b basis names); rejects duplicates.
  void set_bracket(const std::string& a, const std::string& b,
                   const std::vector<std::pair<std::string, Rat>>& terms);
  void set_bracket_idx(int a, int b, SparseVec v);
  GNLA build();

 private:
  std::vector<int> dims_;
  std::vector<std::string> names_;
  std::vector<int> grades_;
  std::map<std::pair<int, int>, SparseVec> br_;
};

// --- catalog -----------------------------------------------------------

// Named symbols: Gou(n) n>=2, nGou(n) odd n>=5, heis3, m_HC, ell6, ell7,
// ell8, mprime5, mdblprime5, free(depth).
GNLA catalog(const std::string& name, int param = 0);
GNLA gou(int n);
GNLA ngou(int n);
GNLA heis3();
GNLA m_hc();
GNLA ell6();
GNLA ell7();
GNLA ell8();
GNLA mprime5();
GNLA mdblprime5();

// Free 2-generator GNLA truncated at `depth`, on the Lyndon basis.
GNLA free_gnla(int depth, int depth_limit = 10);

// Number of Lyndon words of length k on 2 letters: (1/k) sum_{d|k} mu(d) 2^{k/d}.
long long necklace_dim(int k);

// Quotient by the graded ideal generated by W inside g_{-k}; W given as
// grade-local coordinate vectors of length dim g_{-k}.
GNLA quotient(const GNLA& m, int k, const std::vector<QVec>& W);

// level 1: {x in g_{-1} : [x, m] = 0};  level 2: {x in g_{-1} : [x, g_{-2}] = 0}.
std::vector<QVec> cauchy_directions(const GNLA& m, int level);

// Symbol-level deprolongation for growth (2,1,1,...) with 1-dim level-2
// Cauchy direction.  Throws std::runtime_error("not deprolongable").
GNLA deprolong(const GNLA& m);

// Graded derivation matrix induced by a map on the generators g_{-1}
// (extends by Leibniz; requires fundamental m).  Returns one block per grade.
std::vector<QMat> derivation_from_g1(const GNLA& m, const QMat& on_g1);

// Lift an invertible map on g_{-1} to a graded automorphism, if possible.
std::optional<std::vector<QMat>> automorphism_from_g1(const GNLA& m, const QMat& on_g1);

// Transform structure constants by an invertible graded map (one block per
// grade): new bracket [x,y]' = P[P^{-1}x, P^{-1}y].
GNLA transformed(const GNLA& m, const std::vector<QMat>& blocks);

}  // namespace crsym

#endif
