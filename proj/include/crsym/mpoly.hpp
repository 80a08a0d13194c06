#ifndef CRSYM_MPOLY_HPP
#define CRSYM_MPOLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crsym/rat.hpp"

namespace crsym {

// Ordered list of named indeterminates; shared by all polynomials of a ring.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> vars);
  size_t nvars() const { return vars_.size(); }
  const std::string& var_name(size_t i) const { return vars_[i]; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::optional<size_t> index_of(const std::string& name) const;

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars);

// Multivariate polynomial over GaussRat with dense fixed-width exponent
// vectors.  Canonical form: the term map holds no zero coefficients, so
// equality is map equality.
class MPoly {
 public:
  using Exp = std::vector<uint16_t>;
  using TermMap = std::map<Exp, GaussRat>;

  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MPoly constant(RingPtr ring, GaussRat c);
  static MPoly variable(RingPtr ring, size_t idx, unsigned power = 1);
  static MPoly variable(RingPtr ring, const std::string& name, unsigned power = 1);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussRat constant_value() const;  // 0 if zero; requires is_constant()

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const GaussRat& c) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly pow(unsigned e) const;
  MPoly derivative(size_t var) const;

  // Substitutes images[i] for variable i; all images share target_ring.
  MPoly substitute(const RingPtr& target_ring, const std::vector<MPoly>& images) const;

  // Coefficient-conjugate and permute variables (perm[i] = image index).
  MPoly conj_permuted(const std::vector<size_t>& perm) const;

  // Evaluate some variables at constants, keep the rest (same ring).
  MPoly eval_partial(const std::map<size_t, GaussRat>& vals) const;

  int total_degree() const;
  // Weighted degree of every monomial equals w, given per-variable weights?
  std::optional<Exp> find_non_homogeneous(const std::vector<int>& weights, int w) const;
  bool depends_on(size_t var) const;

  std::string to_string() const;
  static std::string monomial_string(const PolyRing& ring, const Exp& e);

  void add_term(const Exp& e, const GaussRat& c);  // accumulates, drops zeros

 private:
  RingPtr ring_;
  TermMap terms_;
};

inline MPoly operator*(const GaussRat& c, const MPoly& p) { return p * c; }

}  // namespace crsym

#endif
