#ifndef CRSYM_EXTEND_HPP
#define CRSYM_EXTEND_HPP

#include "crsym/gnla.hpp"
#include "crsym/prolong.hpp"

namespace crsym {

// Scalar 2-cochain of fixed total degree: supported on basis pairs whose
// grades sum to -degree, antisymmetric.
class GradedCochain {
 public:
  GradedCochain(GNLA m, int degree);

  const GNLA& base() const { return m_; }
  int degree() const { return degree_; }

  GradedCochain& set(const std::string& a, const std::string& b, Rat v);
  Rat eval_basis(int a, int b) const;
  Rat eval(const QVec& x, const QVec& y) const;
  bool is_zero() const;

  GradedCochain operator+(const GradedCochain& o) const;
  GradedCochain operator*(const Rat& c) const;

  // value list over the canonical pair universe (a<b, grade sum = -degree)
  QVec flat() const;
  static std::vector<std::pair<int, int>> pair_universe(const GNLA& m, int degree);

  nlohmann::json to_json() const;
  static GradedCochain from_json(const GNLA& m, int degree, const nlohmann::json& j);

 private:
  GNLA m_;
  int degree_;
  std::map<std::pair<int, int>, Rat> vals_;
};

// Chevalley-Eilenberg condition in the fixed degree:
// (d w)(x,y,z) = -w([x,y],z) + w([x,z],y) - w([y,z],x) on basis triples.
bool is_closed(const GradedCochain& w);

// Exact basis of the degree-(depth+1) cocycle space.
std::vector<GradedCochain> cocycles(const GNLA& m);

// Central extension by independent degree-(depth+1) cocycles; throws
// std::invalid_argument with a witness when the result is not fundamental.
GNLA extend_by(const GNLA& m, const std::vector<GradedCochain>& w);

// Infinitesimal action (L_A w)(x,y) = -w(Ax,y) - w(x,Ay).
GradedCochain g0_action(const Derivation0& a, const GradedCochain& w);

// Pullback along a graded automorphism: (P*w)(x,y) = w(Px, Py).
GradedCochain pullback(const GradedCochain& w, const std::vector<QMat>& blocks);

enum class ExtensionType { hyperbolic, elliptic, parabolic };
std::string to_string(ExtensionType t);

struct HcClassification {
  ExtensionType type;
  QMat pairing;  // on (e1',e1'') x (e3',e3'')
  Rat det;
};

// det sign of the symmetric pairing of a nonzero degree-4 cocycle over m_HC:
// positive -> elliptic, negative -> hyperbolic, zero -> parabolic.
HcClassification classify_hc_extension(const GradedCochain& w);

// Two-dimensional extensions of m_HC: discriminant sign of the binary form
// det(alpha M1 + beta M2); negative (definite) -> elliptic, positive ->
// hyperbolic, zero -> parabolic.
HcClassification classify_hc_pencil(const GradedCochain& w1, const GradedCochain& w2);

// Type of a depth-4 symbol whose truncation is m_HC on the nose: extracts
// the extension cocycle(s) from the grade -4 brackets and classifies.
// Returns nullopt when the growth is not (2,1,2,1) or (2,1,2,2).
std::optional<HcClassification> classify_symbol_over_hc(const GNLA& symbol);

// Breadth-first classification of growth (2,1,...,1) symbols by repeated
// 1-dimensional central extension and reduction to normal form.
struct Enumeration211 {
  struct DepthClasses {
    int depth = 0;
    std::vector<std::string> labels;  // "Gou(n)" / "nGou(n)"
    std::vector<GNLA> algebras;
  };
  std::vector<DepthClasses> per_depth;  // depths 3 .. max_depth
};

Enumeration211 enumerate_211(int max_depth);

}  // namespace crsym

#endif
