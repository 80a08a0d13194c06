#ifndef CRSYM_CXSTRUCT_HPP
#define CRSYM_CXSTRUCT_HPP

#include "crsym/gnla.hpp"

namespace crsym {

// Complex structure on g_{-1} in the basis (e1', e1''):
// J e1' = a e1'' + b e1' with a != 0; the rest is forced by J^2 = -id.
struct ComplexStructure {
  Rat a{1};
  Rat b{0};

  QMat matrix() const;
  static std::optional<ComplexStructure> from_matrix(const QMat& j);
  nlohmann::json to_json() const;
  static ComplexStructure from_json(const nlohmann::json& j);
};

bool validate_J(const QMat& j);  // J^2 == -id, exactly

struct NormalizeResult {
  ComplexStructure normal;
  QMat element;                     // the group element g on g_{-1}
  std::vector<QMat> automorphism;   // its graded lift, verified on m
  std::string factorization;        // diagonal/shear/flip record
};

// Normal form of J under graded automorphisms: (1,0) over Borel/gl(2)
// symbols (Goursat case), (1,b) over the diagonal Cartan (nGou case).
// Throws std::invalid_argument listing der0 when the shape is unsupported.
NormalizeResult normalize_J(const GNLA& m, const ComplexStructure& j);

struct InvariantJ {
  bool exists = false;
  // traceless with positive determinant; represents +-J up to positive scale
  std::optional<QMat> witness;
  nlohmann::json to_json() const;
};

// True iff der0(m)|g_{-1} contains a traceless element of negative
// discriminant, i.e. a complex-structure direction (the r = 2 criterion).
InvariantJ invariant_J_exists(const GNLA& m);

}  // namespace crsym

#endif
