#ifndef CRSYM_CRMODEL_HPP
#define CRSYM_CRMODEL_HPP

#include "crsym/cxstruct.hpp"
#include "crsym/extend.hpp"
#include "crsym/vfield.hpp"

namespace crsym {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coordinate model: complex coordinates with weights and defining equations
// Im(w_k) = P_k(z, zbar, lower coordinates).  The ring holds the coordinates
// first, then their conjugates, then the real parameter symbols.
struct CRModel {
  std::vector<std::string> coords;  // ordered by declaration, weight 1 first
  std::vector<int> weights;
  std::vector<std::string> params;
  RingPtr ring;
  std::vector<size_t> conj_perm;           // ring involution (coord <-> bar)
  std::vector<std::pair<std::string, MPoly>> equations;  // (coord, P) in order
  std::vector<PolyVectorField> fields;     // holomorphic symmetry candidates

  int coord_index(const std::string& name) const;
  const PolyVectorField* field(const std::string& name) const;
  MPoly conj(const MPoly& p) const { return p.conj_permuted(conj_perm); }
  nlohmann::json to_json() const;
};

// Parses the model-definition text; throws ParseError with line:column on
// syntax errors, reality violations and weight inhomogeneity.
CRModel parse_model(const std::string& text);

struct Realification {
  RingPtr real_ring;           // x, y, t_<coord>..., then parameters
  std::vector<MPoly> images;   // per model-ring variable
};

// w_k = t_k + i*P_k with lower coordinates substituted; exact by weight
// induction.
Realification realify(const CRModel& m);

struct TangencyReport {
  bool ok = true;
  // nonzero residuals per defining equation, after pullback to M
  std::vector<std::pair<std::string, std::string>> residuals;
};

// Checks that the real part of the holomorphic field is tangent to M:
// (S + Sbar)(rho_k) pulled back through realify vanishes identically,
// in the coordinates and in all parameter symbols.
TangencyReport verify_tangency(const CRModel& m, const PolyVectorField& s);

struct SymmetryReport {
  std::vector<std::pair<std::string, bool>> tangency;
  int rank = 0;
  bool closed = false;
  int dimension = 0;
  std::string offending;  // first bracket escaping the span, when !closed
  struct BracketRow {
    std::string a, b;
    std::vector<Rat> coeffs;  // over the field list, at the representative sample
  };
  std::vector<BracketRow> constants;
  std::vector<std::map<std::string, Rat>> samples;
  int max_commuting = 0;
  std::vector<std::vector<std::string>> max_cliques;
  nlohmann::json to_json() const;
};

// Bracket closure of the verified fields in their exact rational span,
// parameters specialized over the sample set; the commuting-subset search
// is symbolic in the parameters.
SymmetryReport closure(const CRModel& m, const std::vector<Rat>& extra_samples = {});

struct ModelSymbol {
  GNLA symbol;
  std::vector<int> reduced_growth;
  ComplexStructure j;                      // the model J in the symbol basis
  int r = 0;                               // dim cr_g0(symbol, J)
  std::optional<HcClassification> hc_type; // for (2,1,2,1) and (2,1,2,2) symbols
  nlohmann::json to_json() const;
};

// Nilpotent symbol from the non-scaling verified fields graded by weight;
// parameters must be fully assigned.
ModelSymbol model_symbol(const CRModel& m, const std::map<std::string, Rat>& params = {});

// --- fixtures -------------------------------------------------------------

struct Fixture {
  std::string name;
  std::string source;                      // model text; empty for chart-only
  std::optional<CRModel> model;
  std::optional<DistributionChart> chart;  // the GOU tube enters as a jet chart
  std::vector<Rat> extra_samples;          // closure samples beyond the default
};

const std::vector<Fixture>& fixture_catalog();
const Fixture& fixture(const std::string& name);

}  // namespace crsym

#endif
