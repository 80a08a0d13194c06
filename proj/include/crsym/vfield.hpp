#ifndef CRSYM_VFIELD_HPP
#define CRSYM_VFIELD_HPP

#include "crsym/gnla.hpp"
#include "crsym/mpoly.hpp"

namespace crsym {

// Vector field with multivariate-polynomial components.  The first
// `n_coords` ring variables are coordinates; trailing variables are
// symbolic parameters and are never differentiated.
struct PolyVectorField {
  RingPtr ring;
  int n_coords = 0;
  std::vector<MPoly> comps;  // one per coordinate
  std::string name;

  static PolyVectorField zero(RingPtr ring, int n_coords, std::string name = "");
  static PolyVectorField coordinate(RingPtr ring, int n_coords, int axis,
                                    std::string name = "");

  bool is_zero() const;
  PolyVectorField operator+(const PolyVectorField& o) const;
  PolyVectorField operator*(const GaussRat& c) const;

  nlohmann::json to_json() const;
};

PolyVectorField vf_bracket(const PolyVectorField& x, const PolyVectorField& y);

// Membership of a field in the constant-coefficient span of a list.
std::optional<CVec> vf_member(const PolyVectorField& v,
                              const std::vector<PolyVectorField>& span);

struct DistributionChart {
  std::vector<PolyVectorField> gens;
  CVec base_point;  // one value per coordinate
};

struct ChartGrowth {
  std::vector<int> cumulative;
  std::vector<int> reduced;
};

// Pointwise growth of the weak flag D^{k+1} = D^k + [D, D^k] (or the strong
// flag with brackets of pairs), ranks at the base point.
ChartGrowth growth_at(const DistributionChart& d, bool weak = true);

// Affine chart of the projectivization: adds a fiber coordinate p and
// returns generators (X + pY, d/dp).
DistributionChart prolong_chart(const DistributionChart& d,
                                const std::string& fiber_name = "p");

// GNLA generated by the weight-(-1) fields under iterated brackets, graded
// by weight.  field_weights[i] = k means field i is homogeneous of weight -k
// for the given coordinate weights; deeper input fields are cross-checked
// against the bracket-generated basis.  Bracket generation holds by
// construction; with require_fundamental the center must also sit in the
// lowest grade (degenerate extensions have larger centers).
GNLA nilpotent_symbol(const std::vector<PolyVectorField>& fields,
                      const std::vector<int>& field_weights,
                      const std::vector<int>& coord_weights,
                      bool require_fundamental = true);

// jet-space chart fixtures
DistributionChart goursat_chart(int n);
DistributionChart hilbert_cartan_chart();
DistributionChart g2b_chart();

}  // namespace crsym

#endif
