#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crsym/vfield.hpp"

using namespace crsym;

TEST_CASE("bracket basics") {
  auto R = make_ring({"x", "y"});
  auto dx = PolyVectorField::coordinate(R, 2, 0);
  auto dy = PolyVectorField::coordinate(R, 2, 1);
  CHECK(vf_bracket(dx, dy).is_zero());
  PolyVectorField xdy = PolyVectorField::zero(R, 2);
  xdy.comps[1] = MPoly::variable(R, 0);
  PolyVectorField b = vf_bracket(dx, xdy);
  CHECK(b.comps[0].is_zero());
  CHECK(b.comps[1] == MPoly::constant(R, GaussRat(1)));
}

TEST_CASE("G2/B chart: [Dx, dz3] = -dz2") {
  auto d = g2b_chart();
  PolyVectorField b = vf_bracket(d.gens[0], d.gens[1]);
  auto R = d.gens[0].ring;
  CHECK(b.comps[*R->index_of("z2")] == MPoly::constant(R, GaussRat(-1)));
  for (const auto& name : {"x", "y0", "z0", "z1", "z3"})
    CHECK(b.comps[*R->index_of(name)].is_zero());
}

TEST_CASE("Jacobi identity on random low-degree fields") {
  auto R = make_ring({"x", "y", "z"});
  uint64_t s = 12345;
  auto rnd = [&]() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return static_cast<long long>(s % 5) - 2;
  };
  auto rand_field = [&]() {
    PolyVectorField f = PolyVectorField::zero(R, 3);
    for (int i = 0; i < 3; ++i)
      for (int t = 0; t < 2; ++t) {
        MPoly::Exp e = {static_cast<uint16_t>(std::abs(rnd()) % 2),
                        static_cast<uint16_t>(std::abs(rnd()) % 2),
                        static_cast<uint16_t>(std::abs(rnd()) % 2)};
        MPoly mono(R);
        mono.add_term(e, GaussRat(rnd()));
        f.comps[i] += mono;
      }
    return f;
  };
  for (int it = 0; it < 20; ++it) {
    auto x = rand_field(), y = rand_field(), z = rand_field();
    auto jac = vf_bracket(vf_bracket(x, y), z) + vf_bracket(vf_bracket(y, z), x) +
               vf_bracket(vf_bracket(z, x), y);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("growth of the Goursat chart") {
  auto g = growth_at(goursat_chart(5));
  CHECK(g.cumulative == std::vector<int>{2, 3, 4, 5, 6});
  CHECK(g.reduced == std::vector<int>{2, 1, 1, 1, 1});
  // von Weber: strong and weak flags agree for Goursat
  auto s = growth_at(goursat_chart(5), /*weak=*/false);
  CHECK(s.cumulative == g.cumulative);
}

TEST_CASE("growth of the Hilbert-Cartan and G2/B charts") {
  CHECK(growth_at(hilbert_cartan_chart()).reduced == std::vector<int>{2, 1, 2});
  CHECK(growth_at(g2b_chart()).reduced == std::vector<int>{2, 1, 1, 1, 1});
}

TEST_CASE("dependent generators at the base point error out") {
  auto R = make_ring({"x", "y"});
  auto dx = PolyVectorField::coordinate(R, 2, 0);
  PolyVectorField xdy = PolyVectorField::zero(R, 2);
  xdy.comps[1] = MPoly::variable(R, 0);  // vanishes at the origin
  DistributionChart d{{dx, xdy}, {GaussRat(0), GaussRat(0)}};
  CHECK_THROWS(growth_at(d));
}

TEST_CASE("double prolongation of the plane gives the Engel chart") {
  auto R = make_ring({"x", "y"});
  DistributionChart d{{PolyVectorField::coordinate(R, 2, 0),
                       PolyVectorField::coordinate(R, 2, 1)},
                      {GaussRat(0), GaussRat(0)}};
  auto d1 = prolong_chart(d, "p");
  auto d2 = prolong_chart(d1, "q");
  CHECK(growth_at(d2).reduced == std::vector<int>{2, 1, 1});
}

TEST_CASE("prolonging the Hilbert-Cartan chart matches the G2/B growth") {
  auto p = prolong_chart(hilbert_cartan_chart(), "z3");
  auto g = growth_at(p);
  CHECK(g.reduced == growth_at(g2b_chart()).reduced);
}

TEST_CASE("the fiber direction is a level-2 Cauchy direction of the prolonged chart") {
  for (DistributionChart base : {hilbert_cartan_chart(), goursat_chart(4)}) {
    auto d = prolong_chart(base, "p");
    const auto& X = d.gens[0];
    const auto& dp = d.gens[1];
    std::vector<PolyVectorField> d2 = {X, dp, vf_bracket(X, dp)};
    for (const auto& g : d2) CHECK(vf_member(vf_bracket(dp, g), d2).has_value());
  }
}

TEST_CASE("nilpotent symbol of the Hilbert-Cartan chart is m_HC") {
  auto d = hilbert_cartan_chart();
  // weights: x,z2 of weight 1; z1: 2; z0, y0: 3
  GNLA m = nilpotent_symbol(d.gens, {1, 1}, {1, 3, 3, 2, 1});
  CHECK(m.renamed_standard().same_structure(m_hc()));
}

TEST_CASE("nilpotent symbol of the G2/B chart is nGou(5)") {
  auto d = g2b_chart();
  GNLA m = nilpotent_symbol(d.gens, {1, 1}, {1, 5, 4, 3, 2, 1});
  CHECK(m.renamed_standard().same_structure(ngou(5)));
}

TEST_CASE("nilpotent symbol growth agrees with the pointwise growth") {
  auto d = g2b_chart();
  GNLA m = nilpotent_symbol(d.gens, {1, 1}, {1, 5, 4, 3, 2, 1});
  CHECK(m.growth().reduced == growth_at(d).reduced);
}

TEST_CASE("non-homogeneous fields are rejected with the offending monomial") {
  auto R = make_ring({"x", "y"});
  PolyVectorField f = PolyVectorField::zero(R, 2, "S");
  f.comps[0] = MPoly::constant(R, GaussRat(1)) + MPoly::variable(R, 0, 2);
  try {
    nilpotent_symbol({f, PolyVectorField::coordinate(R, 2, 1)}, {1, 1}, {1, 1});
    FAIL("expected homogeneity error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("x^2") != std::string::npos);
  }
}

TEST_CASE("field JSON shape") {
  auto d = hilbert_cartan_chart();
  auto j = d.gens[0].to_json();
  CHECK(j["coords"].size() == 5);
  CHECK(j["components"].contains("y0"));
}
