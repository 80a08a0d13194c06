#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "crsym/crmodel.hpp"
#include "crsym/prolong.hpp"

using namespace crsym;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// re-home holomorphic param-free components into a coords-only ring
DistributionChart chart_of_weight1_fields(const CRModel& m) {
  RingPtr R = make_ring(m.coords);
  std::vector<MPoly> images;
  for (size_t v = 0; v < m.ring->nvars(); ++v) {
    if (v < m.coords.size())
      images.push_back(MPoly::variable(R, v));
    else
      images.push_back(MPoly(R));  // bars and params must not occur
  }
  DistributionChart d;
  for (const auto& f : m.fields) {
    if (f.name != "S1p" && f.name != "S1pp") continue;
    PolyVectorField g = PolyVectorField::zero(R, static_cast<int>(m.coords.size()), f.name);
    for (size_t i = 0; i < m.coords.size(); ++i)
      g.comps[i] = f.comps[i].substitute(R, images);
    d.gens.push_back(g);
  }
  d.base_point.assign(m.coords.size(), GaussRat(0));
  return d;
}

}  // namespace

TEST_CASE("parsing the fixtures") {
  const auto& eng = fixture("ENG");
  REQUIRE(eng.model);
  CHECK(eng.model->coords == std::vector<std::string>{"z", "u", "v"});
  CHECK(eng.model->weights == std::vector<int>{1, 2, 3});
  CHECK(eng.model->fields.size() == 5);
  const auto& m2121 = fixture("2121");
  REQUIRE(m2121.model);
  CHECK(m2121.model->params == std::vector<std::string>{"a"});
}

TEST_CASE("parser rejects non-real equations with the offending monomial") {
  std::string text = "coord z : weight 1;\ncoord u : weight 2;\nIm(u) = z^2;\n";
  try {
    parse_model(text);
    FAIL("expected reality error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("not real-valued") != std::string::npos);
  }
}

TEST_CASE("parser reports syntax errors with positions") {
  try {
    parse_model("coord z : weight 1;\ncoord u : weight;\n");
    FAIL("expected syntax error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("2:") != std::string::npos);
  }
}

TEST_CASE("parser rejects weight-inhomogeneous equations") {
  std::string text = "coord z : weight 1;\ncoord u : weight 2;\nIm(u) = |z|^2 + Re(z^2*conj(z));\n";
  CHECK_THROWS_AS(parse_model(text), ParseError);
}

TEST_CASE("realification substitutes lower coordinates") {
  const auto& eng = fixture("ENG");
  auto re = realify(*eng.model);
  // u = t_u + i(x^2 + y^2)
  MPoly x = MPoly::variable(re.real_ring, "x"), y = MPoly::variable(re.real_ring, "y");
  MPoly tu = MPoly::variable(re.real_ring, "t_u");
  MPoly expect = tu + (x * x + y * y) * GaussRat::i();
  CHECK(re.images[eng.model->coord_index("u")] == expect);
  // trivial model
  CRModel triv = parse_model("coord z : weight 1;\ncoord u : weight 2;\nIm(u) = 0;\n");
  auto re2 = realify(triv);
  CHECK(re2.images[1] == MPoly::variable(re2.real_ring, "t_u"));
  // the G2B u-equation depends on s, whose realification is substituted
  const auto& g2b = fixture("G2B");
  auto re3 = realify(*g2b.model);
  CHECK(re3.images[g2b.model->coord_index("u")].depends_on(
      *re3.real_ring->index_of("t_s")));
}

TEST_CASE("all listed fields of every model fixture are tangent, parameters symbolic") {
  for (const auto& f : fixture_catalog()) {
    if (!f.model) continue;
    CAPTURE(f.name);
    for (const auto& s : f.model->fields) {
      CAPTURE(s.name);
      auto rep = verify_tangency(*f.model, s);
      CHECK(rep.ok);
      if (!rep.ok && !rep.residuals.empty())
        MESSAGE(f.name, "/", s.name, " residual at ", rep.residuals[0].first, ": ",
                rep.residuals[0].second);
    }
  }
}

TEST_CASE("S0J is a symmetry only on the special fixtures") {
  // on the generic (2121) model the rotation fails tangency with a nonzero
  // residual, identically in a
  const auto& m = *fixture("2121").model;
  PolyVectorField s0j = PolyVectorField::zero(m.ring, static_cast<int>(m.coords.size()), "S0J");
  auto var = [&](const char* n) { return MPoly::variable(m.ring, n); };
  s0j.comps[m.coord_index("z")] = var("z") * GaussRat::i();
  s0j.comps[m.coord_index("w")] = var("v");
  s0j.comps[m.coord_index("v")] = -var("w");
  auto rep = verify_tangency(m, s0j);
  CHECK_FALSE(rep.ok);
  REQUIRE(!rep.residuals.empty());
  CHECK(rep.residuals[0].second != "0");
  // the same field is on the special fixture's list and passes there
  const auto& inf = *fixture("2121_inf").model;
  CHECK(verify_tangency(inf, *inf.field("S0J")).ok);
}

TEST_CASE("closure dimensions of the fixtures") {
  CHECK(closure(*fixture("ENG").model).dimension == 5);
  CHECK(closure(*fixture("CAR").model).dimension == 7);
  auto r2123 = closure(*fixture("2123").model);
  CHECK(r2123.closed);
  CHECK(r2123.dimension == 10);
}

TEST_CASE("closure of (2121) holds across parameter samples") {
  const auto& f = fixture("2121");
  auto rep = closure(*f.model, f.extra_samples);
  CHECK(rep.closed);
  CHECK(rep.dimension == 7);
  // [S1p, S3p] = -(4a+3) S4 at the representative sample a = 0: coefficient -3
  for (const auto& row : rep.constants)
    if (row.a == "S1p" && row.b == "S3p") {
      int s4 = -1;
      for (size_t k = 0; k < f.model->fields.size(); ++k)
        if (f.model->fields[k].name == "S4") s4 = static_cast<int>(k);
      REQUIRE(s4 >= 0);
      CHECK(row.coeffs[s4] == Rat(-3));
    }
}

TEST_CASE("largest commuting subsets of the listed fields") {
  auto r2121 = closure(*fixture("2121").model, fixture("2121").extra_samples);
  CHECK(r2121.max_commuting == 4);
  bool found = false;
  for (const auto& c : r2121.max_cliques)
    if (c == std::vector<std::string>{"S2", "S3p", "S3pp", "S4"}) found = true;
  CHECK(found);
  auto rg2b = closure(*fixture("G2B").model);
  CHECK(rg2b.max_commuting == 3);
  bool g2b_set = false;
  for (const auto& c : rg2b.max_cliques)
    if (c == std::vector<std::string>{"S3", "S4", "S5"}) g2b_set = true;
  CHECK(g2b_set);
}

TEST_CASE("G2B closes with solvable structure: a line acting on a nilradical") {
  const auto& m = *fixture("G2B").model;
  auto rep = closure(m);
  CHECK(rep.closed);
  CHECK(rep.dimension == 7);
  // brackets never hit the scaling field S0
  int s0 = -1;
  for (size_t k = 0; k < m.fields.size(); ++k)
    if (m.fields[k].name == "S0") s0 = static_cast<int>(k);
  REQUIRE(s0 >= 0);
  for (const auto& row : rep.constants) CHECK(row.coeffs[s0].is_zero());
}

TEST_CASE("model symbols of the depth-3 models") {
  auto eng = model_symbol(*fixture("ENG").model);
  CHECK(eng.symbol.renamed_standard().same_structure(gou(3)));
  CHECK(eng.r == 1);
  auto car = model_symbol(*fixture("CAR").model);
  CHECK(car.symbol.renamed_standard().same_structure(m_hc()));
  CHECK(car.r == 2);
  CHECK(car.j.a == Rat(1));
  CHECK(car.j.b == Rat(0));
}

TEST_CASE("symbol of (2121): growth, types and the computed thresholds") {
  auto at = [&](const Rat& a) {
    return model_symbol(*fixture("2121").model, {{"a", a}});
  };
  auto m0 = at(Rat(0));
  CHECK(m0.reduced_growth == std::vector<int>{2, 1, 2, 1});
  REQUIRE(m0.hc_type);
  CHECK(m0.hc_type->type == ExtensionType::hyperbolic);  // |0| below threshold
  CHECK(m0.r == 1);
  auto m2 = at(Rat(2));
  REQUIRE(m2.hc_type);
  CHECK(m2.hc_type->type == ExtensionType::elliptic);
  // the determinant is proportional to (4a+3)(4a-3): parabolic at a = 3/4
  auto mp = at(Rat(3, 4));
  REQUIRE(mp.hc_type);
  CHECK(mp.hc_type->type == ExtensionType::parabolic);
  auto mn = at(Rat(-3, 4));
  REQUIRE(mn.hc_type);
  CHECK(mn.hc_type->type == ExtensionType::parabolic);
  auto m1 = at(Rat(1));
  REQUIRE(m1.hc_type);
  CHECK(m1.hc_type->type == ExtensionType::elliptic);
}

TEST_CASE("symbol of the special fixtures has r = 2") {
  auto inf = model_symbol(*fixture("2121_inf").model);
  CHECK(inf.reduced_growth == std::vector<int>{2, 1, 2, 1});
  REQUIRE(inf.hc_type);
  CHECK(inf.hc_type->type == ExtensionType::elliptic);
  CHECK(inf.r == 2);
  auto z22 = model_symbol(*fixture("2122_00").model);
  CHECK(z22.reduced_growth == std::vector<int>{2, 1, 2, 2});
  REQUIRE(z22.hc_type);
  CHECK(z22.hc_type->type == ExtensionType::elliptic);
  CHECK(z22.r == 2);
  auto f23 = model_symbol(*fixture("2123").model);
  CHECK(f23.reduced_growth == std::vector<int>{2, 1, 2, 3});
  CHECK(f23.r == 2);
}

TEST_CASE("symbol of (2122): pencil types with the computed radius") {
  auto at = [&](const Rat& a, const Rat& b) {
    return model_symbol(*fixture("2122").model, {{"a", a}, {"b", b}});
  };
  auto ll0 = at(Rat(0), Rat(0));
  CHECK(ll0.reduced_growth == std::vector<int>{2, 1, 2, 2});
  REQUIRE(ll0.hc_type);
  CHECK(ll0.hc_type->type == ExtensionType::elliptic);
  // discriminant vanishes on a^2 + b^2 = 9/16
  auto pp = at(Rat(3, 4), Rat(0));
  REQUIRE(pp.hc_type);
  CHECK(pp.hc_type->type == ExtensionType::parabolic);
  auto hh = at(Rat(2), Rat(2));
  REQUIRE(hh.hc_type);
  CHECK(hh.hc_type->type == ExtensionType::hyperbolic);
  CHECK(at(Rat(1), Rat(1)).hc_type->type == ExtensionType::hyperbolic);
}

TEST_CASE("symbol of G2B is of nGou(5) type with r = 1") {
  for (const Rat& eps : {Rat(1), Rat(-2)}) {
    auto g = model_symbol(*fixture("G2B").model, {{"eps", eps}});
    CHECK(g.reduced_growth == std::vector<int>{2, 1, 1, 1, 1});
    CHECK(g.symbol.validate().ok);
    CHECK(g.symbol.is_fundamental().ok);
    CHECK(g.r == 1);
    // der0 is the 2-dimensional Cartan, the hallmark of the non-Goursat
    // symbol (the Goursat one has the 3-dimensional Borel)
    CHECK(der0(g.symbol).size() == 2);
  }
}

TEST_CASE("model symbol demands parameter assignments") {
  CHECK_THROWS(model_symbol(*fixture("2121").model));
}

TEST_CASE("symbol growth agrees with the pointwise chart growth") {
  for (const char* name : {"ENG", "CAR", "2123", "2122_00", "2121_inf"}) {
    const auto& f = fixture(name);
    auto sym = model_symbol(*f.model);
    auto g = growth_at(chart_of_weight1_fields(*f.model));
    CHECK(sym.reduced_growth == g.reduced);
  }
}

namespace {

// Independent route to the symbol: the tangential CR frame of the defining
// equations themselves.  L = d/dz + sum c_k d/dw_k with L(rho_k) = 0 solved
// recursively; on M this realifies to X = d/dx + sum Re(c_k) d/dt_k and
// Y = d/dy - sum Im(c_k) d/dt_k.
GNLA symbol_from_defining_equations(const CRModel& m,
                                    const std::map<std::string, Rat>& params) {
  Realification re = realify(m);
  size_t n = m.coords.size();
  // c_k = 2i (dP_k/dz + sum_j c_j dP_k/dw_j), in declaration (weight) order
  std::vector<MPoly> c(n, MPoly(m.ring));
  GaussRat twoi = GaussRat::i() * GaussRat(2);
  for (const auto& [cname, P] : m.equations) {
    int ci = m.coord_index(cname);
    MPoly acc = P.derivative(0);
    for (size_t j = 1; j < n; ++j)
      if (!c[j].is_zero() && P.depends_on(j)) acc += c[j] * P.derivative(j);
    c[ci] = acc * twoi;
  }
  // realify the coefficients and assemble the real frame
  std::map<size_t, GaussRat> at;
  for (const auto& [name, v] : params) at[*re.real_ring->index_of(name)] = GaussRat(v);
  std::vector<int> wts;
  wts.push_back(1);  // x
  wts.push_back(1);  // y
  for (size_t i = 1; i < n; ++i) wts.push_back(m.weights[i]);
  int nreal = static_cast<int>(1 + n);
  PolyVectorField X = PolyVectorField::zero(re.real_ring, nreal, "X");
  PolyVectorField Y = PolyVectorField::zero(re.real_ring, nreal, "Y");
  X.comps[0] = MPoly::constant(re.real_ring, GaussRat(1));
  Y.comps[1] = MPoly::constant(re.real_ring, GaussRat(1));
  GaussRat half(Rat(1, 2));
  GaussRat minus_i_half = GaussRat(Rat(0), Rat(-1, 2));
  for (size_t k = 1; k < n; ++k) {
    MPoly ck = c[k].substitute(re.real_ring, re.images).eval_partial(at);
    // conj in the real ring: x, y, t real; coefficients conjugate
    std::vector<size_t> id(re.real_ring->nvars());
    for (size_t v = 0; v < id.size(); ++v) id[v] = v;
    MPoly ckbar = ck.conj_permuted(id);
    X.comps[1 + k] = (ck + ckbar) * half;            // Re c_k
    Y.comps[1 + k] = (ck - ckbar) * minus_i_half * GaussRat(-1);  // -Im c_k
  }
  return nilpotent_symbol({X, Y}, {1, 1}, wts, /*require_fundamental=*/false);
}

}  // namespace

TEST_CASE("the defining-equation frame reproduces the symmetry-field symbol types") {
  for (const Rat& a : {Rat(0), Rat(1), Rat(3, 4), Rat(2), Rat(3, 2), Rat(-1)}) {
    CAPTURE(a.to_string());
    const auto& m = *fixture("2121").model;
    GNLA direct = symbol_from_defining_equations(m, {{"a", a}});
    auto direct_type = classify_symbol_over_hc(direct);
    auto field_route = model_symbol(m, {{"a", a}});
    CHECK(direct.growth().reduced == field_route.reduced_growth);
    REQUIRE(direct_type);
    REQUIRE(field_route.hc_type);
    CHECK(direct_type->type == field_route.hc_type->type);
  }
  const std::vector<std::pair<Rat, Rat>> pts = {
      {Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(3, 4), Rat(0)}, {Rat(2), Rat(2)}};
  for (const auto& [a, b] : pts) {
    const auto& m = *fixture("2122").model;
    GNLA direct = symbol_from_defining_equations(m, {{"a", a}, {"b", b}});
    auto direct_type = classify_symbol_over_hc(direct);
    auto field_route = model_symbol(m, {{"a", a}, {"b", b}});
    REQUIRE(direct_type);
    REQUIRE(field_route.hc_type);
    CHECK(direct_type->type == field_route.hc_type->type);
  }
}

TEST_CASE("the GOU fixture is the Goursat jet chart") {
  const auto& f = fixture("GOU");
  CHECK_FALSE(f.model.has_value());
  REQUIRE(f.chart);
  CHECK(growth_at(*f.chart).reduced == std::vector<int>{2, 1, 1, 1, 1});
}

TEST_CASE("fixture sources on disk match the embedded catalog") {
  std::map<std::string, std::string> files = {
      {"ENG", "fixtures/eng.crm"},         {"CAR", "fixtures/car.crm"},
      {"2121", "fixtures/2121.crm"},       {"2121_inf", "fixtures/2121_inf.crm"},
      {"2122", "fixtures/2122.crm"},       {"2122_00", "fixtures/2122_00.crm"},
      {"2123", "fixtures/2123.crm"},       {"G2B", "fixtures/g2b.crm"},
  };
  for (const auto& [name, path] : files) {
    CAPTURE(name);
    CHECK(fixture(name).source == slurp(path));
  }
}

TEST_CASE("model JSON mirrors the parse tree") {
  auto j = fixture("ENG").model->to_json();
  CHECK(j["coords"].size() == 3);
  CHECK(j["equations"].size() == 2);
  CHECK(j["fields"].size() == 5);
}
