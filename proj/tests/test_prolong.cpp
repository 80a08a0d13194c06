#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crsym/gnla.hpp"
#include "crsym/prolong.hpp"

using namespace crsym;

namespace {

QMat j_mat(const Rat& a, const Rat& b) {
  // J e1' = a e1'' + b e1',  J e1'' determined by J^2 = -id
  QMat j(2, 2);
  j(0, 0) = b;
  j(1, 0) = a;
  j(0, 1) = -(Rat(1) + b * b) / a;
  j(1, 1) = -b;
  return j;
}

const std::vector<QMat>& sample_js() {
  static const std::vector<QMat> js = {j_mat(Rat(1), Rat(0)), j_mat(Rat(2), Rat(3)),
                                       j_mat(Rat(1), Rat(-1))};
  return js;
}

int der0_g1_rank(const std::vector<Derivation0>& basis) {
  Mat<Rat> m(0, 4);
  for (const auto& d : basis)
    m.append_row({d.blocks[0](0, 0), d.blocks[0](0, 1), d.blocks[0](1, 0),
                  d.blocks[0](1, 1)});
  return m.rank();
}

}  // namespace

TEST_CASE("der0 of Goursat symbols is the lower Borel, dim 3") {
  for (int n = 4; n <= 7; ++n) {
    auto basis = der0(gou(n));
    CHECK(basis.size() == 3);
    for (const auto& d : basis) {
      CHECK(d.blocks[0](0, 1).is_zero());  // lower triangular on (e1', e1'')
      CHECK(leibniz_holds(gou(n), d));
    }
    CHECK(der0_g1_rank(basis) == 3);
  }
}

TEST_CASE("der0 of nGou is 2-dimensional diagonal") {
  for (int n : {5, 7}) {
    auto basis = der0(ngou(n));
    CHECK(basis.size() == 2);
    for (const auto& d : basis) {
      CHECK(d.blocks[0](0, 1).is_zero());
      CHECK(d.blocks[0](1, 0).is_zero());
    }
  }
}

TEST_CASE("der0 of m_HC restricted to g_{-1} is all of gl(2)") {
  auto basis = der0(m_hc());
  CHECK(basis.size() == 4);
  CHECK(der0_g1_rank(basis) == 4);
}

TEST_CASE("the grading element belongs to der0 and propagation is unique") {
  std::vector<GNLA> algs = {heis3(), m_hc(), ell6(), ell7(), ell8(),
                            mprime5(), mdblprime5(), gou(5), ngou(5), free_gnla(4)};
  for (const auto& m : algs) {
    CAPTURE(m.dims());
    auto basis = der0(m);
    std::vector<QVec> flats;
    for (const auto& d : basis) flats.push_back(d.flat());
    CHECK(span_member(grading_element(m).flat(), flats).has_value());
    // zero g_{-1} block forces the zero derivation
    CHECK(der0_g1_rank(basis) == static_cast<int>(basis.size()));
    for (const auto& d : basis) CHECK(leibniz_holds(m, d));
  }
}

TEST_CASE("cr_g0 dimensions") {
  CHECK(cr_g0(m_hc(), j_mat(Rat(1), Rat(0))).r == 2);
  CHECK(cr_g0(heis3(), j_mat(Rat(1), Rat(0))).r == 2);
  for (int n = 3; n <= 6; ++n)
    for (const auto& j : sample_js()) CHECK(cr_g0(gou(n), j).r == 1);
}

TEST_CASE("su(1,2): prolongation of heis3 with g0 = gl(1,C)") {
  auto g0 = cr_g0(heis3(), j_mat(Rat(1), Rat(0)));
  auto rep = prolong(heis3(), g0.basis);
  CHECK(rep.dims_negative == std::vector<int>{1, 2});
  CHECK(rep.dim_g0 == 2);
  CHECK(rep.dims_positive == std::vector<int>{2, 1, 0});
  CHECK(rep.terminated);
  CHECK_FALSE(rep.rigid);
  REQUIRE(rep.total);
  CHECK(*rep.total == 8);
}

TEST_CASE("m_HC is prolongation rigid with total 7") {
  auto g0 = cr_g0(m_hc(), j_mat(Rat(1), Rat(0)));
  auto rep = prolong(m_hc(), g0.basis);
  CHECK(rep.dims_positive == std::vector<int>{0});
  CHECK(rep.rigid);
  REQUIRE(rep.total);
  CHECK(*rep.total == 7);
}

TEST_CASE("heis3 with full der0 does not terminate at any bound") {
  auto rep = prolong(heis3(), der0(heis3()), 6);
  CHECK_FALSE(rep.terminated);
  CHECK_FALSE(rep.total.has_value());
  CHECK(rep.dims_positive.size() == 6);
  for (int d : rep.dims_positive) CHECK(d > 0);
}

TEST_CASE("monotone termination: components stay zero past the first zero") {
  for (const GNLA& m : {m_hc(), gou(4)}) {
    auto g0 = cr_g0(m, j_mat(Rat(1), Rat(0)));
    auto rep = prolong(m, g0.basis, 3, /*stop_at_zero=*/false);
    REQUIRE(rep.dims_positive.size() == 3);
    for (int d : rep.dims_positive) CHECK(d == 0);
  }
}

TEST_CASE("prolongation rigidity holds on a sample of depth > 2 symbols") {
  for (const GNLA& m : {gou(3), gou(5), ngou(5), ell6(), mprime5(), free_gnla(3)})
    for (const auto& j : sample_js()) {
      auto g0 = cr_g0(m, j);
      auto rep = prolong(m, g0.basis, 1);
      REQUIRE(rep.dims_positive.size() == 1);
      CHECK(rep.dims_positive[0] == 0);
    }
}

TEST_CASE("symmetry bounds") {
  for (int n = 3; n <= 6; ++n)
    CHECK(symmetry_bound(gou(n), j_mat(Rat(2), Rat(3))) == n + 2);
  CHECK(symmetry_bound(ell6(), j_mat(Rat(1), Rat(0))) == 8);
  CHECK(symmetry_bound(free_gnla(4), j_mat(Rat(1), Rat(0))) == 10);
  CHECK(symmetry_bound(heis3(), j_mat(Rat(1), Rat(0))) == 8);
}

TEST_CASE("report JSON shape") {
  auto g0 = cr_g0(m_hc(), j_mat(Rat(1), Rat(0)));
  auto j = prolong(m_hc(), g0.basis).to_json();
  CHECK(j["dims_negative"] == nlohmann::json({2, 1, 2}));
  CHECK(j["dim_g0"] == 2);
  CHECK(j["rigid"] == true);
  CHECK(j["total"] == 7);
}
