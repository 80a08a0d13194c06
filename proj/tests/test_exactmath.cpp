#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crsym/matrix.hpp"
#include "crsym/mpoly.hpp"
#include "crsym/rat.hpp"

using namespace crsym;

namespace {

// deterministic xorshift PRNG for property tests
struct Rng {
  uint64_t s = 0x9e3779b97f4a7c15ull;
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long long small(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  BigInt big(int limbs) {
    BigInt r(0);
    for (int i = 0; i < limbs; ++i) r = r * BigInt(1ll << 32) + BigInt(small(0, (1ll << 32) - 1));
    return small(0, 1) ? r : -r;
  }
  Rat rat() { return Rat(small(-20, 20), small(1, 12)); }
};

}  // namespace

TEST_CASE("bigint basic arithmetic and strings") {
  CHECK(BigInt(0).is_zero());
  CHECK(BigInt::from_string("-120").to_string() == "-120");
  BigInt big = BigInt::pow(BigInt(10), 40);
  CHECK(big.to_string() == "1" + std::string(40, '0'));
  CHECK((big - big).is_zero());
  CHECK((big * BigInt(-3)).to_string() == "-3" + std::string(40, '0'));
  CHECK(BigInt::from_string(big.to_string()) == big);
  CHECK(BigInt::gcd(BigInt(12), BigInt(-18)) == BigInt(6));
  CHECK(BigInt::lcm(BigInt(4), BigInt(6)) == BigInt(12));
}

TEST_CASE("bigint division is Euclidean-exact on random values") {
  Rng rng;
  for (int it = 0; it < 400; ++it) {
    BigInt a = rng.big(1 + it % 5);
    BigInt b = rng.big(1 + it % 3);
    if (b.is_zero()) continue;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    if (!a.is_zero()) CHECK((r.is_zero() || r.sgn() == a.sgn()));
    CHECK(a * b / b == a);
  }
}

TEST_CASE("rationals are canonical") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(-1, 2).to_string() == "-1/2");
  CHECK(Rat(6, 3).to_string() == "2");
  CHECK(Rat::parse("-7/21") == Rat(-1, 3));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) * Rat(3, 5) == Rat(1, 5));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("gaussian rationals: conj is an involutive ring map") {
  Rng rng;
  for (int it = 0; it < 100; ++it) {
    GaussRat x(rng.rat(), rng.rat()), y(rng.rat(), rng.rat());
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
    if (!x.is_zero()) CHECK(x / x == GaussRat(1));
  }
  CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
  CHECK(GaussRat(Rat(2), Rat(-3)).to_string() == "2-3i");
}

TEST_CASE("mpoly ring axioms on random triples") {
  auto R = make_ring({"z", "u", "a"});
  Rng rng;
  auto rand_poly = [&]() {
    MPoly p(R);
    for (int t = 0; t < 4; ++t) {
      MPoly::Exp e = {static_cast<uint16_t>(rng.small(0, 2)),
                      static_cast<uint16_t>(rng.small(0, 2)),
                      static_cast<uint16_t>(rng.small(0, 1))};
      p.add_term(e, GaussRat(rng.rat(), rng.rat()));
    }
    return p;
  };
  for (int it = 0; it < 40; ++it) {
    MPoly p = rand_poly(), q = rand_poly(), r = rand_poly();
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
  }
}

TEST_CASE("poly_is_zero holds identically in parameters") {
  auto R = make_ring({"z", "zb", "a"});
  MPoly z = MPoly::variable(R, "z");
  MPoly zb = MPoly::variable(R, "zb");
  MPoly a = MPoly::variable(R, "a");
  CHECK(((z + zb * MPoly::constant(R, GaussRat(0))) - z).is_zero());
  CHECK((a * z - z * a).is_zero());
  CHECK_FALSE((a * z - z).is_zero());
}

TEST_CASE("rank examples") {
  QMat id3 = QMat::identity(3);
  CHECK(id3.rank() == 3);
  CHECK(bareiss_rank(id3) == 3);
  QMat z(2, 5);
  CHECK(z.rank() == 0);
  CHECK(bareiss_rank(z) == 0);
  QMat prop(2, 2);
  prop(0, 0) = Rat(1);
  prop(0, 1) = Rat(2);
  prop(1, 0) = Rat(2);
  prop(1, 1) = Rat(4);
  CHECK(prop.rank() == 1);
  CHECK(bareiss_rank(prop) == 1);
}

TEST_CASE("nullspace examples") {
  CHECK(QMat::identity(4).nullspace().empty());
  QMat z(1, 3);
  CHECK(z.nullspace().size() == 3);
  QMat ones(1, 2);
  ones(0, 0) = Rat(1);
  ones(0, 1) = Rat(1);
  auto ns = ones.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == -ns[0][1]);
}

TEST_CASE("member decomposition") {
  std::vector<QVec> span = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  auto c = span_member<Rat>({Rat(1), Rat(1)}, span);
  REQUIRE(c);
  CHECK((*c)[0] == Rat(1));
  CHECK((*c)[1] == Rat(1));
  CHECK_FALSE(span_member<Rat>({Rat(1), Rat(0)}, {{Rat(0), Rat(1)}}));
  auto zero = span_member<Rat>({Rat(0), Rat(0)}, span);
  REQUIRE(zero);
  CHECK((*zero)[0].is_zero());
}

TEST_CASE("rank-nullity on random small matrices, two elimination routes agree") {
  Rng rng;
  for (int it = 0; it < 60; ++it) {
    int r = static_cast<int>(rng.small(1, 5)), c = static_cast<int>(rng.small(1, 5));
    QMat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (rng.small(0, 2)) m(i, j) = rng.rat();
    int rk = m.rank();
    CHECK(rk == bareiss_rank(m));
    CHECK(rk + static_cast<int>(m.nullspace().size()) == c);
    for (const auto& v : m.nullspace())
      for (int i = 0; i < r; ++i) {
        Rat s(0);
        for (int j = 0; j < c; ++j) s += m(i, j) * v[j];
        CHECK(s.is_zero());
      }
  }
}

TEST_CASE("parametric matrices demand specialization") {
  auto R = make_ring({"a"});
  ParamMat pm(1, 1, R);
  pm(0, 0) = MPoly::variable(R, "a");
  CHECK_THROWS_WITH(pm.rank(), "specialize parameters first");
  auto num = pm.specialize({{0, GaussRat(3)}});
  CHECK(num(0, 0) == GaussRat(3));
}
