#include "crsym/crmodel.hpp"
namespace crsym {
namespace {
const char* kENGSrc = R"CRM(# "Engel" model M^4 in C^3, reduced growth (2,1,1)
coord z : weight 1;
coord u : weight 2;
coord v : weight 3;

Im(u) = |z|^2;
Im(v) = Re(z^2 * conj(z));

field S0   = z*d(z) + 2*u*d(u) + 3*v*d(v);
field S1p  = d(z) + 2*i*z*d(u) + (2*u + i*z^2)*d(v);
field S1pp = i*d(z) + 2*z*d(u) + z^2*d(v);
field S2   = d(u);
field S3p  = d(v);
)CRM";
const char* kCARSrc = R"CRM(# "Hilbert-Cartan" model M^5 in C^4, reduced growth (2,1,2)
coord z : weight 1;
coord u : weight 2;
coord v : weight 3;
coord w : weight 3;

Im(u) = |z|^2;
Im(v) = Re(z^2 * conj(z));
Im(w) = Im(z^2 * conj(z));

field S0   = z*d(z) + 2*u*d(u) + 3*v*d(v) + 3*w*d(w);
field S0J  = i*z*d(z) + v*d(w) - w*d(v);
field S1p  = d(z) + 2*i*z*d(u) + (2*u + i*z^2)*d(v) + z^2*d(w);
field S1pp = i*d(z) + 2*z*d(u) + z^2*d(v) + (2*u - i*z^2)*d(w);
field S2   = d(u);
field S3p  = d(v);
field S3pp = d(w);
)CRM";
const char* k2121Src = R"CRM(# M^6 in C^5 of reduced growth (2,1,2,1), one real parameter
coord z : weight 1;
coord u : weight 2;
coord v : weight 3;
coord w : weight 3;
coord s : weight 4;
param a;

Im(u) = |z|^2;
Im(v) = Re(z^2 * conj(z));
Im(w) = Im(z^2 * conj(z));
Im(s) = Re(z^3 * conj(z)) + a * |z|^2 * |z|^2;

field S0   = z*d(z) + 2*u*d(u) + 3*v*d(v) + 3*w*d(w) + 4*s*d(s);
field S1p  = d(z) + 2*i*z*d(u) + (2*u + i*z^2)*d(v) + z^2*d(w)
           + ((4*a + 3)*v + i*z^3)*d(s);
field S1pp = i*d(z) + 2*z*d(u) + z^2*d(v) + (2*u - i*z^2)*d(w)
           + ((4*a - 3)*w + z^3)*d(s);
field S2   = d(u);
field S3p  = d(v);
field S3pp = d(w);
field S4   = d(s);
)CRM";
const char* kInf2121Src = R"CRM(# the renormalized limit of the (2,1,2,1) family: Im(s) = |z|^4, r = 2
coord z : weight 1;
coord u : weight 2;
coord v : weight 3;
coord w : weight 3;
coord s : weight 4;

Im(u) = |z|^2;
Im(v) = Re(z^2 * conj(z));
Im(w) = Im(z^2 * conj(z));
Im(s) = |z|^2 * |z|^2;

field S0   = z*d(z) + 2*u*d(u) + 3*v*d(v) + 3*w*d(w) + 4*s*d(s);
field S0J  = i*z*d(z) + v*d(w) - w*d(v);
field S1p  = d(z) + 2*i*z*d(u) + (2*u + i*z^2)*d(v) + z^2*d(w) + 4*v*d(s);
field S1pp = i*d(z) + 2*z*d(u) + z^2*d(v) + (2*u - i*z^2)*d(w) + 4*w*d(s);
field S2   = d(u);
field S3p  = d(v);
field S3pp = d(w);
field S4   = d(s);
)CRM";
const char* k2122Src = R"CRM(# M^7 in C^6 of reduced growth (2,1,2,2), two real parameters
coord z : weight 1;
coord u : weight 2;
coord v : weight 3;
coord w : weight 3;
coord s : weight 4;
coord t : weight 4;
param a;
param b;

Im(u) = |z|^2;
Im(v) = Re(z^2 * conj(z));
Im(w) = Im(z^2 * conj(z));
Im(s) = Re(z^3 * conj(z)) + a * |z|^2 * |z|^2;
Im(t) = Im(z^3 * conj(z)) + b * |z|^2 * |z|^2;

field S0   = z*d(z) + 2*u*d(u) + 3*v*d(v) + 3*w*d(w) + 4*s*d(s) + 4*t*d(t);
field S1p  = d(z) + 2*i*z*d(u) + (2*u + i*z^2)*d(v) + z^2*d(w)
           + ((4*a + 3)*v + i*z^3)*d(s) + (4*b*v + 3*w + z^3)*d(t);
field S1pp = i*d(z) + 2*z*d(u) + z^2*d(v) + (2*u - i*z^2)*d(w)
           + ((4*a - 3)*w + z^3)*d(s) + (4*b*w + 3*v - i*z^3)*d(t);
field S2   = d(u);
field S3p  = d(v);
field S3pp = d(w);
field S4p  = d(s);
field S4pp = d(t);
)CRM";
const char* kZero2122Src = R"CRM(# the a = b = 0 member of the (2,1,2,2) family, with its extra rotation: r = 2
coord z : weight 1;
coord u : weight 2;
coord v : weight 3;
coord w : weight 3;
coord s : weight 4;
coord t : weight 4;

Im(u) = |z|^2;
Im(v) = Re(z^2 * conj(z));
Im(w) = Im(z^2 * conj(z));
Im(s) = Re(z^3 * conj(z));
Im(t) = Im(z^3 * conj(z));

field S0   = z*d(z) + 2*u*d(u) + 3*v*d(v) + 3*w*d(w) + 4*s*d(s) + 4*t*d(t);
field S0J  = i*z*d(z) + v*d(w) - w*d(v) + 2*s*d(t) - 2*t*d(s);
field S1p  = d(z) + 2*i*z*d(u) + (2*u + i*z^2)*d(v) + z^2*d(w)
           + (3*v + i*z^3)*d(s) + (3*w + z^3)*d(t);
field S1pp = i*d(z) + 2*z*d(u) + z^2*d(v) + (2*u - i*z^2)*d(w)
           + (-3*w + z^3)*d(s) + (3*v - i*z^3)*d(t);
field S2   = d(u);
field S3p  = d(v);
field S3pp = d(w);
field S4p  = d(s);
field S4pp = d(t);
)CRM";
const char* k2123Src = R"CRM(# M^8 in C^7 of reduced growth (2,1,2,3): the free symbol of depth 4, r = 2
coord z : weight 1;
coord u : weight 2;
coord v : weight 3;
coord w : weight 3;
coord s : weight 4;
coord t : weight 4;
coord q : weight 4;

Im(u) = |z|^2;
Im(v) = Re(z^2 * conj(z));
Im(w) = Im(z^2 * conj(z));
Im(s) = Re(z^3 * conj(z));
Im(t) = Im(z^3 * conj(z));
Im(q) = |z|^2 * |z|^2;

field S0p   = z*d(z) + 2*u*d(u) + 3*v*d(v) + 3*w*d(w) + 4*s*d(s) + 4*t*d(t) + 4*q*d(q);
field S0pp  = i*z*d(z) + v*d(w) - w*d(v) + 2*s*d(t) - 2*t*d(s);
field S1p   = d(z) + 2*i*z*d(u) + (2*u + i*z^2)*d(v) + z^2*d(w)
            + (3*v + i*z^3)*d(s) + (3*w + z^3)*d(t) + 4*v*d(q);
field S1pp  = i*d(z) + 2*z*d(u) + z^2*d(v) + (2*u - i*z^2)*d(w)
            + (-3*w + z^3)*d(s) + (3*v - i*z^3)*d(t) + 4*w*d(q);
field S2    = d(u);
field S3p   = d(v);
field S3pp  = d(w);
field S4p   = d(s);
field S4pp  = d(t);
field S4ppp = d(q);
)CRM";
const char* kG2BSrc = R"CRM(# M^6 in C^5 over the full-flag chart: prolonged (2,3,5), one real parameter
coord z : weight 1;
coord s : weight 2;
coord u : weight 3;
coord v : weight 4;
coord w : weight 5;
param eps;

Im(s) = |z|^2;
Im(u) = Re(z*s + z^2*conj(z));
Im(v) = Re(z^2*s + z^3*conj(z)) + 3/4 * |z|^2 * |z|^2;
Im(w) = Re(z^3*s + 24*z^2*conj(z)*s - 2*(eps + i)*z^4*conj(z)
           - 4*(eps + 5*i)*z^3*conj(z)^2);

field S0   = z*d(z) + 2*s*d(s) + 3*u*d(u) + 4*v*d(v) + 5*w*d(w);
field S1p  = d(z) + 2*i*z*d(s) + (2+i)/5*(5*s - (3-4*i)*z^2)*d(u)
           + (6*u - 4*i*z*s - (2-i)*z^3)*d(v)
           + (24*s^2 - 16*eps*v + (27+16*eps)*i*z^2*s - 2*i*eps*z^4)*d(w);
field S1pp = i*d(z) + 2*z*d(s) + ((1+2*i)*z^2 - s)*d(u)
           + ((1+2*i)*z^2 - 2*s)*z*d(v)
           + (16*v + (21-16*i)*z^2*s - 2*eps*z^4)*d(w);
field S2   = d(s) + i*z*d(u) + i*z^2*d(v) + (24*u - 24*i*z*s + i*z^3)*d(w);
field S3   = d(u);
field S4   = d(v);
field S5   = d(w);
)CRM";
}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> cat = [] {
    std::vector<Fixture> v;
    auto add_model = [&](const std::string& name, const char* src,
                         std::vector<Rat> extra) {
      Fixture f;
      f.name = name;
      f.source = src;
      f.model = parse_model(f.source);
      f.extra_samples = std::move(extra);
      v.push_back(std::move(f));
    };
    {
      Fixture gou_tube;
      gou_tube.name = "GOU";
      gou_tube.chart = goursat_chart(5);
      v.push_back(std::move(gou_tube));
    }
    add_model("ENG", kENGSrc, {});
    add_model("CAR", kCARSrc, {});
    add_model("2121", k2121Src, {Rat::parse("3/2"), Rat::parse("-3/2")});
    add_model("2121_inf", kInf2121Src, {});
    add_model("2122", k2122Src, {Rat::parse("3/2"), Rat::parse("-3/2")});
    add_model("2122_00", kZero2122Src, {});
    add_model("2123", k2123Src, {});
    add_model("G2B", kG2BSrc, {});
    return v;
  }();
  return cat;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixture_catalog())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown fixture " + name);
}

}  // namespace crsym
