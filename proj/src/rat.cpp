#include "crsym/rat.hpp"

#include <stdexcept>

namespace crsym {

Rat::Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

void Rat::normalize() {
  if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
  if (den_.sgn() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rat Rat::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(BigInt::from_string(s));
  return Rat(BigInt::from_string(s.substr(0, slash)),
             BigInt::from_string(s.substr(slash + 1)));
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat Rat::operator+(const Rat& o) const {
  return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator-(const Rat& o) const {
  return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  return Rat(num_ * o.den_, den_ * o.num_);
}

int Rat::cmp(const Rat& o) const { return (num_ * o.den_).cmp(o.num_ * den_); }

Rat Rat::inv() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(den_, num_);
}

std::string Rat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

GaussRat GaussRat::operator/(const GaussRat& o) const {
  if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
  Rat n = o.norm();
  GaussRat t = *this * o.conj();
  return GaussRat(t.re() / n, t.im() / n);
}

std::string GaussRat::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imabs = im_.abs() == Rat(1) ? "i" : im_.abs().to_string() + "i";
  std::string imp = (im_.sgn() < 0 ? "-" : "") + imabs;
  if (re_.is_zero()) return imp;
  return re_.to_string() + (im_.sgn() < 0 ? "-" : "+") + imabs;
}

}  // namespace crsym
