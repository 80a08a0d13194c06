#ifndef CRSYM_RAT_HPP
#define CRSYM_RAT_HPP

#include <string>
#include <string_view>

#include "crsym/bigint.hpp"

namespace crsym {

// Exact rational, always in lowest terms with positive denominator.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT
  Rat(int n) : num_(n), den_(1) {}        // NOLINT
  Rat(BigInt n) : num_(std::move(n)), den_(1) {}
  Rat(BigInt n, BigInt d);
  Rat(long long n, long long d) : Rat(BigInt(n), BigInt(d)) {}

  static Rat parse(std::string_view s);  // "p", "p/q", optional sign

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  int sgn() const { return num_.sgn(); }

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const { return cmp(o) < 0; }
  bool operator<=(const Rat& o) const { return cmp(o) <= 0; }
  bool operator>(const Rat& o) const { return cmp(o) > 0; }
  bool operator>=(const Rat& o) const { return cmp(o) >= 0; }
  int cmp(const Rat& o) const;

  Rat abs() const { return sgn() < 0 ? -*this : *this; }
  Rat inv() const;

  std::string to_string() const;  // "p" or "p/q"

 private:
  BigInt num_, den_;
  void normalize();
};

inline Rat operator*(long long a, const Rat& b) { return Rat(a) * b; }

// Gaussian rational re + im*i.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(Rat re) : re_(std::move(re)) {}  // NOLINT
  GaussRat(long long re) : re_(re) {}       // NOLINT
  GaussRat(int re) : re_(re) {}             // NOLINT
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  Rat norm() const { return re_ * re_ + im_ * im_; }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat operator+(const GaussRat& o) const { return GaussRat(re_ + o.re_, im_ + o.im_); }
  GaussRat operator-(const GaussRat& o) const { return GaussRat(re_ - o.re_, im_ - o.im_); }
  GaussRat operator*(const GaussRat& o) const {
    return GaussRat(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  GaussRat operator/(const GaussRat& o) const;
  GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
  GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

  bool operator==(const GaussRat& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }

  std::string to_string() const;  // "3", "-1/2", "i", "2-3i", ...

 private:
  Rat re_, im_;
};

inline GaussRat operator*(const Rat& a, const GaussRat& b) { return GaussRat(a) * b; }

}  // namespace crsym

#endif
