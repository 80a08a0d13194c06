#ifndef CRSYM_BIGINT_HPP
#define CRSYM_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace crsym {

// Arbitrary-precision signed integer with an inline int64 fast path.
// Values that fit in int64 never touch the heap; promotion happens on
// overflow and results are demoted back when they fit again.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v) : small_(v) {}  // NOLINT: implicit by design
  BigInt(int v) : small_(v) {}        // NOLINT

  static BigInt from_string(std::string_view s);

  bool is_zero() const { return limbs_.empty() ? small_ == 0 : false; }
  bool is_one() const { return limbs_.empty() && small_ == 1; }
  int sgn() const;

  bool fits_ll() const { return limbs_.empty(); }
  long long to_ll() const { return small_; }  // valid only when fits_ll()

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  // Truncated division (C++ semantics): quotient toward zero,
  // remainder has the sign of the dividend.
  BigInt operator/(const BigInt& o) const;
  BigInt operator%(const BigInt& o) const;
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  bool operator==(const BigInt& o) const { return cmp(o) == 0; }
  bool operator!=(const BigInt& o) const { return cmp(o) != 0; }
  bool operator<(const BigInt& o) const { return cmp(o) < 0; }
  bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
  bool operator>(const BigInt& o) const { return cmp(o) > 0; }
  bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

  int cmp(const BigInt& o) const;
  BigInt abs() const;

  static BigInt gcd(const BigInt& a, const BigInt& b);
  static BigInt lcm(const BigInt& a, const BigInt& b);
  static BigInt pow(const BigInt& base, unsigned e);

  std::string to_string() const;

 private:
  // small mode: limbs_ empty, value == small_.
  // big mode: value == sign_ * sum limbs_[i] * 2^(32 i), top limb nonzero.
  long long small_ = 0;
  int sign_ = 0;
  std::vector<uint32_t> limbs_;

  void promote();
  void demote();
  static std::vector<uint32_t> mag_of(unsigned long long v);

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
  static BigInt make(int sign, std::vector<uint32_t> mag);
};

inline BigInt operator*(long long a, const BigInt& b) { return BigInt(a) * b; }

}  // namespace crsym

#endif
