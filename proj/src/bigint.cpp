#include "crsym/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace crsym {

namespace {
constexpr unsigned long long kBase = 1ull << 32;
}

int BigInt::sgn() const {
  if (limbs_.empty()) return small_ > 0 ? 1 : (small_ < 0 ? -1 : 0);
  return sign_;
}

std::vector<uint32_t> BigInt::mag_of(unsigned long long v) {
  std::vector<uint32_t> m;
  while (v) {
    m.push_back(static_cast<uint32_t>(v & 0xffffffffu));
    v >>= 32;
  }
  return m;
}

void BigInt::promote() {
  if (!limbs_.empty()) return;
  long long v = small_;
  sign_ = v > 0 ? 1 : (v < 0 ? -1 : 0);
  unsigned long long a = v < 0 ? 0ull - static_cast<unsigned long long>(v)
                               : static_cast<unsigned long long>(v);
  limbs_ = mag_of(a);
}

void BigInt::demote() {
  if (limbs_.empty()) return;
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) {
    small_ = 0;
    sign_ = 0;
    return;
  }
  if (limbs_.size() > 2) return;
  unsigned long long v = limbs_[0];
  if (limbs_.size() == 2) v |= static_cast<unsigned long long>(limbs_[1]) << 32;
  if (sign_ > 0 && v <= 0x7fffffffffffffffull) {
    small_ = static_cast<long long>(v);
    limbs_.clear();
  } else if (sign_ < 0 && v <= 0x8000000000000000ull) {
    small_ = (v == 0x8000000000000000ull) ? INT64_MIN : -static_cast<long long>(v);
    limbs_.clear();
  }
}

BigInt BigInt::make(int sign, std::vector<uint32_t> mag) {
  BigInt r;
  r.sign_ = sign;
  r.limbs_ = std::move(mag);
  if (r.limbs_.empty()) r.sign_ = 0;
  r.demote();
  return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  const auto& lo = a.size() >= b.size() ? b : a;
  const auto& hi = a.size() >= b.size() ? a : b;
  std::vector<uint32_t> r(hi.size() + 1, 0);
  unsigned long long carry = 0;
  for (size_t i = 0; i < hi.size(); ++i) {
    unsigned long long s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    r[i] = static_cast<uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  r.back() = static_cast<uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// requires a >= b
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  long long borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    long long d = static_cast<long long>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
    if (d < 0) {
      d += static_cast<long long>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(d);
  }
  assert(borrow == 0);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    unsigned long long carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      unsigned long long cur = r[i + j] +
                               static_cast<unsigned long long>(a[i]) * b[j] + carry;
      r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      unsigned long long cur = r[k] + carry;
      r[k] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D, base 2^32.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  q.clear();
  r.clear();
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    unsigned long long d = b[0], rem = 0;
    q.assign(a.size(), 0);
    for (size_t i = a.size(); i-- > 0;) {
      unsigned long long cur = (rem << 32) | a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r = mag_of(rem);
    return;
  }
  // normalize so the divisor's top bit is set
  int s = 0;
  for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++s;
  size_t n = b.size(), m = a.size() - n;
  std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
  for (size_t i = a.size(); i-- > 0;) {
    u[i] |= s ? (a[i] << s) : a[i];
    if (s && i + 1 <= a.size()) u[i + 1] |= static_cast<uint32_t>(
        (static_cast<unsigned long long>(a[i]) >> (32 - s)));
  }
  for (size_t i = n; i-- > 0;) {
    v[i] = s ? (b[i] << s) : b[i];
    if (s && i > 0) v[i] |= static_cast<uint32_t>(
        (static_cast<unsigned long long>(b[i - 1]) >> (32 - s)));
  }
  q.assign(m + 1, 0);
  for (size_t j = m + 1; j-- > 0;) {
    unsigned long long num = (static_cast<unsigned long long>(u[j + n]) << 32) | u[j + n - 1];
    unsigned long long qhat = num / v[n - 1];
    unsigned long long rhat = num % v[n - 1];
    while (qhat >= kBase ||
           qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kBase) break;
    }
    // multiply and subtract
    long long borrow = 0;
    unsigned long long carry = 0;
    for (size_t i = 0; i < n; ++i) {
      unsigned long long p = qhat * v[i] + carry;
      carry = p >> 32;
      long long t = static_cast<long long>(u[i + j]) - borrow -
                    static_cast<long long>(p & 0xffffffffu);
      if (t < 0) {
        t += static_cast<long long>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(t);
    }
    long long t = static_cast<long long>(u[j + n]) - borrow -
                  static_cast<long long>(carry);
    if (t < 0) {
      // qhat was one too large: add back
      t += static_cast<long long>(kBase);
      --qhat;
      unsigned long long c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        unsigned long long ssum = static_cast<unsigned long long>(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<uint32_t>(ssum & 0xffffffffu);
        c2 = ssum >> 32;
      }
      t += static_cast<long long>(c2);
      t &= 0xffffffffll;
    }
    u[j + n] = static_cast<uint32_t>(t);
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  // denormalize remainder
  r.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    r[i] = u[i] >> s;
    if (s && i + 1 < u.size()) r[i] |= static_cast<uint32_t>(
        static_cast<unsigned long long>(u[i + 1]) << (32 - s));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
  if (limbs_.empty()) {
    if (small_ != INT64_MIN) {
      BigInt r;
      r.small_ = -small_;
      return r;
    }
    BigInt r = *this;
    r.promote();
    r.sign_ = -r.sign_;
    return r;
  }
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (limbs_.empty() && o.limbs_.empty()) {
    long long r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) return BigInt(r);
  }
  BigInt a = *this, b = o;
  a.promote();
  b.promote();
  BigInt r;
  if (a.sign_ == 0) return o;
  if (b.sign_ == 0) return *this;
  if (a.sign_ == b.sign_) return make(a.sign_, add_mag(a.limbs_, b.limbs_));
  int c = cmp_mag(a.limbs_, b.limbs_);
  if (c == 0) return BigInt(0);
  if (c > 0) return make(a.sign_, sub_mag(a.limbs_, b.limbs_));
  return make(b.sign_, sub_mag(b.limbs_, a.limbs_));
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (limbs_.empty() && o.limbs_.empty()) {
    long long r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) return BigInt(r);
  }
  BigInt a = *this, b = o;
  a.promote();
  b.promote();
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt(0);
  return make(a.sign_ * b.sign_, mul_mag(a.limbs_, b.limbs_));
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  if (a.limbs_.empty() && b.limbs_.empty() &&
      !(a.small_ == INT64_MIN && b.small_ == -1)) {
    q = BigInt(a.small_ / b.small_);
    r = BigInt(a.small_ % b.small_);
    return;
  }
  BigInt x = a, y = b;
  x.promote();
  y.promote();
  std::vector<uint32_t> qm, rm;
  divmod_mag(x.limbs_, y.limbs_, qm, rm);
  q = make(x.sign_ * y.sign_, std::move(qm));
  r = make(x.sign_, std::move(rm));
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

int BigInt::cmp(const BigInt& o) const {
  if (limbs_.empty() && o.limbs_.empty())
    return small_ < o.small_ ? -1 : (small_ > o.small_ ? 1 : 0);
  int sa = sgn(), sb = o.sgn();
  if (sa != sb) return sa < sb ? -1 : 1;
  BigInt a = *this, b = o;
  a.promote();
  b.promote();
  int c = cmp_mag(a.limbs_, b.limbs_);
  return sa >= 0 ? c : -c;
}

BigInt BigInt::abs() const { return sgn() < 0 ? -*this : *this; }

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  if (a.limbs_.empty() && b.limbs_.empty() && a.small_ != INT64_MIN &&
      b.small_ != INT64_MIN) {
    unsigned long long x = a.small_ < 0 ? -a.small_ : a.small_;
    unsigned long long y = b.small_ < 0 ? -b.small_ : b.small_;
    return BigInt(static_cast<long long>(std::gcd(x, y)));
  }
  BigInt x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    BigInt r = x % y;
    x = y;
    y = r;
  }
  return x;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt(0);
  return (a / gcd(a, b) * b).abs();
}

BigInt BigInt::pow(const BigInt& base, unsigned e) {
  BigInt r(1), b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string BigInt::to_string() const {
  if (limbs_.empty()) return std::to_string(small_);
  std::string out;
  BigInt x = abs();
  const BigInt chunk(1000000000ll);
  std::vector<long long> parts;
  while (!x.is_zero()) {
    BigInt q, r;
    divmod(x, chunk, q, r);
    parts.push_back(r.to_ll());
    x = q;
  }
  out = std::to_string(parts.back());
  for (size_t i = parts.size() - 1; i-- > 0;) {
    std::string p = std::to_string(parts[i]);
    out += std::string(9 - p.size(), '0') + p;
  }
  return sgn() < 0 ? "-" + out : out;
}

BigInt BigInt::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  bool neg = false;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
  BigInt r(0);
  const BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("BigInt: bad digit in '" + std::string(s) + "'");
    r = r * ten + BigInt(s[i] - '0');
  }
  return neg ? -r : r;
}

}  // namespace crsym
