// Copyright 2026 The ludus authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LUDUS_RATIONAL_HPP
#define LUDUS_RATIONAL_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace ludus {

/// Arbitrary-precision signed integer, base 10^9 limbs, little-endian.
/// Desk-scale arithmetic: schoolbook multiplication and division are
/// entirely adequate for the instance sizes handled by the library.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v) {  // NOLINT: implicit by design
    unsigned long long m = (v < 0) ? 0ull - static_cast<unsigned long long>(v)
                                   : static_cast<unsigned long long>(v);
    while (m > 0) {
      limbs_.push_back(static_cast<uint32_t>(m % kBase));
      m /= kBase;
    }
    sign_ = limbs_.empty() ? 0 : (v < 0 ? -1 : 1);
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}  // NOLINT

  static BigInt from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    size_t pos = 0;
    int sign = 1;
    if (s[0] == '+' || s[0] == '-') {
      sign = (s[0] == '-') ? -1 : 1;
      pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    for (; pos < s.size(); ++pos) {
      if (s[pos] < '0' || s[pos] > '9')
        throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
      r = r.mul_small(10);
      r = add_magnitude(r, BigInt(s[pos] - '0'));
    }
    if (!r.limbs_.empty()) r.sign_ = sign;
    return r;
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = cmp_magnitude(a, b);
    return a.sign_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_) {
      BigInt r = add_magnitude(a, b);
      r.sign_ = a.sign_;
      return r;
    }
    int c = cmp_magnitude(a, b);
    if (c == 0) return BigInt();
    BigInt r = (c > 0) ? sub_magnitude(a, b) : sub_magnitude(b, a);
    r.sign_ = (c > 0) ? a.sign_ : b.sign_;
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
      unsigned long long carry = 0;
      for (size_t j = 0; j < b.limbs_.size(); ++j) {
        unsigned __int128 cur = static_cast<unsigned __int128>(a.limbs_[i]) * b.limbs_[j] +
                                r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
        carry = static_cast<unsigned long long>(cur / kBase);
      }
      size_t k = i + b.limbs_.size();
      while (carry > 0) {
        unsigned long long cur = r.limbs_[k] + carry;
        r.limbs_[k] = static_cast<uint32_t>(cur % kBase);
        carry = cur / kBase;
        ++k;
      }
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  /// Truncated division (quotient rounds toward zero, C++ semantics).
  static void divmod(const BigInt& a, const BigInt& b, BigInt* q, BigInt* r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    BigInt quot, rem;
    divmod_magnitude(a, b, &quot, &rem);
    if (!quot.limbs_.empty()) quot.sign_ = a.sign_ * b.sign_;
    if (!rem.limbs_.empty()) rem.sign_ = a.sign_;
    if (q) *q = quot;
    if (r) *r = rem;
  }
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q;
    divmod(a, b, &q, nullptr);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt r;
    divmod(a, b, nullptr, &r);
    return r;
  }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
      BigInt r = a % b;
      a = b;
      b = r;
    }
    return a.is_zero() ? BigInt(1) : a;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s = (sign_ < 0) ? "-" : "";
    s += std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

  double to_double() const {
    double v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return sign_ < 0 ? -v : v;
  }

  /// Fits in long long? (conservative; used by small fast paths)
  bool fits_int64() const { return limbs_.size() <= 2; }

 private:
  static constexpr uint32_t kBase = 1000000000u;
  std::vector<uint32_t> limbs_;
  int sign_ = 0;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
  }

  BigInt mul_small(uint32_t m) const {
    BigInt r;
    if (is_zero() || m == 0) return r;
    unsigned long long carry = 0;
    r.limbs_.reserve(limbs_.size() + 1);
    for (uint32_t limb : limbs_) {
      unsigned long long cur = static_cast<unsigned long long>(limb) * m + carry;
      r.limbs_.push_back(static_cast<uint32_t>(cur % kBase));
      carry = cur / kBase;
    }
    while (carry > 0) {
      r.limbs_.push_back(static_cast<uint32_t>(carry % kBase));
      carry /= kBase;
    }
    r.sign_ = sign_;
    return r;
  }

  static int cmp_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
      return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
  }

  static BigInt add_magnitude(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(std::max(a.limbs_.size(), b.limbs_.size()) + 1, 0);
    uint32_t carry = 0;
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
      uint64_t cur = carry;
      if (i < a.limbs_.size()) cur += a.limbs_[i];
      if (i < b.limbs_.size()) cur += b.limbs_[i];
      r.limbs_[i] = static_cast<uint32_t>(cur % kBase);
      carry = static_cast<uint32_t>(cur / kBase);
    }
    r.trim();
    r.sign_ = r.limbs_.empty() ? 0 : 1;
    return r;
  }

  // requires |a| >= |b|
  static BigInt sub_magnitude(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(a.limbs_.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
      int64_t cur = static_cast<int64_t>(a.limbs_[i]) - borrow -
                    (i < b.limbs_.size() ? b.limbs_[i] : 0);
      if (cur < 0) {
        cur += kBase;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r.limbs_[i] = static_cast<uint32_t>(cur);
    }
    r.trim();
    r.sign_ = r.limbs_.empty() ? 0 : 1;
    return r;
  }

  // Schoolbook long division on magnitudes; per-position digit found by
  // binary search, which keeps the code simple and obviously correct.
  static void divmod_magnitude(const BigInt& a, const BigInt& b, BigInt* q, BigInt* r) {
    BigInt bm = b.abs();
    if (cmp_magnitude(a, bm) < 0) {
      *q = BigInt();
      *r = a.abs();
      return;
    }
    BigInt rem;
    std::vector<uint32_t> qdigits(a.limbs_.size(), 0);
    for (size_t i = a.limbs_.size(); i-- > 0;) {
      // rem = rem * base + limb_i
      rem.limbs_.insert(rem.limbs_.begin(), a.limbs_[i]);
      rem.trim();
      rem.sign_ = rem.limbs_.empty() ? 0 : 1;
      uint32_t lo = 0, hi = kBase - 1, digit = 0;
      while (lo <= hi) {
        uint32_t mid = lo + (hi - lo) / 2;
        if (cmp_magnitude(bm.mul_small(mid), rem) <= 0) {
          digit = mid;
          lo = mid + 1;
        } else {
          if (mid == 0) break;
          hi = mid - 1;
        }
      }
      qdigits[i] = digit;
      if (digit > 0) rem = sub_magnitude(rem, bm.mul_small(digit));
    }
    q->limbs_ = std::move(qdigits);
    q->trim();
    q->sign_ = q->limbs_.empty() ? 0 : 1;
    *r = rem;
  }
};

/// Exact rational number. Denominator is kept positive and the fraction in
/// lowest terms at all times, so equality is plain member comparison.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT
  Rational(int v) : num_(v), den_(1) {}        // NOLINT
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
  Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

  /// Parses "p/q", "p" or a plain decimal like "-0.25".
  static Rational from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      return Rational(BigInt::from_string(s.substr(0, slash)),
                      BigInt::from_string(s.substr(slash + 1)));
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      BigInt den(1);
      for (size_t i = dot + 1; i < s.size(); ++i) den = den * BigInt(10);
      return Rational(BigInt::from_string(digits), den);
    }
    return Rational(BigInt::from_string(s), BigInt(1));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  std::string to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

  double to_double() const { return num_.to_double() / den_.to_double(); }

 private:
  BigInt num_;
  BigInt den_;

  void reduce() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
};

}  // namespace ludus

#endif  // LUDUS_RATIONAL_HPP
