#include "doctest.h"

#include "ludus/rational.hpp"
#include "ludus/rng.hpp"

using ludus::BigInt;
using ludus::Rational;

TEST_CASE("BigInt basic arithmetic") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK((BigInt(123456789) * BigInt(987654321)).to_string() == "121932631112635269");
  CHECK((BigInt::from_string("-999999999999999999") + BigInt(1)).to_string() ==
        "-999999999999999998");
  CHECK(BigInt::from_string("1000000000000000000000") ==
        BigInt::from_string("1000000000") * BigInt::from_string("1000000000000"));
  CHECK(BigInt(-7) % BigInt(3) == BigInt(-1));  // truncated like C++
  CHECK(BigInt(-7) / BigInt(3) == BigInt(-2));
}

TEST_CASE("BigInt divmod round trip on random values") {
  ludus::Rng rng(17);
  for (int it = 0; it < 300; ++it) {
    long long a = static_cast<long long>(rng.next_u64() % 2000000000ll) - 1000000000ll;
    long long b = static_cast<long long>(rng.next_u64() % 999983ll) + 1;
    if (rng.next_below(2)) b = -b;
    BigInt q, r;
    BigInt::divmod(BigInt(a), BigInt(b), &q, &r);
    CHECK(q == BigInt(a / b));
    CHECK(r == BigInt(a % b));
    CHECK(q * BigInt(b) + r == BigInt(a));
  }
}

namespace {

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string s;
  while (m > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

}  // namespace

TEST_CASE("BigInt agrees with __int128 on random 64-bit operands") {
  ludus::Rng rng(19);
  for (int it = 0; it < 200; ++it) {
    long long a = static_cast<long long>(rng.next_u64());
    long long b = static_cast<long long>(rng.next_u64() >> rng.next_int(1, 30));
    if (b == 0) b = 1;
    BigInt ba(a), bb(b);
    CHECK((ba * bb).to_string() ==
          int128_to_string(static_cast<__int128>(a) * static_cast<__int128>(b)));
    CHECK((ba + bb).to_string() ==
          int128_to_string(static_cast<__int128>(a) + static_cast<__int128>(b)));
    CHECK((ba - bb).to_string() ==
          int128_to_string(static_cast<__int128>(a) - static_cast<__int128>(b)));
    BigInt q, r;
    BigInt::divmod(ba, bb, &q, &r);
    CHECK(q == BigInt(a / b));
    CHECK(r == BigInt(a % b));
  }
}

TEST_CASE("BigInt multi-limb division") {
  BigInt a = BigInt::from_string("123456789012345678901234567890123456789");
  BigInt b = BigInt::from_string("987654321987654321");
  BigInt q, r;
  BigInt::divmod(a, b, &q, &r);
  CHECK(q * b + r == a);
  CHECK(r >= BigInt(0));
  CHECK(r < b);
  CHECK(BigInt::gcd(BigInt::from_string("12345678901234567890"), BigInt(0)) ==
        BigInt::from_string("12345678901234567890"));
}

TEST_CASE("Rational is always in lowest terms with positive denominator") {
  Rational r(BigInt(6), BigInt(-8));
  CHECK(r.num() == BigInt(-3));
  CHECK(r.den() == BigInt(4));
  CHECK(r.to_string() == "-3/4");
  CHECK(Rational::from_string("18/37").to_double() == doctest::Approx(18.0 / 37.0));
  CHECK(Rational::from_string("-0.25") == Rational(-1, 4));
  CHECK(Rational::from_string("7") == Rational(7));
}

TEST_CASE("Rational field laws on random values") {
  ludus::Rng rng(5);
  for (int it = 0; it < 200; ++it) {
    Rational a(rng.next_int(-40, 40), rng.next_int(1, 23));
    Rational b(rng.next_int(-40, 40), rng.next_int(1, 23));
    Rational c(rng.next_int(-40, 40), rng.next_int(1, 23));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK((a - a).is_zero());
  }
}
