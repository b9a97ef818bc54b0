#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace toss {

// Exact rational arithmetic on 64-bit words. Intermediates run through
// __int128 and anything that does not fit back into 64 bits after gcd
// reduction throws. Decision paths never touch floating point.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) { *this = make(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  static Rat make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                (__int128)a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                (__int128)a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // largest integer <= *this
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // parses "n" or "n/d" with optional sign
  static Rat parse(const std::string& s);

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static long long narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("rational arithmetic exceeded 64-bit range");
    return (long long)v;
  }

  long long num_;
  long long den_;  // > 0, gcd(num_, den_) = 1
};

inline Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  size_t slash = s.find('/');
  auto to_ll = [](const std::string& t) {
    if (t.empty() || (t.size() == 1 && (t[0] == '+' || t[0] == '-')))
      throw std::invalid_argument("bad rational literal");
    size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad rational literal: '" + t + "'");
    return v;
  };
  if (slash == std::string::npos) return Rat(to_ll(s));
  return Rat(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
}

}  // namespace toss
