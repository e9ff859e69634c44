#pragma once
// Exact coefficient fields: F_p with machine integers, and arbitrary-precision
// rationals via GMP.  Every arithmetic routine in the library is parameterized
// over a field descriptor so the same code runs modularly or exactly over Q.
#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace bqa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input (CLI exit code 1).  Everything else is an internal failure.
struct InputError : Error {
  using Error::Error;
};

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

// Element of F_p; the modulus is carried by the FpField descriptor.
struct FpElem {
  std::int64_t v = 0;
  auto operator<=>(const FpElem&) const = default;
};

class FpField {
 public:
  using Elem = FpElem;

  explicit FpField(std::int64_t p) : p_(p) {
    if (p < 2 || !is_prime(p)) throw InputError("field modulus must be prime, got " + std::to_string(p));
    if (p >= (std::int64_t(1) << 31)) throw InputError("field modulus too large");
  }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem from_long(std::int64_t n) const {
    std::int64_t r = n % p_;
    if (r < 0) r += p_;
    return {r};
  }
  Elem add(Elem a, Elem b) const { std::int64_t s = a.v + b.v; return {s >= p_ ? s - p_ : s}; }
  Elem sub(Elem a, Elem b) const { std::int64_t s = a.v - b.v; return {s < 0 ? s + p_ : s}; }
  Elem neg(Elem a) const { return {a.v == 0 ? 0 : p_ - a.v}; }
  Elem mul(Elem a, Elem b) const { return {(a.v * b.v) % p_}; }
  Elem inv(Elem a) const {
    if (a.v == 0) throw Error("division by zero in F_p");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a.v;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p_;
    return {t};
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a.v == 0; }
  bool eq(Elem a, Elem b) const { return a.v == b.v; }
  std::string str(Elem a) const { return std::to_string(a.v); }
  std::int64_t characteristic() const { return p_; }
  std::string name() const { return "F" + std::to_string(p_); }
  bool operator==(const FpField& o) const { return p_ == o.p_; }

  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::int64_t p_;
};

class RatField {
 public:
  using Elem = mpq_class;

  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }
  Elem from_long(std::int64_t n) const { return mpq_class(static_cast<long>(n)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error("division by zero in Q");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return a.get_str(); }
  std::int64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  bool operator==(const RatField&) const { return true; }
};

}  // namespace bqa
