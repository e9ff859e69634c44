#pragma once
// Dense univariate polynomials over an exact field, just enough for minimal
// polynomials and their coprime splittings in the decomposition engine.
#include <vector>

#include "bqa/matrix.hpp"

namespace bqa {

template <class F>
struct Poly {
  using K = typename F::Elem;
  F field;
  std::vector<K> c;  // coefficients, ascending degree; empty means zero

  explicit Poly(F f) : field(f) {}
  Poly(F f, std::vector<K> coeffs) : field(f), c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && field.is_zero(c.back())) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  static Poly x_minus(F f, const K& lambda) {
    return Poly(f, {f.neg(lambda), f.one()});
  }
  static Poly one(F f) { return Poly(f, {f.one()}); }

  Poly monic() const {
    check(!is_zero(), "monic of zero polynomial");
    Poly r = *this;
    K inv = field.inv(c.back());
    for (K& x : r.c) x = field.mul(x, inv);
    return r;
  }

  K eval(const K& t) const {
    K acc = field.zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = field.add(field.mul(acc, t), c[i]);
    return acc;
  }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field);
    Poly r(field);
    r.c.assign(c.size() + o.c.size() - 1, field.zero());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j)
        r.c[i + j] = field.add(r.c[i + j], field.mul(c[i], o.c[j]));
    r.trim();
    return r;
  }
  Poly operator+(const Poly& o) const {
    Poly r(field);
    r.c.assign(std::max(c.size(), o.c.size()), field.zero());
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] = field.add(r.c[i], o.c[i]);
    r.trim();
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r(field);
    r.c.assign(std::max(c.size(), o.c.size()), field.zero());
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] = field.sub(r.c[i], o.c[i]);
    r.trim();
    return r;
  }
};

// Remainder and quotient of a by b (b nonzero).
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& a, const Poly<F>& b) {
  const F& f = a.field;
  check(!b.is_zero(), "polynomial division by zero");
  Poly<F> r = a, q(f);
  if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, f.zero());
  typename F::Elem lead_inv = f.inv(b.c.back());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    typename F::Elem coef = f.mul(r.c.back(), lead_inv);
    q.c[shift] = f.add(q.c[shift], coef);
    for (int i = 0; i <= b.degree(); ++i)
      r.c[i + shift] = f.sub(r.c[i + shift], f.mul(coef, b.c[i]));
    r.trim();
  }
  q.trim();
  return {q, r};
}

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = poly_divmod(a, b).second;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.monic();
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_xgcd(const Poly<F>& a, const Poly<F>& b) {
  const F& f = a.field;
  Poly<F> r0 = a, r1 = b;
  Poly<F> u0 = Poly<F>::one(f), u1 = Poly<F>(f);
  Poly<F> v0 = Poly<F>(f), v1 = Poly<F>::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly<F> u = u0 - q * u1, v = v0 - q * v1;
    r0 = r1; r1 = r;
    u0 = u1; u1 = u;
    v0 = v1; v1 = v;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  typename F::Elem s = f.inv(r0.c.back());
  Poly<F> sp(f, {s});
  return {r0.monic(), u0 * sp, v0 * sp};
}

// base^e mod m, by square and multiply.
template <class F>
Poly<F> poly_powmod(Poly<F> base, std::int64_t e, const Poly<F>& m) {
  const F& f = base.field;
  Poly<F> acc = Poly<F>::one(f);
  base = poly_divmod(base, m).second;
  while (e > 0) {
    if (e & 1) acc = poly_divmod(acc * base, m).second;
    base = poly_divmod(base * base, m).second;
    e >>= 1;
  }
  return acc;
}

// t^e mod m.
template <class F>
Poly<F> poly_powmod_x(const F& f, std::int64_t e, const Poly<F>& m) {
  return poly_powmod(Poly<F>(f, {f.zero(), f.one()}), e, m);
}

template <class F>
Poly<F> poly_derivative(const Poly<F>& p) {
  const F& f = p.field;
  std::vector<typename F::Elem> d;
  for (std::size_t i = 1; i < p.c.size(); ++i)
    d.push_back(f.mul(p.c[i], f.from_long(static_cast<std::int64_t>(i))));
  return Poly<F>(f, d);
}

// Minimal polynomial of a square matrix: first linear dependence among
// flattened Krylov powers I, M, M^2, ...
template <class F>
Poly<F> min_poly(const Mat<F>& m) {
  const F& f = m.field();
  check(m.rows() == m.cols(), "min_poly of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Poly<F>::one(f);
  std::vector<Mat<F>> powers;
  powers.push_back(Mat<F>::identity(f, n));
  Mat<F> flat(f, 0, n * n);
  for (std::size_t d = 1;; ++d) {
    Mat<F> stack(f, d, n * n);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) stack.at(k, i * n + j) = powers[k].at(i, j);
    Mat<F> next = powers.back() * m;
    std::vector<typename F::Elem> target(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) target[i * n + j] = next.at(i, j);
    // does M^d lie in the span of lower powers?
    auto coeffs = solve(stack.transposed(), target);
    if (coeffs) {
      std::vector<typename F::Elem> pc(d + 1, f.zero());
      for (std::size_t k = 0; k < d; ++k) pc[k] = f.neg((*coeffs)[k]);
      pc[d] = f.one();
      return Poly<F>(f, pc);
    }
    powers.push_back(next);
    check(d <= n, "min_poly did not terminate");
  }
}

// Distinct roots of m lying in the field.  For F_p the linear-factor part is
// extracted with gcd(m, t^p - t) first, then its roots are found by scan with
// early exit; for Q the rational root test on a cleared-denominator form.
inline std::vector<FpElem> poly_roots(const FpField& f, const Poly<FpField>& m) {
  std::vector<FpElem> roots;
  if (m.degree() <= 0) return roots;
  Poly<FpField> tp = poly_powmod_x(f, f.characteristic(), m);  // t^p mod m
  Poly<FpField> t(f, {f.zero(), f.one()});
  Poly<FpField> lin = poly_gcd(m, tp - t);
  std::size_t want = lin.is_zero() ? 0 : static_cast<std::size_t>(lin.degree());
  if (want == 0) return roots;
  for (std::int64_t v = 0; v < f.characteristic() && roots.size() < want; ++v)
    if (f.is_zero(lin.eval(FpElem{v}))) roots.push_back(FpElem{v});
  return roots;
}

inline std::vector<mpq_class> poly_roots(const RatField& f, const Poly<RatField>& m) {
  std::vector<mpq_class> roots;
  if (m.degree() <= 0) return roots;
  // clear denominators
  mpz_class lcm = 1;
  for (const mpq_class& q : m.c) lcm = lcm * q.get_den() / gcd(lcm, q.get_den());
  std::vector<mpz_class> zc;
  for (const mpq_class& q : m.c) {
    mpq_class s = q * lcm;
    zc.push_back(s.get_num());
  }
  while (!zc.empty() && zc.front() == 0) {
    if (roots.empty()) roots.push_back(mpq_class(0));
    zc.erase(zc.begin());
  }
  if (zc.empty()) return roots;
  mpz_class a0 = abs(zc.front()), an = abs(zc.back());
  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> ds;
    for (mpz_class d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        if (d * d != n) ds.push_back(n / d);
      }
    return ds;
  };
  for (const mpz_class& p : divisors(a0))
    for (const mpz_class& q : divisors(an))
      for (int sign : {1, -1}) {
        mpq_class cand(sign * p, q);
        cand.canonicalize();
        if (f.is_zero(m.eval(cand))) {
          bool seen = false;
          for (const mpq_class& r : roots) seen = seen || r == cand;
          if (!seen) roots.push_back(cand);
        }
      }
  return roots;
}

}  // namespace bqa
