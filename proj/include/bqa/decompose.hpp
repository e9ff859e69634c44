#pragma once
// Krull-Schmidt decomposition.  Splitting idempotents are produced from
// coprime factor pairs of minimal polynomials of endomorphisms: if
// m = f*g with (f,g)=1 and uf+vg = 1, then (uf)(phi) is exactly idempotent.

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "bqa/poly.hpp"
#include "bqa/rep.hpp"

namespace bqa {

template <class F>
struct Decomposition {
  std::vector<std::pair<Rep<F>, int>> summands;  // class representative + multiplicity
  std::vector<Morphism<F>> idempotents;          // one per indecomposable copy
  std::vector<int> copy_class;                   // idempotent index -> summand index
};

template <class F>
Mat<F> morphism_block_matrix(const Morphism<F>& f) {
  int n = f.src.total_dim();
  Mat<F> m(f.field(), n, n);
  int off = 0;
  for (const auto& comp : f.mats) {
    for (std::size_t r = 0; r < comp.rows(); ++r)
      for (std::size_t c = 0; c < comp.cols(); ++c) m.at(off + r, off + c) = comp.at(r, c);
    off += static_cast<int>(comp.rows());
  }
  return m;
}

// dim rad End(M) via the trace form tr(xy) on the natural action; valid
// because the characteristic exceeds the module dimension.
template <class F>
int end_radical_dim(const Rep<F>& m, const std::vector<Morphism<F>>& homs) {
  const F& f = m.field();
  if (f.characteristic() != 0 && f.characteristic() <= m.total_dim())
    throw FieldTooSmallError(m.total_dim(), "field characteristic too small for radical work");
  std::size_t e = homs.size();
  Mat<F> gram(f, e, e);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = i; j < e; ++j) {
      typename F::Elem t = f.zero();
      for (std::size_t v = 0; v < homs[i].mats.size(); ++v) {
        const Mat<F>& a = homs[i].mats[v];
        const Mat<F>& b = homs[j].mats[v];
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t k = 0; k < a.cols(); ++k)
            t = f.add(t, f.mul(a.at(r, k), b.at(k, r)));
      }
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  return static_cast<int>(e - rank(gram));
}

namespace detail {

// Largest divisor of m supported on the irreducible factors of d, with full
// multiplicity: gcd(m, d^(deg m)).  Coprime to the cofactor by construction.
template <class F>
Poly<F> saturate_divisor(const Poly<F>& m, const Poly<F>& d) {
  return poly_gcd(m, poly_powmod(d, static_cast<std::int64_t>(m.degree()), m));
}

// Nontrivial proper divisors of the minimal polynomial, to be saturated.
template <class F>
std::vector<Poly<F>> divisor_candidates(const F& f, const Poly<F>& m) {
  std::vector<Poly<F>> out;
  for (const auto& r : poly_roots(f, m))
    out.push_back(Poly<F>::x_minus(f, r));
  Poly<F> d = poly_gcd(m, poly_derivative(m));
  if (d.degree() > 0 && d.degree() < m.degree()) out.push_back(d);
  if (f.characteristic() > 0) {
    // gcd with t^(p^k) - t collects the factors of degree dividing k
    Poly<F> frob(f, {f.zero(), f.one()});
    std::size_t dmax = std::min<std::size_t>(m.degree(), 8);
    for (std::size_t k = 1; k <= dmax; ++k) {
      frob = poly_powmod(frob, f.characteristic(), m);
      Poly<F> diff = frob - Poly<F>(f, {f.zero(), f.one()});
      Poly<F> g = poly_gcd(m, diff);
      if (g.degree() > 0 && g.degree() < m.degree()) out.push_back(g);
    }
  }
  return out;
}

// Evaluate a polynomial at an endomorphism (Horner in End(M)).
template <class F>
Morphism<F> eval_at(const Poly<F>& p, const Morphism<F>& phi) {
  Morphism<F> acc = zero_morphism(phi.src, phi.tgt);
  for (std::size_t i = p.c.size(); i-- > 0;) {
    acc = compose(acc, phi);
    Morphism<F> c = morphism_scaled(identity_morphism(phi.src), p.c[i]);
    acc = morphism_add(acc, c);
  }
  return acc;
}

// A nontrivial idempotent in the commutative subalgebra generated by phi,
// if its minimal polynomial admits a coprime splitting.
template <class F>
std::optional<Morphism<F>> idempotent_from(const Morphism<F>& phi) {
  const F& f = phi.field();
  Poly<F> m = min_poly(morphism_block_matrix(phi)).monic();
  if (m.degree() <= 1) return std::nullopt;
  for (const Poly<F>& d : divisor_candidates(f, m)) {
    Poly<F> fpart = saturate_divisor(m, d).monic();
    if (fpart.degree() == 0 || fpart.degree() == m.degree()) continue;
    Poly<F> gpart = poly_divmod(m, fpart).first;
    auto [g, u, v] = poly_xgcd(fpart, gpart);
    check(g.degree() == 0, "saturated divisor not coprime to cofactor");
    (void)v;
    Poly<F> ep = poly_divmod(u * fpart, m).second;
    Morphism<F> e = eval_at(ep, phi);
    Morphism<F> e2 = compose(e, e);
    bool idem = true;
    for (std::size_t i = 0; i < e.mats.size(); ++i)
      if (!(e2.mats[i] == e.mats[i])) idem = false;
    check(idem, "constructed element is not idempotent");
    if (is_zero_morphism(e)) continue;
    bool is_id = true;
    for (std::size_t i = 0; i < e.mats.size(); ++i)
      if (!(e.mats[i] == Mat<F>::identity(f, e.mats[i].rows()))) is_id = false;
    if (is_id) continue;
    return e;
  }
  return std::nullopt;
}

// Search for a splitting idempotent: basis elements, then pairwise sums,
// then seeded random combinations.  Deterministic for a fixed build.
template <class F>
std::optional<Morphism<F>> find_idempotent(const Rep<F>& m,
                                           const std::vector<Morphism<F>>& homs) {
  const F& f = m.field();
  for (const auto& h : homs)
    if (auto e = idempotent_from(h)) return e;
  for (std::size_t i = 0; i < homs.size(); ++i)
    for (std::size_t j = i + 1; j < homs.size(); ++j)
      if (auto e = idempotent_from(morphism_add(homs[i], homs[j]))) return e;
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 400; ++trial) {
    Morphism<F> phi = zero_morphism(m, m);
    for (const auto& h : homs) {
      std::int64_t c = static_cast<std::int64_t>(rng() % 1000003);
      phi = morphism_add(phi, morphism_scaled(h, f.from_long(c)));
    }
    if (auto e = idempotent_from(phi)) return e;
  }
  return std::nullopt;
}

// Split M = im(e) + ker(e) and return both halves with the section/retraction
// pairs needed to transport idempotents back into End(M).
template <class F>
struct SplitHalf {
  Rep<F> rep;
  Morphism<F> incl;  // half -> M
  Morphism<F> retr;  // M -> half, with incl then retr = id
};

template <class F>
SplitHalf<F> carve(const Rep<F>& m, const Morphism<F>& e) {
  RepWithMap<F> im = image(e);
  Morphism<F> retr{m, im.rep, {}};
  for (std::size_t v = 0; v < e.mats.size(); ++v) {
    auto p = solve_left(im.map.mats[v], e.mats[v]);
    check(p.has_value(), "image rows do not span the idempotent image");
    retr.mats.push_back(*p);
  }
  for (std::size_t v = 0; v < e.mats.size(); ++v)
    check(im.map.mats[v] * retr.mats[v] == Mat<F>::identity(m.field(), im.rep.dims[v]),
          "retraction is not a left inverse");
  return {im.rep, im.map, retr};
}

template <class F>
void split_rec(const Rep<F>& m, std::vector<std::pair<Rep<F>, Morphism<F>>>& out) {
  if (m.is_zero()) return;
  std::vector<Morphism<F>> homs = hom_space(m, m);
  if (homs.size() == 1) {
    out.emplace_back(m, identity_morphism(m));
    return;
  }
  auto e = find_idempotent(m, homs);
  if (!e) {
    int rad = end_radical_dim(m, homs);
    int top = static_cast<int>(homs.size()) - rad;
    check(top == 1,
          "endomorphism ring is not split local (semisimple quotient of dimension " +
              std::to_string(top) + ")");
    out.emplace_back(m, identity_morphism(m));
    return;
  }
  Morphism<F> ec = morphism_add(identity_morphism(m), morphism_scaled(*e, m.field().neg(m.field().one())));
  for (const Morphism<F>& idem : {*e, ec}) {
    SplitHalf<F> half = carve(m, idem);
    std::vector<std::pair<Rep<F>, Morphism<F>>> sub;
    split_rec(half.rep, sub);
    for (auto& [rep, inner] : sub)
      out.emplace_back(rep, compose(compose(half.retr, inner), half.incl));
  }
}

}  // namespace detail

// Indecomposables X, Y are isomorphic iff some Hom basis element is
// invertible: the non-isomorphisms form a proper subspace whenever an
// isomorphism exists.
template <class F>
bool indec_isomorphic(const Rep<F>& x, const Rep<F>& y) {
  if (x.dims != y.dims) return false;
  if (x.is_zero()) return true;
  for (const Morphism<F>& h : hom_space(x, y))
    if (is_iso(h)) return true;
  return false;
}

template <class F>
Decomposition<F> decompose(const Rep<F>& m) {
  std::vector<std::pair<Rep<F>, Morphism<F>>> pieces;
  detail::split_rec(m, pieces);
  Decomposition<F> dec;
  for (auto& [rep, idem] : pieces) {
    int cls = -1;
    for (std::size_t k = 0; k < dec.summands.size(); ++k)
      if (indec_isomorphic(dec.summands[k].first, rep)) {
        cls = static_cast<int>(k);
        break;
      }
    if (cls < 0) {
      cls = static_cast<int>(dec.summands.size());
      dec.summands.emplace_back(rep, 0);
    }
    dec.summands[cls].second += 1;
    dec.idempotents.push_back(idem);
    dec.copy_class.push_back(cls);
  }
  return dec;
}

template <class F>
void validate_decomposition(const Rep<F>& m, const Decomposition<F>& dec) {
  const F& f = m.field();
  // idempotent, orthogonal, complete
  Morphism<F> sum = zero_morphism(m, m);
  for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
    const Morphism<F>& e = dec.idempotents[i];
    check(is_natural(e), "idempotent not a morphism");
    Morphism<F> e2 = compose(e, e);
    for (std::size_t v = 0; v < e.mats.size(); ++v)
      check(e2.mats[v] == e.mats[v], "not idempotent");
    for (std::size_t j = 0; j < i; ++j) {
      Morphism<F> p = compose(dec.idempotents[j], e);
      Morphism<F> q = compose(e, dec.idempotents[j]);
      check(is_zero_morphism(p) && is_zero_morphism(q), "idempotents not orthogonal");
    }
    sum = morphism_add(sum, e);
  }
  for (std::size_t v = 0; v < sum.mats.size(); ++v)
    check(sum.mats[v] == Mat<F>::identity(f, m.dims[v]), "idempotents do not sum to identity");
  // multiplicities consistent, classes distinct, summands indecomposable
  int total = 0;
  for (const auto& [rep, mult] : dec.summands) total += mult * rep.total_dim();
  check(total == m.total_dim(), "dimension mismatch");
  for (std::size_t a = 0; a < dec.summands.size(); ++a) {
    std::vector<Morphism<F>> ends = hom_space(dec.summands[a].first, dec.summands[a].first);
    check(static_cast<int>(ends.size()) - end_radical_dim(dec.summands[a].first, ends) == 1,
          "summand endomorphism ring not split local");
    for (std::size_t b = a + 1; b < dec.summands.size(); ++b)
      check(!indec_isomorphic(dec.summands[a].first, dec.summands[b].first),
            "duplicate isomorphism class");
  }
  for (std::size_t i = 0; i < dec.idempotents.size(); ++i)
    check(image(dec.idempotents[i]).rep.dims == dec.summands[dec.copy_class[i]].first.dims,
          "idempotent image does not match its class");
}

// Number of pairwise non-isomorphic indecomposable summands.
template <class F>
int num_indec_classes(const Rep<F>& m) {
  return static_cast<int>(decompose(m).summands.size());
}

template <class F>
bool are_isomorphic(const Rep<F>& m, const Rep<F>& n) {
  if (m.dims != n.dims) return false;
  Decomposition<F> dm = decompose(m), dn = decompose(n);
  if (dm.summands.size() != dn.summands.size()) return false;
  std::vector<bool> used(dn.summands.size(), false);
  for (const auto& [rep, mult] : dm.summands) {
    bool found = false;
    for (std::size_t j = 0; j < dn.summands.size(); ++j) {
      if (used[j] || dn.summands[j].second != mult) continue;
      if (indec_isomorphic(rep, dn.summands[j].first)) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// X in add(M): every indecomposable summand class of X occurs in M.
template <class F>
bool add_contains(const Rep<F>& m, const Rep<F>& x) {
  Decomposition<F> dm = decompose(m), dx = decompose(x);
  for (const auto& [rep, mult] : dx.summands) {
    (void)mult;
    bool found = false;
    for (const auto& [mrep, mmult] : dm.summands) {
      (void)mmult;
      if (indec_isomorphic(rep, mrep)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// One representative per isomorphism class, ordered by dimension vector then
// first appearance; the direct sum is the basic version of M.
template <class F>
std::vector<Rep<F>> basic_summands(const Rep<F>& m) {
  Decomposition<F> d = decompose(m);
  std::vector<std::size_t> order(d.summands.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.summands[a].first.dims < d.summands[b].first.dims;
  });
  std::vector<Rep<F>> out;
  for (std::size_t i : order) out.push_back(d.summands[i].first);
  return out;
}

template <class F>
Rep<F> basic_rep(const Rep<F>& m) {
  if (m.is_zero()) return m;
  return direct_sum(basic_summands(m));
}

}  // namespace bqa
