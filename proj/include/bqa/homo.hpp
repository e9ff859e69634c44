#pragma once
// Minimal projective resolutions, minimal injective coresolutions, Ext.
// Lengths are reported as an Extent: a number, "> bound", or (where a
// finite certificate exists for the complement) infinity.

#include <string>
#include <vector>

#include "bqa/rep.hpp"

namespace bqa {

struct Extent {
  enum class Kind { finite, above_bound, infinite };
  Kind kind = Kind::finite;
  int value = 0;  // the length if finite, the bound if exceeded

  static Extent finite(int v) { return {Kind::finite, v}; }
  static Extent above(int b) { return {Kind::above_bound, b}; }
  static Extent inf() { return {Kind::infinite, 0}; }
  bool is_finite() const { return kind == Kind::finite; }
  bool operator==(const Extent&) const = default;

  std::string str() const {
    switch (kind) {
      case Kind::finite: return std::to_string(value);
      case Kind::above_bound: return "> " + std::to_string(value);
      default: return "infinite";
    }
  }
};

inline Extent extent_max(const Extent& a, const Extent& b) {
  if (a.kind == Extent::Kind::infinite || b.kind == Extent::Kind::infinite) return Extent::inf();
  if (a.kind == Extent::Kind::above_bound || b.kind == Extent::Kind::above_bound) {
    int bound = 0;
    if (a.kind == Extent::Kind::above_bound) bound = std::max(bound, a.value);
    if (b.kind == Extent::Kind::above_bound) bound = std::max(bound, b.value);
    return Extent::above(bound);
  }
  return Extent::finite(std::max(a.value, b.value));
}

// True when the extent is known to be <= n.
inline bool extent_at_most(const Extent& e, int n) {
  return e.is_finite() && e.value <= n;
}

// True when the extent is known to be >= n.  "above b" certifies >= b+1.
inline bool extent_at_least(const Extent& e, int n) {
  switch (e.kind) {
    case Extent::Kind::finite: return e.value >= n;
    case Extent::Kind::above_bound: return e.value + 1 >= n;
    default: return true;
  }
}

template <class F>
struct Resolution {
  Rep<F> target;                        // M
  std::vector<Morphism<F>> diffs;       // d0: P0 -> M, dk: Pk -> P(k-1)
  std::vector<std::vector<int>> labels; // vertex labels of the summands of each Pk
  bool minimal = true;
  bool complete = false;  // the last kernel vanished within the bound

  const Rep<F>& term(std::size_t k) const { return diffs[k].src; }
  int length() const { return static_cast<int>(diffs.size()) - 1; }
};

template <class F>
struct Coresolution {
  Rep<F> source;                        // M
  std::vector<Morphism<F>> diffs;       // d0: M -> I0, dk: I(k-1) -> Ik
  std::vector<std::vector<int>> labels;
  bool minimal = true;
  bool complete = false;

  const Rep<F>& term(std::size_t k) const { return diffs[k].tgt; }
  int length() const { return static_cast<int>(diffs.size()) - 1; }
};

template <class F>
Resolution<F> min_proj_resolution(const Rep<F>& m, int bound) {
  check(bound >= 0, "resolution bound must be nonnegative");
  Resolution<F> res;
  res.target = m;
  Rep<F> cur = m;            // next module to cover
  Morphism<F> into = identity_morphism(m);  // inclusion of cur into previous term
  for (int k = 0; ; ++k) {
    CoverData<F> c = projective_cover(cur);
    res.labels.push_back(c.vertex_labels);
    res.diffs.push_back(k == 0 ? c.map : compose(c.map, into));
    RepWithMap<F> ker = kernel(c.map);
    if (ker.rep.is_zero()) {
      res.complete = true;
      break;
    }
    if (k == bound) break;
    cur = ker.rep;
    into = ker.map;
  }
  // minimality: each cover kernel lies in the radical of its source
  for (std::size_t k = 0; k < res.diffs.size() && res.minimal; ++k) {
    RepWithMap<F> ker = kernel(res.diffs[k]);
    std::vector<Mat<F>> rad = radical_rows(res.diffs[k].src);
    for (int v = 0; v < m.num_vertices(); ++v)
      if (!rows_contained(ker.map.mats[v], rad[v])) res.minimal = false;
  }
  return res;
}

template <class F>
Coresolution<F> min_inj_coresolution(const Rep<F>& m, int bound) {
  check(bound >= 0, "coresolution bound must be nonnegative");
  Coresolution<F> res;
  res.source = m;
  Rep<F> cur = m;
  Morphism<F> onto = identity_morphism(m);  // projection of previous term onto cur
  for (int k = 0; ; ++k) {
    CoverData<F> h = injective_hull(cur);
    res.labels.push_back(h.vertex_labels);
    res.diffs.push_back(k == 0 ? h.map : compose(onto, h.map));
    RepWithMap<F> cok = cokernel(h.map);
    if (cok.rep.is_zero()) {
      res.complete = true;
      break;
    }
    if (k == bound) break;
    cur = cok.rep;
    onto = cok.map;
  }
  // minimality: socles of consecutive cosyzygy embeddings match the hulls
  for (std::size_t k = 0; k < res.diffs.size() && res.minimal; ++k) {
    RepWithMap<F> im = image(res.diffs[k]);
    if (socle(im.rep).rep.dims != socle(res.diffs[k].tgt).rep.dims) res.minimal = false;
  }
  return res;
}

template <class F>
Extent pd(const Rep<F>& m, int bound) {
  Resolution<F> r = min_proj_resolution(m, bound);
  if (r.complete) return Extent::finite(r.length());
  return Extent::above(bound);
}

template <class F>
Extent inj_dim(const Rep<F>& m, int bound) {
  Coresolution<F> r = min_inj_coresolution(m, bound);
  if (r.complete) return Extent::finite(r.length());
  return Extent::above(bound);
}

template <class F>
Extent gldim(AlgebraPtr<F> alg, int bound) {
  Extent g = Extent::finite(0);
  for (int i = 0; i < alg->num_vertices(); ++i)
    g = extent_max(g, pd(simple_rep(alg, i), bound));
  return g;
}

// ---------------------------------------------------------------------------
// Ext groups.

template <class F>
struct ExtGroup {
  int dim = 0;
  std::vector<Morphism<F>> cocycles;  // basis of the cocycle space at stage i
};

namespace detail {

// Matrix of "apply delta then express in the canonical Hom basis".
template <class F>
Mat<F> hom_induced_matrix(const F& f, const std::vector<Morphism<F>>& from,
                          const std::vector<Morphism<F>>& to,
                          const std::vector<Morphism<F>>& images) {
  if (to.empty()) return Mat<F>(f, from.size(), 0);  // the Hom space is zero
  std::size_t w = flatten_morphism(to.front()).size();
  Mat<F> basis(f, to.size(), w);
  for (std::size_t i = 0; i < to.size(); ++i) basis.set_row(i, flatten_morphism(to[i]));
  Mat<F> img(f, images.size(), w);
  for (std::size_t i = 0; i < images.size(); ++i) img.set_row(i, flatten_morphism(images[i]));
  auto coords = solve_left(basis, img);
  check(coords.has_value(), "induced image leaves the Hom space");
  return *coords;
}

}  // namespace detail

// Ext^i(M,N) from a minimal projective resolution of M.
template <class F>
ExtGroup<F> ext_group(const Rep<F>& m, const Rep<F>& n, int i) {
  check(i >= 0, "negative Ext degree");
  Resolution<F> res = min_proj_resolution(m, i + 1);
  auto term = [&](int k) -> Rep<F> {
    if (k < static_cast<int>(res.diffs.size())) return res.diffs[k].src;
    return zero_rep(m.alg);
  };
  std::vector<Morphism<F>> bi = hom_space(term(i), n);
  std::vector<Morphism<F>> bnext = hom_space(term(i + 1), n);
  // delta_i: Hom(P_i, N) -> Hom(P_{i+1}, N), h |-> d_{i+1} then h
  std::vector<Morphism<F>> di_img;
  if (i + 1 < static_cast<int>(res.diffs.size()))
    for (const auto& h : bi) di_img.push_back(compose(res.diffs[i + 1], h));
  else
    for (std::size_t k = 0; k < bi.size(); ++k) di_img.push_back(zero_morphism(term(i + 1), n));
  Mat<F> di = detail::hom_induced_matrix(m.field(), bi, bnext, di_img);
  Mat<F> ker = row_kernel(di);

  std::size_t im_rank = 0;
  if (i > 0) {
    std::vector<Morphism<F>> bprev = hom_space(term(i - 1), n);
    std::vector<Morphism<F>> dp_img;
    for (const auto& h : bprev)
      dp_img.push_back(i < static_cast<int>(res.diffs.size()) ? compose(res.diffs[i], h)
                                                              : zero_morphism(term(i), n));
    Mat<F> dp = detail::hom_induced_matrix(m.field(), bprev, bi, dp_img);
    im_rank = rank(dp);
  }
  ExtGroup<F> out;
  out.dim = static_cast<int>(ker.rows() - im_rank);
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Morphism<F> c = zero_morphism(term(i), n);
    for (std::size_t j = 0; j < bi.size(); ++j)
      c = morphism_add(c, morphism_scaled(bi[j], ker.at(r, j)));
    out.cocycles.push_back(c);
  }
  return out;
}

template <class F>
int ext_dim(const Rep<F>& m, const Rep<F>& n, int i) {
  return ext_group(m, n, i).dim;
}

// The same dimension from the injective side: H^i of Hom(M, I^*(N)).
template <class F>
int ext_dim_via_injectives(const Rep<F>& m, const Rep<F>& n, int i) {
  check(i >= 0, "negative Ext degree");
  Coresolution<F> res = min_inj_coresolution(n, i + 1);
  auto term = [&](int k) -> Rep<F> {
    if (k < static_cast<int>(res.diffs.size())) return res.diffs[k].tgt;
    return zero_rep(n.alg);
  };
  std::vector<Morphism<F>> bi = hom_space(m, term(i));
  std::vector<Morphism<F>> bnext = hom_space(m, term(i + 1));
  std::vector<Morphism<F>> di_img;
  if (i + 1 < static_cast<int>(res.diffs.size()))
    for (const auto& h : bi) di_img.push_back(compose(h, res.diffs[i + 1]));
  else
    for (const auto& h : bi) di_img.push_back(zero_morphism(m, term(i + 1)));
  Mat<F> di = detail::hom_induced_matrix(m.field(), bi, bnext, di_img);
  std::size_t ker_dim = bi.size() - rank(di);

  std::size_t im_rank = 0;
  if (i > 0) {
    std::vector<Morphism<F>> bprev = hom_space(m, term(i - 1));
    std::vector<Morphism<F>> dp_img;
    for (const auto& h : bprev)
      dp_img.push_back(i < static_cast<int>(res.diffs.size()) ? compose(h, res.diffs[i])
                                                              : zero_morphism(m, term(i)));
    Mat<F> dp = detail::hom_induced_matrix(m.field(), bprev, bi, dp_img);
    im_rank = rank(dp);
  }
  return static_cast<int>(ker_dim - im_rank);
}

// Ext^i(M, N) = 0 for 1 <= i <= hi.
template <class F>
bool ext_vanishes(const Rep<F>& m, const Rep<F>& n, int hi) {
  for (int i = 1; i <= hi; ++i)
    if (ext_dim(m, n, i) != 0) return false;
  return true;
}

}  // namespace bqa
