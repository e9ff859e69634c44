#pragma once
// Right modules over a bound quiver algebra, given as one space per vertex
// plus one matrix per arrow.  All maps act on row vectors, so a path a1*a2
// acts by the product M_{a1} * M_{a2} in word order.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bqa/matrix.hpp"
#include "bqa/quiver.hpp"

namespace bqa {

template <class F>
struct Rep {
  AlgebraPtr<F> alg;
  std::vector<int> dims;           // per vertex
  std::vector<Mat<F>> arrow_maps;  // per arrow a:i->j, a dims[i] x dims[j] matrix

  const F& field() const { return alg->field(); }
  int num_vertices() const { return alg->num_vertices(); }
  int total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
  bool is_zero() const { return total_dim() == 0; }

  bool operator==(const Rep& o) const { return dims == o.dims && arrow_maps == o.arrow_maps; }
};

template <class F>
Mat<F> path_action(const Rep<F>& m, const Path& p) {
  const Quiver& q = m.alg->quiver();
  Mat<F> r = Mat<F>::identity(m.field(), m.dims[p.source]);
  for (int a : p.arrows) {
    (void)q;
    r = r * m.arrow_maps[a];
  }
  return r;
}

template <class F>
Mat<F> combo_action(const Rep<F>& m, const PathCombo<F>& c) {
  check(!c.empty(), "combo_action on zero combination");
  int s = c.front().path.source;
  int t = path_target(m.alg->quiver(), c.front().path);
  Mat<F> r(m.field(), m.dims[s], m.dims[t]);
  for (const PathTerm<F>& term : c) r = r + path_action(m, term.path).scaled(term.coeff);
  return r;
}

template <class F>
void validate_rep(const Rep<F>& m) {
  const Quiver& q = m.alg->quiver();
  check(static_cast<int>(m.dims.size()) == q.num_vertices(), "dimension vector length");
  check(static_cast<int>(m.arrow_maps.size()) == q.num_arrows(), "arrow map count");
  for (int a = 0; a < q.num_arrows(); ++a) {
    check(m.arrow_maps[a].rows() == static_cast<std::size_t>(m.dims[q.arrows[a].source]) &&
              m.arrow_maps[a].cols() == static_cast<std::size_t>(m.dims[q.arrows[a].target]),
          "arrow map shape for " + q.arrows[a].name);
  }
  for (const Relation<F>& r : m.alg->relations())
    check(combo_action(m, r.combo).is_zero(), "relation does not annihilate the module");
}

template <class F>
Rep<F> zero_rep(AlgebraPtr<F> alg) {
  Rep<F> m{alg, std::vector<int>(alg->num_vertices(), 0), {}};
  const Quiver& q = alg->quiver();
  for (int a = 0; a < q.num_arrows(); ++a) m.arrow_maps.emplace_back(alg->field(), 0, 0);
  return m;
}

template <class F>
Rep<F> simple_rep(AlgebraPtr<F> alg, int i) {
  Rep<F> m = zero_rep(alg);
  m.dims[i] = 1;
  const Quiver& q = alg->quiver();
  for (int a = 0; a < q.num_arrows(); ++a)
    m.arrow_maps[a] =
        Mat<F>(alg->field(), m.dims[q.arrows[a].source], m.dims[q.arrows[a].target]);
  return m;
}

// P(i) = e_i A: fiber at j spanned by the basis words from i to j; arrows act
// by right multiplication in the algebra.
template <class F>
Rep<F> proj_rep(AlgebraPtr<F> alg, int i) {
  const F& f = alg->field();
  const Quiver& q = alg->quiver();
  Rep<F> m{alg, {}, {}};
  for (int j = 0; j < q.num_vertices(); ++j)
    m.dims.push_back(static_cast<int>(alg->basis_at(i, j).size()));
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrows[a].source, t = q.arrows[a].target;
    const std::vector<int>& src = alg->basis_at(i, s);
    const std::vector<int>& tgt = alg->basis_at(i, t);
    std::map<int, int> tpos;
    for (std::size_t c = 0; c < tgt.size(); ++c) tpos[tgt[c]] = static_cast<int>(c);
    Mat<F> mat(f, src.size(), tgt.size());
    for (std::size_t r = 0; r < src.size(); ++r)
      for (const auto& [idx, coeff] : alg->table(src[r], alg->arrow_idx(a)))
        mat.at(r, tpos.at(idx)) = coeff;
    m.arrow_maps.push_back(mat);
  }
  return m;
}

// I(i) = dual of A e_i: fiber at j is the dual of the span of words from j to
// i; the arrow a:j->t acts by the transpose of left multiplication by a.
template <class F>
Rep<F> inj_rep(AlgebraPtr<F> alg, int i) {
  const F& f = alg->field();
  const Quiver& q = alg->quiver();
  Rep<F> m{alg, {}, {}};
  for (int j = 0; j < q.num_vertices(); ++j)
    m.dims.push_back(static_cast<int>(alg->basis_at(j, i).size()));
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrows[a].source, t = q.arrows[a].target;
    const std::vector<int>& src = alg->basis_at(s, i);  // fiber basis at s (dual)
    const std::vector<int>& tgt = alg->basis_at(t, i);
    std::map<int, int> spos;
    for (std::size_t c = 0; c < src.size(); ++c) spos[src[c]] = static_cast<int>(c);
    Mat<F> left(f, tgt.size(), src.size());  // b |-> a*b expanded at s
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (const auto& [idx, coeff] : alg->table(alg->arrow_idx(a), tgt[r]))
        left.at(r, spos.at(idx)) = coeff;
    m.arrow_maps.push_back(left.transposed());
  }
  return m;
}

template <class F>
Rep<F> direct_sum(const std::vector<Rep<F>>& parts);

template <class F>
Rep<F> regular_rep(AlgebraPtr<F> alg) {
  std::vector<Rep<F>> parts;
  for (int i = 0; i < alg->num_vertices(); ++i) parts.push_back(proj_rep(alg, i));
  return direct_sum(parts);
}

// ---------------------------------------------------------------------------

template <class F>
struct Morphism {
  Rep<F> src, tgt;
  std::vector<Mat<F>> mats;  // per vertex, dims src x dims tgt

  const F& field() const { return src.field(); }
};

template <class F>
bool is_natural(const Morphism<F>& f) {
  const Quiver& q = f.src.alg->quiver();
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrows[a].source, t = q.arrows[a].target;
    if (!(f.src.arrow_maps[a] * f.mats[t] == f.mats[s] * f.tgt.arrow_maps[a])) return false;
  }
  return true;
}

template <class F>
Morphism<F> identity_morphism(const Rep<F>& m) {
  Morphism<F> f{m, m, {}};
  for (int d : m.dims) f.mats.push_back(Mat<F>::identity(m.field(), d));
  return f;
}

template <class F>
Morphism<F> zero_morphism(const Rep<F>& m, const Rep<F>& n) {
  Morphism<F> f{m, n, {}};
  for (int i = 0; i < m.num_vertices(); ++i)
    f.mats.emplace_back(m.field(), m.dims[i], n.dims[i]);
  return f;
}

// f then g.
template <class F>
Morphism<F> compose(const Morphism<F>& f, const Morphism<F>& g) {
  Morphism<F> h{f.src, g.tgt, {}};
  for (std::size_t i = 0; i < f.mats.size(); ++i) h.mats.push_back(f.mats[i] * g.mats[i]);
  return h;
}

template <class F>
Morphism<F> morphism_add(const Morphism<F>& f, const Morphism<F>& g) {
  Morphism<F> h = f;
  for (std::size_t i = 0; i < h.mats.size(); ++i) h.mats[i] = h.mats[i] + g.mats[i];
  return h;
}

template <class F>
Morphism<F> morphism_scaled(const Morphism<F>& f, const typename F::Elem& c) {
  Morphism<F> h = f;
  for (auto& m : h.mats) m = m.scaled(c);
  return h;
}

template <class F>
bool is_zero_morphism(const Morphism<F>& f) {
  for (const auto& m : f.mats)
    if (!m.is_zero()) return false;
  return true;
}

template <class F>
bool is_mono(const Morphism<F>& f) {
  for (std::size_t i = 0; i < f.mats.size(); ++i)
    if (rank(f.mats[i]) != f.mats[i].rows()) return false;
  return true;
}

template <class F>
bool is_epi(const Morphism<F>& f) {
  for (std::size_t i = 0; i < f.mats.size(); ++i)
    if (rank(f.mats[i]) != f.mats[i].cols()) return false;
  return true;
}

template <class F>
bool is_iso(const Morphism<F>& f) {
  if (f.src.dims != f.tgt.dims) return false;
  return is_mono(f);
}

// Flatten per-vertex matrices row-major into one coordinate vector; the
// layout is shared by hom_space and morphism_from_flat.
template <class F>
std::vector<typename F::Elem> flatten_morphism(const Morphism<F>& f) {
  std::vector<typename F::Elem> v;
  for (const auto& m : f.mats)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

template <class F>
Morphism<F> morphism_from_flat(const Rep<F>& m, const Rep<F>& n,
                               const std::vector<typename F::Elem>& v) {
  Morphism<F> f{m, n, {}};
  std::size_t pos = 0;
  for (int i = 0; i < m.num_vertices(); ++i) {
    Mat<F> mat(m.field(), m.dims[i], n.dims[i]);
    for (std::size_t r = 0; r < mat.rows(); ++r)
      for (std::size_t c = 0; c < mat.cols(); ++c) mat.at(r, c) = v[pos++];
    f.mats.push_back(mat);
  }
  check(pos == v.size(), "flat morphism length");
  return f;
}

// Basis of Hom(M,N): the naturality constraints form one linear system over
// all matrix entries; its kernel, in canonical (rref) form, is the basis.
template <class F>
std::vector<Morphism<F>> hom_space(const Rep<F>& m, const Rep<F>& n) {
  check(m.alg == n.alg, "hom_space across different algebras");
  const F& f = m.field();
  const Quiver& q = m.alg->quiver();
  std::vector<std::size_t> off(m.num_vertices() + 1, 0);
  for (int i = 0; i < m.num_vertices(); ++i)
    off[i + 1] = off[i] + static_cast<std::size_t>(m.dims[i]) * n.dims[i];
  std::size_t unknowns = off[m.num_vertices()];

  std::size_t ncons = 0;
  for (int a = 0; a < q.num_arrows(); ++a)
    ncons += static_cast<std::size_t>(m.dims[q.arrows[a].source]) * n.dims[q.arrows[a].target];

  Mat<F> sys(f, unknowns, ncons);
  std::size_t col = 0;
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrows[a].source, t = q.arrows[a].target;
    const Mat<F>& ma = m.arrow_maps[a];
    const Mat<F>& na = n.arrow_maps[a];
    for (int r = 0; r < m.dims[s]; ++r)
      for (int c = 0; c < n.dims[t]; ++c) {
        // sum_k M_a[r,k] f_t[k,c] - sum_k f_s[r,k] N_a[k,c] = 0
        for (int k = 0; k < m.dims[t]; ++k)
          sys.at(off[t] + static_cast<std::size_t>(k) * n.dims[t] + c, col) =
              f.add(sys.at(off[t] + static_cast<std::size_t>(k) * n.dims[t] + c, col),
                    ma.at(r, k));
        for (int k = 0; k < n.dims[s]; ++k)
          sys.at(off[s] + static_cast<std::size_t>(r) * n.dims[s] + k, col) =
              f.sub(sys.at(off[s] + static_cast<std::size_t>(r) * n.dims[s] + k, col),
                    na.at(k, c));
        ++col;
      }
  }
  Mat<F> sol = row_kernel(sys);
  std::vector<Morphism<F>> basis;
  for (std::size_t i = 0; i < sol.rows(); ++i) basis.push_back(morphism_from_flat(m, n, sol.row(i)));
  return basis;
}

template <class F>
int hom_dim(const Rep<F>& m, const Rep<F>& n) {
  return static_cast<int>(hom_space(m, n).size());
}

// ---------------------------------------------------------------------------
// Sub and quotient representations from per-vertex row spans.

template <class F>
struct RepWithMap {
  Rep<F> rep;
  Morphism<F> map;  // inclusion into, or projection from, the ambient module
};

// rows[i]: canonical (rref) basis of an arrow-stable subspace of M_i.
template <class F>
RepWithMap<F> sub_from_rows(const Rep<F>& m, std::vector<Mat<F>> rows) {
  const Quiver& q = m.alg->quiver();
  Rep<F> s{m.alg, {}, {}};
  for (int i = 0; i < m.num_vertices(); ++i) {
    rows[i] = row_basis(rows[i]);
    s.dims.push_back(static_cast<int>(rows[i].rows()));
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    int i = q.arrows[a].source, j = q.arrows[a].target;
    auto sub = solve_left(rows[j], rows[i] * m.arrow_maps[a]);
    check(sub.has_value(), "rows do not span a subrepresentation");
    s.arrow_maps.push_back(*sub);
  }
  Morphism<F> incl{s, m, rows};
  return {s, incl};
}

// Quotient of M by the stable row span; the projection sends a vector to its
// coordinates on the non-pivot columns after reduction by the rref rows.
template <class F>
RepWithMap<F> quot_from_rows(const Rep<F>& m, std::vector<Mat<F>> rows) {
  const F& f = m.field();
  const Quiver& q = m.alg->quiver();
  std::vector<Mat<F>> proj, sect;
  Rep<F> qr{m.alg, {}, {}};
  for (int i = 0; i < m.num_vertices(); ++i) {
    Rref<F> e = rref(rows[i]);
    std::vector<std::size_t> comp;
    {
      std::size_t k = 0;
      for (int c = 0; c < m.dims[i]; ++c) {
        if (k < e.pivots.size() && e.pivots[k] == static_cast<std::size_t>(c))
          ++k;
        else
          comp.push_back(c);
      }
    }
    qr.dims.push_back(static_cast<int>(comp.size()));
    Mat<F> p(f, m.dims[i], comp.size());
    for (std::size_t t = 0; t < comp.size(); ++t) p.at(comp[t], t) = f.one();
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
      for (std::size_t t = 0; t < comp.size(); ++t)
        p.at(e.pivots[k], t) = f.sub(p.at(e.pivots[k], t), e.mat.at(k, comp[t]));
    Mat<F> s(f, comp.size(), m.dims[i]);
    for (std::size_t t = 0; t < comp.size(); ++t) s.at(t, comp[t]) = f.one();
    proj.push_back(p);
    sect.push_back(s);
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    int i = q.arrows[a].source, j = q.arrows[a].target;
    qr.arrow_maps.push_back(sect[i] * m.arrow_maps[a] * proj[j]);
  }
  Morphism<F> pm{m, qr, proj};
  check(is_natural(pm), "quotient by a non-stable span");
  return {qr, pm};
}

template <class F>
RepWithMap<F> kernel(const Morphism<F>& f) {
  std::vector<Mat<F>> rows;
  for (const auto& mat : f.mats) rows.push_back(row_kernel(mat));
  return sub_from_rows(f.src, rows);
}

template <class F>
RepWithMap<F> image(const Morphism<F>& f) {
  std::vector<Mat<F>> rows;
  for (const auto& mat : f.mats) rows.push_back(row_basis(mat));
  return sub_from_rows(f.tgt, rows);
}

template <class F>
RepWithMap<F> cokernel(const Morphism<F>& f) {
  std::vector<Mat<F>> rows;
  for (const auto& mat : f.mats) rows.push_back(row_basis(mat));
  return quot_from_rows(f.tgt, rows);
}

// ---------------------------------------------------------------------------
// Radical, top, socle.

template <class F>
std::vector<Mat<F>> radical_rows(const Rep<F>& m) {
  const F& f = m.field();
  const Quiver& q = m.alg->quiver();
  std::vector<Mat<F>> rows;
  for (int j = 0; j < m.num_vertices(); ++j) {
    Mat<F> acc(f, 0, m.dims[j]);
    for (int a = 0; a < q.num_arrows(); ++a)
      if (q.arrows[a].target == j) acc = acc.vstack(m.arrow_maps[a]);
    rows.push_back(row_basis(acc));
  }
  return rows;
}

template <class F>
std::vector<Mat<F>> socle_rows(const Rep<F>& m) {
  const F& f = m.field();
  const Quiver& q = m.alg->quiver();
  std::vector<Mat<F>> rows;
  for (int j = 0; j < m.num_vertices(); ++j) {
    Mat<F> acc(f, m.dims[j], 0);
    for (int a = 0; a < q.num_arrows(); ++a)
      if (q.arrows[a].source == j) acc = acc.hstack(m.arrow_maps[a]);
    rows.push_back(row_kernel(acc));
  }
  return rows;
}

template <class F>
RepWithMap<F> radical(const Rep<F>& m) {
  return sub_from_rows(m, radical_rows(m));
}

template <class F>
RepWithMap<F> top(const Rep<F>& m) {
  return quot_from_rows(m, radical_rows(m));
}

template <class F>
RepWithMap<F> socle(const Rep<F>& m) {
  return sub_from_rows(m, socle_rows(m));
}

// ---------------------------------------------------------------------------
// Direct sums.

template <class F>
Rep<F> direct_sum(const std::vector<Rep<F>>& parts) {
  check(!parts.empty(), "direct_sum of nothing");
  AlgebraPtr<F> alg = parts.front().alg;
  const F& f = alg->field();
  const Quiver& q = alg->quiver();
  Rep<F> m{alg, std::vector<int>(alg->num_vertices(), 0), {}};
  for (const Rep<F>& p : parts)
    for (int i = 0; i < alg->num_vertices(); ++i) m.dims[i] += p.dims[i];
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrows[a].source, t = q.arrows[a].target;
    Mat<F> mat(f, m.dims[s], m.dims[t]);
    int ro = 0, co = 0;
    for (const Rep<F>& p : parts) {
      for (int r = 0; r < p.dims[s]; ++r)
        for (int c = 0; c < p.dims[t]; ++c) mat.at(ro + r, co + c) = p.arrow_maps[a].at(r, c);
      ro += p.dims[s];
      co += p.dims[t];
    }
    m.arrow_maps.push_back(mat);
  }
  return m;
}

template <class F>
Morphism<F> summand_inclusion(const std::vector<Rep<F>>& parts, const Rep<F>& sum,
                              std::size_t k) {
  const F& f = sum.field();
  Morphism<F> incl{parts[k], sum, {}};
  for (int i = 0; i < sum.num_vertices(); ++i) {
    int off = 0;
    for (std::size_t t = 0; t < k; ++t) off += parts[t].dims[i];
    Mat<F> m(f, parts[k].dims[i], sum.dims[i]);
    for (int r = 0; r < parts[k].dims[i]; ++r) m.at(r, off + r) = f.one();
    incl.mats.push_back(m);
  }
  return incl;
}

template <class F>
Morphism<F> summand_projection(const std::vector<Rep<F>>& parts, const Rep<F>& sum,
                               std::size_t k) {
  const F& f = sum.field();
  Morphism<F> pr{sum, parts[k], {}};
  for (int i = 0; i < sum.num_vertices(); ++i) {
    int off = 0;
    for (std::size_t t = 0; t < k; ++t) off += parts[t].dims[i];
    Mat<F> m(f, sum.dims[i], parts[k].dims[i]);
    for (int r = 0; r < parts[k].dims[i]; ++r) m.at(off + r, r) = f.one();
    pr.mats.push_back(m);
  }
  return pr;
}

// ---------------------------------------------------------------------------
// Covers and hulls.

template <class F>
struct CoverData {
  Morphism<F> map;                 // P -> M epi, resp. M -> I mono
  std::vector<int> vertex_labels;  // one vertex per indecomposable summand, in order
};

// Minimal projective cover: one P(j) per top basis element, mapped through a
// chosen set-theoretic section of M -> top M.
template <class F>
CoverData<F> projective_cover(const Rep<F>& m) {
  const F& f = m.field();
  RepWithMap<F> t = top(m);
  // section of the projection: basis vector t of top_j lifts to the
  // complement coordinate row used by quot_from_rows
  std::vector<Rep<F>> parts;
  std::vector<int> labels;
  std::vector<std::vector<typename F::Elem>> reps;  // lift of each top basis vector
  for (int j = 0; j < m.num_vertices(); ++j) {
    Mat<F> pj = t.map.mats[j];  // m_j x top_j
    for (int s = 0; s < t.rep.dims[j]; ++s) {
      // any preimage of e_s works; take the one supported on the complement
      std::vector<typename F::Elem> e(t.rep.dims[j], f.zero());
      e[s] = f.one();
      auto lift = solve(pj.transposed(), e);
      check(lift.has_value(), "top projection not surjective");
      parts.push_back(proj_rep(m.alg, j));
      labels.push_back(j);
      reps.push_back(*lift);
    }
  }
  if (parts.empty()) {
    Morphism<F> z = zero_morphism(zero_rep(m.alg), m);
    return {z, {}};
  }
  Rep<F> p = direct_sum(parts);
  Morphism<F> cover{p, m, {}};
  for (int v = 0; v < m.num_vertices(); ++v) {
    Mat<F> mat(f, p.dims[v], m.dims[v]);
    int ro = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      int j = labels[k];
      const std::vector<int>& words = m.alg->basis_at(j, v);
      for (std::size_t w = 0; w < words.size(); ++w) {
        Path path = m.alg->basis()[words[w]];
        mat.set_row(ro + w, apply_row(reps[k], path_action(m, path)));
      }
      ro += parts[k].dims[v];
    }
    cover.mats.push_back(mat);
  }
  check(is_natural(cover), "cover naturality");
  check(is_epi(cover), "cover surjectivity");
  return {cover, labels};
}

// Minimal injective hull: one I(j) per socle basis element.  The component
// of M -> I(j) attached to a functional phi on M_j sends x in M_v to the
// functional (word b from v to j) |-> phi(x*b).
template <class F>
CoverData<F> injective_hull(const Rep<F>& m) {
  const F& f = m.field();
  std::vector<Mat<F>> soc = socle_rows(m);
  std::vector<Rep<F>> parts;
  std::vector<int> labels;
  std::vector<std::pair<int, std::size_t>> funcs;  // (vertex j, pivot coordinate)
  for (int j = 0; j < m.num_vertices(); ++j) {
    Rref<F> e = rref(soc[j]);
    for (std::size_t s = 0; s < e.rank; ++s) {
      parts.push_back(inj_rep(m.alg, j));
      labels.push_back(j);
      funcs.emplace_back(j, e.pivots[s]);
    }
  }
  if (parts.empty()) {
    Morphism<F> z = zero_morphism(m, zero_rep(m.alg));
    check(m.is_zero(), "nonzero module with zero socle");
    return {z, {}};
  }
  Rep<F> inj = direct_sum(parts);
  Morphism<F> hull{m, inj, {}};
  for (int v = 0; v < m.num_vertices(); ++v) {
    Mat<F> mat(f, m.dims[v], inj.dims[v]);
    int co = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      auto [j, pivot] = funcs[k];
      const std::vector<int>& words = m.alg->basis_at(v, j);
      for (std::size_t w = 0; w < words.size(); ++w) {
        Mat<F> act = path_action(m, m.alg->basis()[words[w]]);  // M_v -> M_j
        for (int r = 0; r < m.dims[v]; ++r) mat.at(r, co + w) = act.at(r, pivot);
      }
      co += parts[k].dims[v];
    }
    hull.mats.push_back(mat);
  }
  check(is_natural(hull), "hull naturality");
  check(is_mono(hull), "hull injectivity");
  return {hull, labels};
}

template <class F>
bool is_projective_rep(const Rep<F>& m) {
  return projective_cover(m).map.src.dims == m.dims;
}

template <class F>
bool is_injective_rep(const Rep<F>& m) {
  return injective_hull(m).map.tgt.dims == m.dims;
}

// ---------------------------------------------------------------------------
// Duality and the Nakayama correspondence.

// D(M) over the opposite algebra: same fibers, transposed arrow maps.  The
// opposite quiver keeps arrow indices, so map k of the dual corresponds to
// map k of M.
template <class F>
Rep<F> dual_rep(const Rep<F>& m, AlgebraPtr<F> op) {
  Rep<F> d{op, m.dims, {}};
  for (const auto& mat : m.arrow_maps) d.arrow_maps.push_back(mat.transposed());
  validate_rep(d);
  return d;
}

// Contravariant: D(f): D(tgt) -> D(src).
template <class F>
Morphism<F> dual_morphism(const Morphism<F>& f, AlgebraPtr<F> op) {
  Morphism<F> d{dual_rep(f.tgt, op), dual_rep(f.src, op), {}};
  for (const auto& mat : f.mats) d.mats.push_back(mat.transposed());
  return d;
}

// For projective P = sum P(j)^t_j (multiplicities read off the top),
// nu P = sum I(j)^t_j.
template <class F>
Rep<F> nakayama(const Rep<F>& p) {
  CoverData<F> c = projective_cover(p);
  check(c.map.src.dims == p.dims, "nakayama on a non-projective module");
  if (c.vertex_labels.empty()) return zero_rep(p.alg);
  std::vector<Rep<F>> parts;
  for (int j : c.vertex_labels) parts.push_back(inj_rep(p.alg, j));
  return direct_sum(parts);
}

// Tr_N M: the span of the images of every morphism N -> M.
template <class F>
RepWithMap<F> trace(const Rep<F>& n, const Rep<F>& m) {
  const F& f = m.field();
  std::vector<Morphism<F>> homs = hom_space(n, m);
  std::vector<Mat<F>> rows;
  for (int i = 0; i < m.num_vertices(); ++i) {
    Mat<F> acc(f, 0, m.dims[i]);
    for (const Morphism<F>& h : homs) acc = acc.vstack(h.mats[i]);
    rows.push_back(row_basis(acc));
  }
  return sub_from_rows(m, rows);
}

template <class F>
std::string dims_str(const Rep<F>& m) {
  std::string s = "(";
  for (int i = 0; i < m.num_vertices(); ++i) {
    if (i) s += ",";
    s += std::to_string(m.dims[i]);
  }
  return s + ")";
}

}  // namespace bqa
