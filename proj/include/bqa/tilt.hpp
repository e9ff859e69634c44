#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bqa/decompose.hpp"
#include "bqa/homo.hpp"
#include "bqa/rep.hpp"

namespace bqa {

// ---------------------------------------------------------------------------
// add-closure handle.
//
// Approximation targets are assembled from (and reported against) a fixed
// list of pairwise non-isomorphic indecomposable summands of Q, in the
// deterministic order produced by basic_summands.

template <class F>
struct AddClass {
  Rep<F> whole;
  std::vector<Rep<F>> parts;
};

template <class F>
AddClass<F> add_class(const Rep<F>& q) {
  return {q, basic_summands(q)};
}

// ---------------------------------------------------------------------------
// Minimal approximations.

enum class Side { left, right };

// f is a left approximation X -> Q' (every map X -> add Q factors through it)
// or a right approximation Q' -> X.  part_of records, block by block, which
// entry of parts each indecomposable summand of Q' is.
template <class F>
struct ApproxArrow {
  Morphism<F> map;
  Side side = Side::left;
  bool minimal = true;
  std::vector<int> part_of;
  std::vector<Rep<F>> parts;

  const Rep<F>& target() const { return side == Side::left ? map.tgt : map.src; }
  const Rep<F>& source_module() const { return side == Side::left ? map.src : map.tgt; }
};

namespace detail {

template <class F>
Mat<F> flat_row(const F& f, const Morphism<F>& m) {
  std::vector<typename F::Elem> v = flatten_morphism(m);
  Mat<F> row(f, 1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) row.at(0, j) = v[j];
  return row;
}

// Does target lie in the span of gens (all flattened over the same Hom space)?
template <class F>
bool in_span(const F& f, const std::vector<Morphism<F>>& gens, const Morphism<F>& target) {
  std::vector<typename F::Elem> t = flatten_morphism(target);
  if (t.empty() || std::all_of(t.begin(), t.end(), [&](const auto& e) { return e == f.zero(); }))
    return true;
  if (gens.empty()) return false;
  Mat<F> g(f, gens.size(), t.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<typename F::Elem> row = flatten_morphism(gens[i]);
    for (std::size_t j = 0; j < row.size(); ++j) g.at(i, j) = row[j];
  }
  return solve_left(g, flat_row(f, target)).has_value();
}

// Hom bases between all pairs of parts, computed lazily.
template <class F>
class PartHomCache {
 public:
  explicit PartHomCache(const std::vector<Rep<F>>& parts) : parts_(&parts) {
    table_.resize(parts.size(), std::vector<std::optional<std::vector<Morphism<F>>>>(parts.size()));
  }
  const std::vector<Morphism<F>>& get(int a, int b) {
    auto& slot = table_[a][b];
    if (!slot) slot = hom_space((*parts_)[a], (*parts_)[b]);
    return *slot;
  }

 private:
  const std::vector<Rep<F>>* parts_;
  std::vector<std::vector<std::optional<std::vector<Morphism<F>>>>> table_;
};

}  // namespace detail

// Universal map into one target copy per Hom-basis element, then repeatedly
// drop a block whose component factors through the remaining blocks.  What
// survives is a left minimal left add Q-approximation.
template <class F>
ApproxArrow<F> left_min_approx(const Rep<F>& x, const AddClass<F>& q) {
  const F& f = x.field();
  struct Block {
    int part;
    Morphism<F> comp;  // X -> parts[part]
  };
  std::vector<Block> blocks;
  for (std::size_t p = 0; p < q.parts.size(); ++p)
    for (Morphism<F>& h : hom_space(x, q.parts[p])) blocks.push_back({static_cast<int>(p), std::move(h)});

  detail::PartHomCache<F> cache(q.parts);
  bool dropped = true;
  while (dropped) {
    dropped = false;
    for (std::size_t t = 0; t < blocks.size(); ++t) {
      std::vector<Morphism<F>> gens;
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (j == t) continue;
        for (const Morphism<F>& h : cache.get(blocks[j].part, blocks[t].part))
          gens.push_back(compose(blocks[j].comp, h));
      }
      if (detail::in_span(f, gens, blocks[t].comp)) {
        blocks.erase(blocks.begin() + t);
        dropped = true;
        break;
      }
    }
  }

  ApproxArrow<F> out;
  out.side = Side::left;
  out.parts = q.parts;
  std::vector<Rep<F>> pieces;
  for (const Block& b : blocks) {
    out.part_of.push_back(b.part);
    pieces.push_back(q.parts[b.part]);
  }
  Rep<F> tgt = pieces.empty() ? zero_rep(x.alg) : direct_sum(pieces);
  Morphism<F> m{x, tgt, {}};
  for (int v = 0; v < x.num_vertices(); ++v) {
    Mat<F> col(f, x.dims[v], tgt.dims[v]);
    int off = 0;
    for (const Block& b : blocks) {
      const Mat<F>& c = b.comp.mats[v];
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t cc = 0; cc < c.cols(); ++cc) col.at(r, off + cc) = c.at(r, cc);
      off += c.cols();
    }
    m.mats.push_back(col);
  }
  out.map = std::move(m);
  check(is_natural(out.map), "approximation is not a morphism");
  return out;
}

template <class F>
ApproxArrow<F> right_min_approx(const Rep<F>& x, const AddClass<F>& q) {
  const F& f = x.field();
  struct Block {
    int part;
    Morphism<F> comp;  // parts[part] -> X
  };
  std::vector<Block> blocks;
  for (std::size_t p = 0; p < q.parts.size(); ++p)
    for (Morphism<F>& h : hom_space(q.parts[p], x)) blocks.push_back({static_cast<int>(p), std::move(h)});

  detail::PartHomCache<F> cache(q.parts);
  bool dropped = true;
  while (dropped) {
    dropped = false;
    for (std::size_t t = 0; t < blocks.size(); ++t) {
      std::vector<Morphism<F>> gens;
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (j == t) continue;
        for (const Morphism<F>& h : cache.get(blocks[t].part, blocks[j].part))
          gens.push_back(compose(h, blocks[j].comp));
      }
      if (detail::in_span(f, gens, blocks[t].comp)) {
        blocks.erase(blocks.begin() + t);
        dropped = true;
        break;
      }
    }
  }

  ApproxArrow<F> out;
  out.side = Side::right;
  out.parts = q.parts;
  std::vector<Rep<F>> pieces;
  for (const Block& b : blocks) {
    out.part_of.push_back(b.part);
    pieces.push_back(q.parts[b.part]);
  }
  Rep<F> src = pieces.empty() ? zero_rep(x.alg) : direct_sum(pieces);
  Morphism<F> m{src, x, {}};
  for (int v = 0; v < x.num_vertices(); ++v) {
    Mat<F> rows(f, src.dims[v], x.dims[v]);
    int off = 0;
    for (const Block& b : blocks) {
      const Mat<F>& c = b.comp.mats[v];
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t cc = 0; cc < c.cols(); ++cc) rows.at(off + r, cc) = c.at(r, cc);
      off += c.rows();
    }
    m.mats.push_back(rows);
  }
  out.map = std::move(m);
  check(is_natural(out.map), "approximation is not a morphism");
  return out;
}

template <class F>
ApproxArrow<F> left_min_approx(const Rep<F>& x, const Rep<F>& q) {
  return left_min_approx(x, add_class(q));
}

template <class F>
ApproxArrow<F> right_min_approx(const Rep<F>& x, const Rep<F>& q) {
  return right_min_approx(x, add_class(q));
}

// Certifies the approximation property: every Hom-basis element into (out of)
// each part factors through the arrow.
template <class F>
bool is_approximation(const ApproxArrow<F>& a) {
  const F& f = a.map.field();
  for (const Rep<F>& p : a.parts) {
    if (a.side == Side::left) {
      std::vector<Morphism<F>> gens;
      for (const Morphism<F>& g : hom_space(a.map.tgt, p)) gens.push_back(compose(a.map, g));
      for (const Morphism<F>& h : hom_space(a.map.src, p))
        if (!detail::in_span(f, gens, h)) return false;
    } else {
      std::vector<Morphism<F>> gens;
      for (const Morphism<F>& g : hom_space(p, a.map.src)) gens.push_back(compose(g, a.map));
      for (const Morphism<F>& h : hom_space(p, a.map.tgt))
        if (!detail::in_span(f, gens, h)) return false;
    }
  }
  return true;
}

// How many copies of parts[p] the approximation target carries.
template <class F>
std::vector<int> approx_multiplicities(const ApproxArrow<F>& a) {
  std::vector<int> mult(a.parts.size(), 0);
  for (int p : a.part_of) ++mult[p];
  return mult;
}

// ---------------------------------------------------------------------------
// Iterated approximation chains: 0 -> X -> Q^0 -> Q^1 -> ...  (and its dual).
//
// Step i approximates the i-th cosyzygy; the chain stays exact while the
// approximations are injective.  codim records the first stage whose
// approximation is bijective, i.e. the first cosyzygy lying in add Q.

template <class F>
struct SubChain {
  std::vector<ApproxArrow<F>> steps;
  std::vector<Rep<F>> cosyzygies;  // X^0 = X, X^{i+1} = Cok(steps[i])
  Extent codim;
  int mono_stages = 0;   // steps 0..mono_stages-1 are injective
  bool broke_mono = false;  // stopped at a non-injective approximation
};

template <class F>
SubChain<F> sub_chain(const Rep<F>& x, const AddClass<F>& q, int bound) {
  SubChain<F> out;
  out.cosyzygies.push_back(x);
  out.codim = Extent::above(bound);
  for (int i = 0; i <= bound; ++i) {
    ApproxArrow<F> f = left_min_approx(out.cosyzygies.back(), q);
    bool mono = is_mono(f.map);
    bool epi = is_epi(f.map);
    out.steps.push_back(std::move(f));
    if (!mono) {
      out.broke_mono = true;
      return out;
    }
    ++out.mono_stages;
    if (epi) {
      out.codim = Extent::finite(i);
      return out;
    }
    out.cosyzygies.push_back(cokernel(out.steps.back().map).rep);
  }
  return out;
}

template <class F>
struct FacChain {
  std::vector<ApproxArrow<F>> steps;
  std::vector<Rep<F>> syzygies;  // Y_0 = Y, Y_{i+1} = Ker(steps[i])
  Extent fdim;
  int epi_stages = 0;
  bool broke_epi = false;
};

template <class F>
FacChain<F> fac_chain(const Rep<F>& y, const AddClass<F>& q, int bound) {
  FacChain<F> out;
  out.syzygies.push_back(y);
  out.fdim = Extent::above(bound);
  for (int i = 0; i <= bound; ++i) {
    ApproxArrow<F> f = right_min_approx(out.syzygies.back(), q);
    bool epi = is_epi(f.map);
    bool mono = is_mono(f.map);
    out.steps.push_back(std::move(f));
    if (!epi) {
      out.broke_epi = true;
      return out;
    }
    ++out.epi_stages;
    if (mono) {
      out.fdim = Extent::finite(i);
      return out;
    }
    out.syzygies.push_back(kernel(out.steps.back().map).rep);
  }
  return out;
}

// X admits an exact sequence 0 -> X -> Q^0 -> ... -> Q^{n-1} with terms in
// add Q.  A finite codim certifies membership for every n.
template <class F>
bool in_sub_pow(const SubChain<F>& c, int n) {
  return n <= 0 || c.codim.is_finite() || n <= c.mono_stages;
}

template <class F>
bool in_fac_pow(const FacChain<F>& c, int n) {
  return n <= 0 || c.fdim.is_finite() || n <= c.epi_stages;
}

template <class F>
Extent sub_codim(const Rep<F>& x, const Rep<F>& q, int bound) {
  return sub_chain(x, add_class(q), bound).codim;
}

template <class F>
Extent fac_dim(const Rep<F>& y, const Rep<F>& q, int bound) {
  return fac_chain(y, add_class(q), bound).fdim;
}

// ---------------------------------------------------------------------------
// Dominant dimension with respect to an injective module: the number of
// initial terms of the minimal injective coresolution lying in add I.

template <class F>
Extent i_dominant_dimension(AlgebraPtr<F> alg, const Rep<F>& inj, int bound) {
  check(is_injective_rep(inj), "reference module is not injective");
  std::vector<int> allowed = injective_hull(inj).vertex_labels;
  std::sort(allowed.begin(), allowed.end());
  Coresolution<F> co = min_inj_coresolution(regular_rep(alg), bound);
  for (std::size_t k = 0; k < co.diffs.size(); ++k) {
    for (int v : co.labels[k])
      if (!std::binary_search(allowed.begin(), allowed.end(), v))
        return Extent::finite(static_cast<int>(k));
  }
  if (co.complete) return Extent::inf();
  return Extent::above(bound);
}

// ---------------------------------------------------------------------------
// Tilting certificates.

template <class F>
struct TiltingCertificate {
  Rep<F> t;
  bool ok = false;
  std::string failed;   // which condition broke, empty when ok
  std::string witness;
  Extent pd_t;
  std::vector<int> ext_dims;  // dim Ext^i(T,T) for i = 1..pd
  SubChain<F> chain;          // minimal add-T coresolution of the regular module
  int degree = -1;            // = pd T when certified
  int num_classes = 0;
  bool basic = false;
};

// T is tilting iff pd T is finite, Ext^i(T,T) = 0 for i >= 1, and the regular
// module has an add-T coresolution of length exactly pd T.
template <class F>
TiltingCertificate<F> is_tilting(const Rep<F>& t, int bound) {
  TiltingCertificate<F> cert;
  cert.t = t;
  if (t.is_zero()) {
    cert.failed = "nonzero";
    cert.witness = "the zero module is not tilting";
    return cert;
  }

  Resolution<F> res = min_proj_resolution(t, bound);
  if (!res.complete) {
    cert.pd_t = Extent::above(bound);
    cert.failed = "finite projective dimension";
    cert.witness = "no projective resolution of length <= " + std::to_string(bound);
    return cert;
  }
  int d = res.length();
  cert.pd_t = Extent::finite(d);

  for (int i = 1; i <= d; ++i) {
    int e = ext_dim(t, t, i);
    cert.ext_dims.push_back(e);
    if (e != 0) {
      cert.failed = "self-orthogonality";
      std::ostringstream os;
      os << "Ext^" << i << "(T,T) has dimension " << e;
      cert.witness = os.str();
      return cert;
    }
  }

  cert.chain = sub_chain(regular_rep(t.alg), add_class(t), d);
  if (cert.chain.broke_mono) {
    cert.failed = "coresolution of the algebra";
    std::ostringstream os;
    os << "minimal approximation of the regular module is not injective at stage "
       << cert.chain.mono_stages;
    cert.witness = os.str();
    return cert;
  }
  if (!(cert.chain.codim == Extent::finite(d))) {
    cert.failed = "coresolution of the algebra";
    std::ostringstream os;
    os << "add-T coresolution length " << cert.chain.codim.str() << " differs from pd T = " << d;
    cert.witness = os.str();
    return cert;
  }

  Decomposition<F> dec = decompose(t);
  cert.num_classes = static_cast<int>(dec.summands.size());
  cert.basic = std::all_of(dec.summands.begin(), dec.summands.end(),
                           [](const auto& s) { return s.second == 1; });
  cert.degree = d;
  cert.ok = true;
  return cert;
}

// C is cotilting over A iff its dual is tilting over the opposite algebra.
// The returned certificate lives over the opposite algebra.
template <class F>
TiltingCertificate<F> is_cotilting(const Rep<F>& c, int bound) {
  AlgebraPtr<F> op = opposite_algebra(*c.alg);
  return is_tilting(dual_rep(c, op), bound);
}

// ---------------------------------------------------------------------------
// Mutation.

template <class F>
struct MutationResult {
  bool ok = false;
  std::string error;
  Rep<F> result;          // basic form of Cok(f) + U
  Rep<F> complement;      // U
  ApproxArrow<F> approx;  // minimal left add-U approximation of X
};

// mu_X(T) for T = X + U: replace X by the cokernel of its minimal left add-U
// approximation.  Requires the approximation to be injective.
template <class F>
MutationResult<F> mutate(const Rep<F>& t, const Rep<F>& x) {
  MutationResult<F> out;
  if (x.is_zero()) {
    out.error = "the mutated part must be nonzero";
    return out;
  }
  std::vector<Rep<F>> tparts = basic_summands(t);
  std::vector<Rep<F>> xparts = basic_summands(x);
  std::vector<Rep<F>> uparts;
  for (const Rep<F>& p : tparts) {
    bool in_x = std::any_of(xparts.begin(), xparts.end(),
                            [&](const Rep<F>& q) { return indec_isomorphic(p, q); });
    if (!in_x) uparts.push_back(p);
  }
  for (const Rep<F>& q : xparts) {
    bool in_t = std::any_of(tparts.begin(), tparts.end(),
                            [&](const Rep<F>& p) { return indec_isomorphic(p, q); });
    if (!in_t) {
      out.error = "the mutated part is not a direct summand";
      return out;
    }
  }
  Rep<F> u = uparts.empty() ? zero_rep(t.alg) : direct_sum(uparts);
  Rep<F> xb = direct_sum(xparts);

  out.approx = left_min_approx(xb, AddClass<F>{u, uparts});
  if (!is_mono(out.approx.map)) {
    out.error = "the mutated part does not embed into the complement";
    return out;
  }
  Rep<F> cok = cokernel(out.approx.map).rep;
  out.complement = u;
  out.result = basic_rep(direct_sum(std::vector<Rep<F>>{cok, u}));
  out.ok = true;
  return out;
}

// ---------------------------------------------------------------------------
// The canonical chain T^d = basic(A^d + Q) along the minimal add-Q
// coresolution of the regular module.

template <class F>
struct TiltingChain {
  bool ok = false;
  std::string error;
  Rep<F> q;
  SubChain<F> chain;            // stages 0..m, each injective and not surjective
  std::vector<Rep<F>> terms;    // terms[0] = A, terms[d] = basic(A^d + Q), d <= m+1
  std::vector<TiltingCertificate<F>> certs;  // certs[d] certifies terms[d] d-tilting
  int m = -1;
  bool truncated = false;  // ran into the bound before a natural stop
};

template <class F>
TiltingChain<F> tilting_chain(AlgebraPtr<F> alg, const Rep<F>& q, int bound) {
  TiltingChain<F> out;
  out.q = q;
  if (q.is_zero()) {
    out.error = "the coresolving module is zero";
    return out;
  }

  Resolution<F> qres = min_proj_resolution(q, 1);
  if (!qres.complete) {
    out.error = "projective dimension of Q exceeds 1";
    return out;
  }
  int e1 = ext_dim(q, q, 1);
  if (e1 != 0) {
    std::ostringstream os;
    os << "Ext^1(Q,Q) has dimension " << e1;
    out.error = os.str();
    return out;
  }

  AddClass<F> cls = add_class(q);
  Rep<F> a = regular_rep(alg);
  out.chain.cosyzygies.push_back(a);
  out.chain.codim = Extent::above(bound);
  int stages = 0;
  bool stopped_epi = false;
  for (int i = 0; i <= bound; ++i) {
    ApproxArrow<F> f = left_min_approx(out.chain.cosyzygies.back(), cls);
    bool mono = is_mono(f.map);
    bool epi = is_epi(f.map);
    if (!mono || epi) {
      // mono+epi: the cosyzygy already lies in add Q, so the chain has no
      // stage at which this arrow fails to be surjective.
      stopped_epi = mono && epi;
      if (epi) out.chain.codim = Extent::finite(i);
      break;
    }
    out.chain.steps.push_back(std::move(f));
    ++out.chain.mono_stages;
    ++stages;
    out.chain.cosyzygies.push_back(cokernel(out.chain.steps.back().map).rep);
    if (i == bound) out.truncated = true;
  }
  out.m = stages - 1;
  if (out.m < 0) {
    out.error = stopped_epi ? "the regular module already lies in add Q"
                            : "the regular module does not embed into add Q";
    return out;
  }

  out.terms.push_back(a);
  out.certs.push_back(is_tilting(a, bound));
  for (int d = 1; d <= out.m + 1; ++d) {
    Rep<F> td = basic_rep(direct_sum(std::vector<Rep<F>>{out.chain.cosyzygies[d], q}));
    // The expected degree is d, so give the certifier headroom past d even
    // when the chain itself was cut short.
    out.certs.push_back(is_tilting(td, std::max(bound, d + 1)));
    out.terms.push_back(std::move(td));
  }
  out.ok = true;
  return out;
}

// ---------------------------------------------------------------------------
// Ext-vanishing order on tilting modules.

enum class ExtOrder { equal, geq, leq, incomparable };

inline const char* ext_order_str(ExtOrder o) {
  switch (o) {
    case ExtOrder::equal: return "equal";
    case ExtOrder::geq: return "geq";
    case ExtOrder::leq: return "leq";
    default: return "incomparable";
  }
}

// T >= U when Ext^i(T,U) = 0 for all i >= 1; on tilting modules this is a
// partial order, so mutual vanishing forces equality in add.
template <class F>
ExtOrder ext_order_compare(const Rep<F>& t, const Rep<F>& u, int bound) {
  Extent pt = pd(t, bound), pu = pd(u, bound);
  int hi = 1;
  if (pt.is_finite()) hi = std::max(hi, pt.value);
  if (pu.is_finite()) hi = std::max(hi, pu.value);
  bool fwd = ext_vanishes(t, u, hi);
  bool bwd = ext_vanishes(u, t, hi);
  if (fwd && bwd) return ExtOrder::equal;
  if (fwd) return ExtOrder::geq;
  if (bwd) return ExtOrder::leq;
  return ExtOrder::incomparable;
}

// ---------------------------------------------------------------------------
// Brute-force search, capped by an explicit candidate pool.

// Indecomposables that show up in the obvious places: projectives, injectives,
// their radicals and socle quotients, the simples, and anything extra the
// caller wants scanned.  Deduplicated up to isomorphism.
template <class F>
std::vector<Rep<F>> module_pool(AlgebraPtr<F> alg, const std::vector<Rep<F>>& extra = {}) {
  std::vector<Rep<F>> pool;
  auto put = [&](const Rep<F>& m) {
    for (const Rep<F>& s : basic_summands(m)) {
      bool seen = false;
      for (const Rep<F>& p : pool) seen = seen || are_isomorphic(s, p);
      if (!seen) pool.push_back(s);
    }
  };
  for (int v = 0; v < alg->num_vertices(); ++v) {
    Rep<F> p = proj_rep(alg, v), i = inj_rep(alg, v);
    put(p);
    put(i);
    put(simple_rep(alg, v));
    put(radical(p).rep);
    put(quot_from_rows(p, socle_rows(p)).rep);
    put(quot_from_rows(i, socle_rows(i)).rep);
  }
  for (const Rep<F>& m : extra) put(m);
  return pool;
}

// Every basic module with exactly one indecomposable per simple, summands
// drawn from the pool, certified d-tilting.  Results are deduplicated up to
// isomorphism; the pool is the cap, so "none found besides T" means none
// within the scanned candidates.
template <class F>
std::vector<Rep<F>> capped_tilting_search(AlgebraPtr<F> alg, const std::vector<Rep<F>>& pool_in,
                                          int d, int bound) {
  check(d >= 0 && bound >= d, "capped search needs 0 <= d <= bound");
  std::vector<Rep<F>> pool;
  for (const Rep<F>& m : pool_in)
    for (const Rep<F>& s : basic_summands(m)) {
      bool seen = false;
      for (const Rep<F>& p : pool) seen = seen || are_isomorphic(s, p);
      if (!seen) pool.push_back(s);
    }

  // A summand of a d-tilting module has pd <= d and no self-extensions in
  // degrees 1..d, and any two summands are mutually Ext-orthogonal there.
  std::vector<Rep<F>> cand;
  for (const Rep<F>& x : pool) {
    if (!extent_at_most(pd(x, bound), d)) continue;
    bool self_ok = true;
    for (int i = 1; i <= d && self_ok; ++i) self_ok = ext_dim(x, x, i) == 0;
    if (self_ok) cand.push_back(x);
  }
  const int m = static_cast<int>(cand.size());
  std::vector<std::vector<bool>> compat(m, std::vector<bool>(m, true));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool ok = true;
      for (int k = 1; k <= d && ok; ++k)
        ok = ext_dim(cand[i], cand[j], k) == 0 && ext_dim(cand[j], cand[i], k) == 0;
      compat[i][j] = compat[j][i] = ok;
    }

  const int n = alg->num_vertices();
  std::vector<Rep<F>> found;
  std::vector<int> pick;
  auto emit = [&]() {
    std::vector<Rep<F>> parts;
    for (int i : pick) parts.push_back(cand[i]);
    TiltingCertificate<F> cert = is_tilting(direct_sum(parts), bound);
    if (!cert.ok || cert.degree != d) return;
    for (const Rep<F>& f : found)
      if (are_isomorphic(f, cert.t)) return;
    found.push_back(cert.t);
  };
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == n) {
      emit();
      return;
    }
    for (int i = next; i < m; ++i) {
      bool ok = true;
      for (int j : pick) ok = ok && compat[j][i];
      if (!ok) continue;
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

}  // namespace bqa
