#pragma once
// Bound quiver algebras kQ/I.  Paths compose left to right: in the product
// a*b the path a is traversed first, so relations read off a quiver diagram
// can be entered verbatim.  Relations are rewritten by a length-lex
// noncommutative rewriting system, completed on critical pairs; the algebra
// basis is the set of irreducible words.  Admissibility (every relation a
// combination of parallel paths of length >= 2) is enforced up front, and
// finite dimensionality below the configured length bound is certified by
// the absence of irreducible words at the bound.
#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "bqa/matrix.hpp"

namespace bqa {

struct Quiver {
  struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
  };

  std::vector<std::string> vertices;  // ordered labels
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }

  int vertex_index(const std::string& label) const {
    for (int i = 0; i < num_vertices(); ++i)
      if (vertices[i] == label) return i;
    throw InputError("unknown vertex '" + label + "'");
  }
  int arrow_index(const std::string& name) const {
    for (int i = 0; i < num_arrows(); ++i)
      if (arrows[i].name == name) return i;
    throw InputError("unknown arrow '" + name + "'");
  }

  void validate() const {
    check(!vertices.empty(), "quiver needs at least one vertex");
    for (int i = 0; i < num_vertices(); ++i)
      for (int j = i + 1; j < num_vertices(); ++j)
        if (vertices[i] == vertices[j]) throw InputError("duplicate vertex label '" + vertices[i] + "'");
    for (int i = 0; i < num_arrows(); ++i) {
      const Arrow& a = arrows[i];
      if (a.source < 0 || a.source >= num_vertices() || a.target < 0 || a.target >= num_vertices())
        throw InputError("arrow '" + a.name + "' has an endpoint outside the vertex set");
      for (int j = i + 1; j < num_arrows(); ++j)
        if (arrows[j].name == a.name) throw InputError("duplicate arrow name '" + a.name + "'");
    }
  }

  Quiver reversed() const {
    Quiver q = *this;
    for (Arrow& a : q.arrows) std::swap(a.source, a.target);
    return q;
  }
};

// A path: its start vertex plus the arrow sequence in traversal order.
struct Path {
  int source = -1;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }
  auto operator<=>(const Path&) const = default;
};

inline int path_target(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.source : q.arrows[p.arrows.back()].target;
}

inline bool path_composable(const Quiver& q, const Path& a, const Path& b) {
  return path_target(q, a) == b.source;
}

inline Path path_concat(const Quiver& q, const Path& a, const Path& b) {
  check(path_composable(q, a, b), "composing non-composable paths");
  Path r = a;
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

inline void validate_path(const Quiver& q, const Path& p) {
  check(p.source >= 0 && p.source < q.num_vertices(), "path source out of range");
  int at = p.source;
  for (int a : p.arrows) {
    check(a >= 0 && a < q.num_arrows(), "path arrow out of range");
    if (q.arrows[a].source != at) throw InputError("path arrows are not composable");
    at = q.arrows[a].target;
  }
}

// Length-lexicographic order; the arrow order is the declaration order.
inline bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.source < b.source;
}

inline std::string path_str(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e_" + q.vertices[p.source];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

template <class F>
struct PathTerm {
  typename F::Elem coeff;
  Path path;
};

// Sorted (descending in path order), zero-coefficient free.
template <class F>
using PathCombo = std::vector<PathTerm<F>>;

template <class F>
PathCombo<F> combo_normalize(const F& f, PathCombo<F> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const PathTerm<F>& a, const PathTerm<F>& b) { return path_less(b.path, a.path); });
  PathCombo<F> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().path == t.path)
      out.back().coeff = f.add(out.back().coeff, t.coeff);
    else
      out.push_back(t);
    if (!out.empty() && f.is_zero(out.back().coeff)) out.pop_back();
  }
  // a merge may zero an earlier term; renormalize defensively
  for (std::size_t i = 0; i < out.size();) {
    if (f.is_zero(out[i].coeff))
      out.erase(out.begin() + i);
    else
      ++i;
  }
  return out;
}

template <class F>
PathCombo<F> combo_add(const F& f, const PathCombo<F>& a, const PathCombo<F>& b) {
  PathCombo<F> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return combo_normalize(f, std::move(r));
}

template <class F>
PathCombo<F> combo_scale(const F& f, const PathCombo<F>& a, const typename F::Elem& c) {
  if (f.is_zero(c)) return {};
  PathCombo<F> r = a;
  for (auto& t : r) t.coeff = f.mul(t.coeff, c);
  return r;
}

template <class F>
struct Relation {
  PathCombo<F> combo;
};

// ---------------------------------------------------------------------------
// Rewriting

template <class F>
struct RewriteRule {
  Path lead;          // monic leading word, the largest monomial
  PathCombo<F> rhs;   // lead rewrites to rhs; every rhs word is < lead
};

template <class F>
class RewriteSystem {
 public:
  using K = typename F::Elem;

  RewriteSystem(F field, Quiver quiver, int max_lead_len)
      : field_(field), quiver_(std::move(quiver)), max_lead_len_(max_lead_len) {}

  const std::vector<RewriteRule<F>>& rules() const { return rules_; }

  // Position of the first rule whose lead occurs in p at the given offset;
  // returns {rule, pos} for the leftmost position, lowest rule index.
  struct Occurrence {
    int rule = -1;
    std::size_t pos = 0;
  };

  std::vector<Occurrence> occurrences(const Path& p) const {
    std::vector<Occurrence> occ;
    for (std::size_t pos = 0; pos < p.length(); ++pos)
      for (int r = 0; r < static_cast<int>(rules_.size()); ++r) {
        const Path& lead = rules_[r].lead;
        if (lead.length() == 0 || pos + lead.length() > p.length()) continue;
        if (std::equal(lead.arrows.begin(), lead.arrows.end(), p.arrows.begin() + pos))
          occ.push_back({r, pos});
      }
    return occ;
  }

  bool reducible(const Path& p) const { return !occurrences(p).empty(); }

  // Replace the occurrence of rules_[o.rule].lead at o.pos inside p.
  PathCombo<F> rewrite_at(const Path& p, const Occurrence& o) const {
    const RewriteRule<F>& rule = rules_[o.rule];
    Path prefix{p.source, std::vector<int>(p.arrows.begin(), p.arrows.begin() + o.pos)};
    std::size_t tail_start = o.pos + rule.lead.length();
    PathCombo<F> out;
    for (const PathTerm<F>& t : rule.rhs) {
      Path w = prefix;
      w.arrows.insert(w.arrows.end(), t.path.arrows.begin(), t.path.arrows.end());
      w.arrows.insert(w.arrows.end(), p.arrows.begin() + tail_start, p.arrows.end());
      out.push_back({t.coeff, w});
    }
    return combo_normalize(field_, std::move(out));
  }

  // Normal form; deterministic strategy (largest term, leftmost occurrence,
  // lowest rule).  Terminates since every rewrite decreases length-lex order.
  PathCombo<F> reduce(PathCombo<F> combo) const {
    return reduce_impl(std::move(combo), nullptr);
  }
  // Same normal form must result for any strategy once the system is
  // confluent; exercised by the property tests.
  PathCombo<F> reduce_random(PathCombo<F> combo, std::mt19937_64& rng) const {
    return reduce_impl(std::move(combo), &rng);
  }

  PathCombo<F> reduce_path(const Path& p) const {
    return reduce(PathCombo<F>{{field_.one(), p}});
  }

  // Returns false if the rule was already implied (reduces to zero).
  bool add_rule(PathCombo<F> combo) {
    combo = reduce(std::move(combo));
    if (combo.empty()) return false;
    // leading term is the first (descending order)
    PathTerm<F> lead = combo.front();
    check(lead.path.length() >= 2, "rewrite rule with short lead; input not admissible");
    if (static_cast<int>(lead.path.length()) > max_lead_len_)
      throw InputError("rewriting completion exceeded the path length bound; raise max_path_length");
    K inv = field_.inv(lead.coeff);
    PathCombo<F> rhs(combo.begin() + 1, combo.end());
    rhs = combo_scale(field_, rhs, field_.neg(inv));
    rules_.push_back({lead.path, rhs});
    check(rules_.size() < 20000, "rewriting completion generated too many rules");
    return true;
  }

  // Knuth-Bendix completion: resolve all overlap and containment ambiguities.
  void complete() {
    std::size_t i = 0, j = 0;
    // process pairs (i, j) for all i, j below the current rule count; new
    // rules extend the range and are paired as well
    std::vector<std::pair<int, int>> queue;
    auto enqueue_upto = [&](std::size_t n) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (a >= i || b >= j) queue.emplace_back(static_cast<int>(a), static_cast<int>(b));
      i = j = n;
    };
    enqueue_upto(rules_.size());
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      for (PathCombo<F>& s : critical_pairs(a, b))
        if (add_rule(std::move(s))) enqueue_upto(rules_.size());
    }
  }

 private:
  PathCombo<F> reduce_impl(PathCombo<F> combo, std::mt19937_64* rng) const {
    combo = combo_normalize(field_, std::move(combo));
    while (true) {
      struct Hit {
        std::size_t term;
        Occurrence occ;
      };
      std::vector<Hit> hits;
      for (std::size_t t = 0; t < combo.size(); ++t) {
        for (const Occurrence& o : occurrences(combo[t].path)) {
          hits.push_back({t, o});
          if (!rng) break;  // deterministic: first occurrence of first reducible term
        }
        if (!rng && !hits.empty()) break;
      }
      if (hits.empty()) return combo;
      Hit h = hits[0];
      if (rng) h = hits[(*rng)() % hits.size()];
      PathCombo<F> replaced = combo_scale(field_, rewrite_at(combo[h.term].path, h.occ), combo[h.term].coeff);
      combo.erase(combo.begin() + h.term);
      combo = combo_add(field_, combo, replaced);
    }
  }

  // S-polynomials from overlaps (suffix of lead_a = prefix of lead_b) and
  // containments (lead_b inside lead_a).
  std::vector<PathCombo<F>> critical_pairs(int a, int b) const {
    std::vector<PathCombo<F>> out;
    const Path& la = rules_[a].lead;
    const Path& lb = rules_[b].lead;
    // overlap: la = u x, lb = x v with 1 <= |x| < min(|la|, |lb|)
    for (std::size_t k = 1; k < std::min(la.length(), lb.length()); ++k) {
      if (!std::equal(la.arrows.end() - k, la.arrows.end(), lb.arrows.begin())) continue;
      Path w = la;
      w.arrows.insert(w.arrows.end(), lb.arrows.begin() + k, lb.arrows.end());
      // reduce w two ways
      PathCombo<F> via_a = rewrite_at(w, {a, 0});
      PathCombo<F> via_b = rewrite_at(w, {b, w.length() - lb.length()});
      out.push_back(combo_add(field_, via_a, combo_scale(field_, via_b, field_.neg(field_.one()))));
    }
    // containment: lb occurs inside la (excluding the identical case)
    if (lb.length() <= la.length()) {
      for (std::size_t pos = 0; pos + lb.length() <= la.length(); ++pos) {
        if (a == b && pos == 0 && la.length() == lb.length()) continue;
        if (!std::equal(lb.arrows.begin(), lb.arrows.end(), la.arrows.begin() + pos)) continue;
        PathCombo<F> via_a = rewrite_at(la, {a, 0});
        PathCombo<F> via_b = rewrite_at(la, {b, pos});
        out.push_back(combo_add(field_, via_a, combo_scale(field_, via_b, field_.neg(field_.one()))));
      }
    }
    return out;
  }

  F field_;
  Quiver quiver_;
  int max_lead_len_;
  std::vector<RewriteRule<F>> rules_;
};

// ---------------------------------------------------------------------------
// The algebra

template <class F>
using SparseVec = std::vector<std::pair<int, typename F::Elem>>;  // sorted by index

// Thrown when a modular field is too small for the radical computations the
// pipeline relies on; callers are expected to retry over Q.
struct FieldTooSmallError : Error {
  std::int64_t dim;
  FieldTooSmallError(std::int64_t d, const std::string& msg) : Error(msg), dim(d) {}
};

template <class F>
class Algebra {
 public:
  using K = typename F::Elem;

  Algebra(F field, Quiver quiver, std::vector<Relation<F>> relations, int max_len,
          RewriteSystem<F> rs, std::vector<Path> basis)
      : field_(field),
        quiver_(std::move(quiver)),
        relations_(std::move(relations)),
        max_len_(max_len),
        rs_(std::move(rs)),
        basis_(std::move(basis)) {
    int n = quiver_.num_vertices();
    trivial_.assign(n, -1);
    by_pair_.assign(n, std::vector<std::vector<int>>(n));
    for (int b = 0; b < dim(); ++b) {
      const Path& p = basis_[b];
      basis_index_[p] = b;
      src_.push_back(p.source);
      tgt_.push_back(path_target(quiver_, p));
      if (p.trivial()) trivial_[p.source] = b;
      by_pair_[src_[b]][tgt_[b]].push_back(b);
    }
    for (int v = 0; v < n; ++v) check(trivial_[v] >= 0, "missing trivial path in basis");
    build_table();
  }

  const F& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation<F>>& relations() const { return relations_; }
  int max_len() const { return max_len_; }
  const RewriteSystem<F>& rewrite_system() const { return rs_; }

  int dim() const { return static_cast<int>(basis_.size()); }
  int num_vertices() const { return quiver_.num_vertices(); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int b) const { return basis_[b]; }
  int basis_source(int b) const { return src_[b]; }
  int basis_target(int b) const { return tgt_[b]; }
  int trivial_idx(int v) const { return trivial_[v]; }
  const std::vector<int>& basis_at(int i, int j) const { return by_pair_[i][j]; }

  int basis_index(const Path& p) const {
    auto it = basis_index_.find(p);
    return it == basis_index_.end() ? -1 : it->second;
  }

  // Arrows are irreducible words (relation leads have length >= 2).
  int arrow_idx(int a) const {
    int b = basis_index(Path{quiver_.arrows[a].source, {a}});
    check(b >= 0, "arrow missing from basis");
    return b;
  }

  // Normal form of an arbitrary path combination, as a sparse algebra element.
  SparseVec<F> normal_form(const PathCombo<F>& combo) const {
    PathCombo<F> nf = rs_.reduce(combo);
    SparseVec<F> out;
    for (const PathTerm<F>& t : nf) {
      int b = basis_index(t.path);
      check(b >= 0, "normal form contains a non-basis word");
      out.emplace_back(b, t.coeff);
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return out;
  }

  // Product of basis elements, from the precomputed table.
  const SparseVec<F>& table(int a, int b) const { return table_[a * dim() + b]; }

  SparseVec<F> multiply(const SparseVec<F>& x, const SparseVec<F>& y) const {
    std::map<int, K> acc;
    for (const auto& [i, ci] : x)
      for (const auto& [j, cj] : y)
        for (const auto& [k, ck] : table(i, j)) {
          K add = field_.mul(field_.mul(ci, cj), ck);
          auto it = acc.find(k);
          if (it == acc.end())
            acc.emplace(k, add);
          else
            it->second = field_.add(it->second, add);
        }
    SparseVec<F> out;
    for (auto& [k, c] : acc)
      if (!field_.is_zero(c)) out.emplace_back(k, c);
    return out;
  }

 private:
  void build_table() {
    table_.assign(static_cast<std::size_t>(dim()) * dim(), {});
    for (int a = 0; a < dim(); ++a)
      for (int b = 0; b < dim(); ++b) {
        if (tgt_[a] != src_[b]) continue;
        Path p = path_concat(quiver_, basis_[a], basis_[b]);
        PathCombo<F> nf = rs_.reduce(PathCombo<F>{{field_.one(), p}});
        SparseVec<F>& cell = table_[a * dim() + b];
        for (const PathTerm<F>& t : nf) {
          int idx = basis_index(t.path);
          check(idx >= 0, "product normal form outside basis");
          cell.emplace_back(idx, t.coeff);
        }
        std::sort(cell.begin(), cell.end(), [](auto& x, auto& y) { return x.first < y.first; });
      }
  }

  F field_;
  Quiver quiver_;
  std::vector<Relation<F>> relations_;
  int max_len_;
  RewriteSystem<F> rs_;
  std::vector<Path> basis_;
  std::map<Path, int> basis_index_;
  std::vector<int> src_, tgt_, trivial_;
  std::vector<std::vector<std::vector<int>>> by_pair_;
  std::vector<SparseVec<F>> table_;
};

template <class F>
using AlgebraPtr = std::shared_ptr<const Algebra<F>>;

template <class F>
void validate_relation(const Quiver& q, const F& f, const Relation<F>& r) {
  check(!r.combo.empty(), "empty relation");
  int s = -1, t = -1;
  for (const PathTerm<F>& term : r.combo) {
    validate_path(q, term.path);
    if (term.path.length() < 2)
      throw InputError("relation contains a path of length < 2; the ideal must be admissible");
    if (f.is_zero(term.coeff)) throw InputError("relation has a zero coefficient term");
    int ts = term.path.source, tt = path_target(q, term.path);
    if (s == -1) {
      s = ts;
      t = tt;
    } else if (ts != s || tt != t) {
      throw InputError("relation mixes non-parallel paths");
    }
  }
}

template <class F>
AlgebraPtr<F> build_algebra(F field, Quiver quiver, std::vector<Relation<F>> relations,
                            int max_len = 12) {
  quiver.validate();
  check(max_len >= 2, "max path length bound must be at least 2");
  std::vector<Relation<F>> kept;
  bool homogeneous = true;
  for (Relation<F>& r : relations) {
    r.combo = combo_normalize(field, std::move(r.combo));
    if (r.combo.empty()) continue;  // relation was trivially zero
    validate_relation(quiver, field, r);
    for (const PathTerm<F>& t : r.combo)
      homogeneous = homogeneous && t.path.length() == r.combo.front().path.length();
    kept.push_back(r);
  }

  RewriteSystem<F> rs(field, quiver, max_len);
  for (const Relation<F>& r : kept) rs.add_rule(r.combo);
  rs.complete();

  // Enumerate irreducible words breadth-first.  A subword of an irreducible
  // word is irreducible, so extending by single arrows finds everything.
  std::vector<Path> basis;
  std::vector<Path> frontier;  // irreducible words of one common length
  for (int v = 0; v < quiver.num_vertices(); ++v) frontier.push_back(Path{v, {}});
  while (!frontier.empty()) {
    if (static_cast<int>(frontier.front().length()) >= max_len)
      throw InputError(
          "algebra is not finite dimensional below the path length bound " +
          std::to_string(max_len) + "; an irreducible word of that length exists");
    std::vector<Path> next;
    for (const Path& p : frontier) {
      basis.push_back(p);
      check(basis.size() <= 200000, "path enumeration exceeded the configured cap");
      int at = path_target(quiver, p);
      for (int a = 0; a < quiver.num_arrows(); ++a) {
        if (quiver.arrows[a].source != at) continue;
        Path q = p;
        q.arrows.push_back(a);
        if (!rs.reducible(q)) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }

  if (!homogeneous) {
    // With length-inhomogeneous relations a long path can have a nonzero
    // normal form even though no long word is irreducible.  Certify R^L = 0
    // in the quotient by reducing every length-L path explicitly.
    std::vector<Path> cur;
    for (int v = 0; v < quiver.num_vertices(); ++v) cur.push_back(Path{v, {}});
    for (int len = 0; len < max_len; ++len) {
      std::vector<Path> next;
      for (const Path& p : cur) {
        int at = path_target(quiver, p);
        for (int a = 0; a < quiver.num_arrows(); ++a)
          if (quiver.arrows[a].source == at) {
            Path q = p;
            q.arrows.push_back(a);
            next.push_back(q);
          }
      }
      check(next.size() <= 500000, "path enumeration exceeded the configured cap");
      cur = std::move(next);
    }
    for (const Path& p : cur)
      if (!rs.reduce_path(p).empty())
        throw InputError("algebra is not finite dimensional below the path length bound " +
                         std::to_string(max_len) + ": a path of that length is nonzero");
  }

  std::sort(basis.begin(), basis.end(), path_less);
  auto alg = std::make_shared<Algebra<F>>(field, std::move(quiver), std::move(kept), max_len,
                                          std::move(rs), std::move(basis));
  if (field.characteristic() > 0) {
    std::int64_t d = alg->dim();
    if (field.characteristic() <= d * d)
      throw FieldTooSmallError(d, "field modulus " + std::to_string(field.characteristic()) +
                                      " does not exceed dim^2 = " + std::to_string(d * d) +
                                      "; use a larger prime or the rational field");
  }
  return alg;
}

// Opposite algebra: arrows reversed, relation words reversed.
template <class F>
AlgebraPtr<F> opposite_algebra(const Algebra<F>& A) {
  Quiver q = A.quiver().reversed();
  std::vector<Relation<F>> rels;
  for (const Relation<F>& r : A.relations()) {
    Relation<F> rr;
    for (const PathTerm<F>& t : r.combo) {
      Path p;
      p.source = path_target(A.quiver(), t.path);
      p.arrows.assign(t.path.arrows.rbegin(), t.path.arrows.rend());
      rr.combo.push_back({t.coeff, p});
    }
    rels.push_back(rr);
  }
  return build_algebra(A.field(), q, rels, A.max_len());
}

// Quotient by the two-sided ideal generated by the sum of the trivial
// idempotents at the given vertices.  The result is the bound quiver algebra
// on the complementary full subquiver, with relations obtained by deleting
// every monomial whose path meets a removed vertex.
template <class F>
struct VertexQuotient {
  AlgebraPtr<F> algebra;               // null iff zero_algebra
  bool zero_algebra = false;
  std::vector<int> kept_vertices;      // old vertex indices, in order
};

template <class F>
VertexQuotient<F> quotient_by_vertices(const Algebra<F>& A, const std::vector<int>& removed) {
  const Quiver& q = A.quiver();
  std::vector<bool> gone(q.num_vertices(), false);
  for (int v : removed) {
    check(v >= 0 && v < q.num_vertices(), "quotient vertex out of range");
    gone[v] = true;
  }
  VertexQuotient<F> out;
  std::vector<int> new_index(q.num_vertices(), -1);
  Quiver sub;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (!gone[v]) {
      new_index[v] = sub.num_vertices();
      sub.vertices.push_back(q.vertices[v]);
      out.kept_vertices.push_back(v);
    }
  if (sub.vertices.empty()) {
    out.zero_algebra = true;
    return out;
  }
  std::vector<int> new_arrow(q.num_arrows(), -1);
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrows[a];
    if (gone[ar.source] || gone[ar.target]) continue;
    new_arrow[a] = sub.num_arrows();
    sub.arrows.push_back({ar.name, new_index[ar.source], new_index[ar.target]});
  }
  auto path_survives = [&](const Path& p) {
    if (gone[p.source]) return false;
    for (int a : p.arrows)
      if (new_arrow[a] < 0) return false;
    return true;
  };
  std::vector<Relation<F>> rels;
  for (const Relation<F>& r : A.relations()) {
    Relation<F> rr;
    for (const PathTerm<F>& t : r.combo) {
      if (!path_survives(t.path)) continue;
      Path p;
      p.source = new_index[t.path.source];
      for (int a : t.path.arrows) p.arrows.push_back(new_arrow[a]);
      rr.combo.push_back({t.coeff, p});
    }
    if (!rr.combo.empty()) rels.push_back(rr);
  }
  out.algebra = build_algebra(A.field(), sub, rels, A.max_len());
  return out;
}

// ---------------------------------------------------------------------------
// Path expressions: "a*c - b*d", "2*a*b + c*c", used by tests and the CLI.

template <class F>
PathCombo<F> parse_path_expr(const Quiver& q, const F& f, const std::string& text) {
  PathCombo<F> combo;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_token = [&]() -> std::string {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    if (start == i) throw InputError("expected a name or number in '" + text + "'");
    return text.substr(start, i - start);
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) {
      if (first) throw InputError("empty path expression");
      break;
    }
    typename F::Elem sign = f.one();
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sign = f.neg(f.one());
      ++i;
    } else if (!first) {
      throw InputError("expected '+' or '-' in '" + text + "'");
    }
    first = false;
    // term: factors separated by '*'; an integer factor is a coefficient
    typename F::Elem coeff = sign;
    std::vector<int> arrows;
    bool any_factor = false;
    while (true) {
      std::string tok = parse_token();
      any_factor = true;
      bool numeric = !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      });
      bool is_arrow = false;
      for (const auto& a : q.arrows) is_arrow = is_arrow || a.name == tok;
      if (numeric && !is_arrow) {
        coeff = f.mul(coeff, f.from_long(std::stoll(tok)));
      } else {
        arrows.push_back(q.arrow_index(tok));
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    check(any_factor, "empty term in path expression");
    if (arrows.empty()) throw InputError("relation term without any arrow in '" + text + "'");
    Path p;
    p.source = q.arrows[arrows[0]].source;
    p.arrows = arrows;
    validate_path(q, p);
    combo.push_back({coeff, p});
  }
  return combo_normalize(f, std::move(combo));
}

}  // namespace bqa
