#pragma once
// The bundled example algebras, constructed directly; the .alg files under
// fixtures/ carry the same presentations for the CLI.
#include <random>
#include <string>
#include <vector>

#include "bqa/quiver.hpp"
#include "bqa/rep.hpp"

namespace fixtures {

using bqa::AlgebraPtr;
using bqa::Quiver;
using bqa::Relation;

template <class F>
AlgebraPtr<F> build(const F& f, const std::vector<std::string>& verts,
                    const std::vector<std::array<std::string, 3>>& arrows,
                    const std::vector<std::string>& rels, int L = 12) {
  Quiver q;
  q.vertices = verts;
  for (const auto& [name, s, t] : arrows) q.arrows.push_back({name, -1, -1});
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    q.arrows[i].source = q.vertex_index(arrows[i][1]);
    q.arrows[i].target = q.vertex_index(arrows[i][2]);
  }
  std::vector<Relation<F>> rr;
  for (const std::string& r : rels) rr.push_back({bqa::parse_path_expr(q, f, r)});
  return bqa::build_algebra(f, q, rr, L);
}

// Five vertices, commuting square 1 -> {2,3} -> 4 with a tail 4 -> 5 -> 2.
template <class F>
AlgebraPtr<F> e1(const F& f) {
  return build(f, {"1", "2", "3", "4", "5"},
               {{{"a", "1", "2"}, {"b", "1", "3"}, {"c", "2", "4"}, {"d", "3", "4"},
                 {"e", "4", "5"}, {"g", "5", "2"}}},
               {"a*c - b*d", "e*g", "g*c"});
}

// Four vertices, cycle 1 -> 4 -> 2 -> 1 plus 3 -> 2; all 2-cycles die.
template <class F>
AlgebraPtr<F> e2(const F& f) {
  return build(f, {"1", "2", "3", "4"},
               {{{"a", "2", "1"}, {"b", "3", "2"}, {"c", "1", "4"}, {"d", "4", "2"}}},
               {"b*a", "c*d", "d*a"});
}

// Linear quiver with loops; u_i steps along, l_i loops, n >= 4.
template <class F>
AlgebraPtr<F> e3(const F& f, int n) {
  std::vector<std::string> verts;
  for (int i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
  std::vector<std::array<std::string, 3>> arrows;
  for (int i = 1; i <= n - 2; ++i)
    arrows.push_back({"u" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  arrows.push_back({"u" + std::to_string(n - 1), std::to_string(n), std::to_string(n - 1)});
  for (int i = 1; i <= n; ++i)
    arrows.push_back({"l" + std::to_string(i), std::to_string(i), std::to_string(i)});
  std::vector<std::string> rels;
  for (int i = 1; i <= n - 3; ++i)
    rels.push_back("u" + std::to_string(i) + "*u" + std::to_string(i + 1));
  for (int i = 1; i <= n - 2; ++i)
    rels.push_back("l" + std::to_string(i) + "*u" + std::to_string(i) + " - u" + std::to_string(i) +
                   "*l" + std::to_string(i + 1));
  for (int i = 1; i <= n; ++i) {
    std::string l = "l" + std::to_string(i);
    rels.push_back(l + "*" + l);
  }
  rels.push_back("l" + std::to_string(n) + "*u" + std::to_string(n - 1) + " - u" +
                 std::to_string(n - 1) + "*l" + std::to_string(n - 1));
  return build(f, verts, arrows, rels);
}

// The loop-free quotient of e3.
template <class F>
AlgebraPtr<F> e3p(const F& f, int n) {
  std::vector<std::string> verts;
  for (int i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
  std::vector<std::array<std::string, 3>> arrows;
  for (int i = 1; i <= n - 2; ++i)
    arrows.push_back({"u" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  arrows.push_back({"u" + std::to_string(n - 1), std::to_string(n), std::to_string(n - 1)});
  std::vector<std::string> rels;
  for (int i = 1; i <= n - 3; ++i)
    rels.push_back("u" + std::to_string(i) + "*u" + std::to_string(i + 1));
  return build(f, verts, arrows, rels);
}

// Commutative square 1 -> {2,3} -> 4.
template <class F>
AlgebraPtr<F> e4(const F& f) {
  return build(f, {"1", "2", "3", "4"},
               {{{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}}},
               {"a*b - c*d"});
}

// Linear A3, both orientations.
template <class F>
AlgebraPtr<F> a3(const F& f) {
  return build(f, {"1", "2", "3"}, {{{"a", "1", "2"}, {"b", "2", "3"}}}, {});
}
template <class F>
AlgebraPtr<F> a3rev(const F& f) {
  return build(f, {"1", "2", "3"}, {{{"a", "3", "2"}, {"b", "2", "1"}}}, {});
}

// Endomorphism algebra of k[x]/(x^2) plus its simple module: two vertices,
// maps back and forth, one composite vanishing.
template <class F>
AlgebraPtr<F> aus_kx2(const F& f) {
  return build(f, {"1", "2"}, {{{"j", "1", "2"}, {"p", "2", "1"}}}, {"j*p"});
}

// Self-injective commutative local algebra k[x]/(x^3).
template <class F>
AlgebraPtr<F> nak3(const F& f) {
  return build(f, {"1"}, {{{"x", "1", "1"}}}, {"x*x*x"});
}

// Modules attached to the five-vertex example: X = Cok(P(2) -> P(1)+P(5)),
// and the quotients of P(1) by the traces of P(3) resp. P(4).
template <class F>
bqa::Rep<F> e1_x(AlgebraPtr<F> A) {
  using namespace bqa;
  Rep<F> p1 = proj_rep(A, 0), p2 = proj_rep(A, 1), p5 = proj_rep(A, 4);
  std::vector<Rep<F>> parts{p1, p5};
  Rep<F> s = direct_sum(parts);
  auto h1 = hom_space(p2, p1);
  auto h2 = hom_space(p2, p5);
  bqa::check(h1.size() == 1 && h2.size() == 1, "unexpected Hom dimensions");
  Morphism<F> f = morphism_add(compose(h1[0], summand_inclusion(parts, s, 0)),
                               compose(h2[0], summand_inclusion(parts, s, 1)));
  return cokernel(f).rep;
}

template <class F>
bqa::Rep<F> quotient_by_trace(const bqa::Rep<F>& q, const bqa::Rep<F>& m) {
  return bqa::quot_from_rows(m, bqa::trace(q, m).map.mats).rep;
}

// P(1)/P(3)
template <class F>
bqa::Rep<F> e1_p1_mod_p3(AlgebraPtr<F> A) {
  return quotient_by_trace(bqa::proj_rep(A, 2), bqa::proj_rep(A, 0));
}

// P(1)/P(4)
template <class F>
bqa::Rep<F> e1_p1_mod_p4(AlgebraPtr<F> A) {
  return quotient_by_trace(bqa::proj_rep(A, 3), bqa::proj_rep(A, 0));
}

// Q = P(1) + X + P(1)/P(3) + P(5)
template <class F>
bqa::Rep<F> e1_q(AlgebraPtr<F> A) {
  return bqa::direct_sum<F>(
      {bqa::proj_rep(A, 0), e1_x(A), e1_p1_mod_p3(A), bqa::proj_rep(A, 4)});
}

template <class F>
bqa::Mat<F> random_invertible(const F& f, int n, std::mt19937_64& rng) {
  while (true) {
    bqa::Mat<F> m(f, n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        m.at(r, c) = f.from_long(static_cast<std::int64_t>(rng() % 19) - 9);
    if (bqa::inverse(m)) return m;
  }
}

// Base change by random invertible matrices: an isomorphic copy that hides
// any visible block structure.
template <class F>
bqa::Rep<F> scramble(const bqa::Rep<F>& m, std::mt19937_64& rng) {
  const F& f = m.field();
  const bqa::Quiver& q = m.alg->quiver();
  std::vector<bqa::Mat<F>> g, ginv;
  for (int d : m.dims) {
    bqa::Mat<F> mat = random_invertible(f, d, rng);
    g.push_back(mat);
    ginv.push_back(*bqa::inverse(mat));
  }
  bqa::Rep<F> out{m.alg, m.dims, {}};
  for (int a = 0; a < q.num_arrows(); ++a)
    out.arrow_maps.push_back(ginv[q.arrows[a].source] * m.arrow_maps[a] * g[q.arrows[a].target]);
  bqa::validate_rep(out);
  return out;
}

}  // namespace fixtures
