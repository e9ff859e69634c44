#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bqa/rep.hpp"
#include "fixtures.hpp"

using namespace bqa;

namespace {

const FpField F(32003);

// Independent Hom-dimension oracle: assemble the naturality constraints as
// rows of one big system and use rank-nullity, bypassing hom_space's layout.
int hom_dim_oracle(const Rep<FpField>& m, const Rep<FpField>& n) {
  const Quiver& q = m.alg->quiver();
  std::vector<std::size_t> off(m.num_vertices() + 1, 0);
  for (int i = 0; i < m.num_vertices(); ++i)
    off[i + 1] = off[i] + static_cast<std::size_t>(m.dims[i]) * n.dims[i];
  std::vector<std::vector<FpElem>> rows;
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrows[a].source, t = q.arrows[a].target;
    for (int r = 0; r < m.dims[s]; ++r)
      for (int c = 0; c < n.dims[t]; ++c) {
        std::vector<FpElem> row(off.back(), F.zero());
        for (int k = 0; k < m.dims[t]; ++k)
          row[off[t] + static_cast<std::size_t>(k) * n.dims[t] + c] =
              F.add(row[off[t] + static_cast<std::size_t>(k) * n.dims[t] + c],
                    m.arrow_maps[a].at(r, k));
        for (int k = 0; k < n.dims[s]; ++k)
          row[off[s] + static_cast<std::size_t>(r) * n.dims[s] + k] =
              F.sub(row[off[s] + static_cast<std::size_t>(r) * n.dims[s] + k],
                    n.arrow_maps[a].at(k, c));
        rows.push_back(row);
      }
  }
  Mat<FpField> sys(F, rows.size(), off.back());
  for (std::size_t i = 0; i < rows.size(); ++i) sys.set_row(i, rows[i]);
  return static_cast<int>(off.back() - rank(sys));
}

}  // namespace

TEST_CASE("projectives, injectives, simples satisfy the relations") {
  for (auto A : {fixtures::e1(F), fixtures::e2(F), fixtures::e3(F, 4), fixtures::e4(F),
                 fixtures::aus_kx2(F), fixtures::nak3(F)})
    for (int i = 0; i < A->num_vertices(); ++i) {
      validate_rep(proj_rep(A, i));
      validate_rep(inj_rep(A, i));
      validate_rep(simple_rep(A, i));
    }
}

TEST_CASE("known dimension vectors") {
  auto a3 = fixtures::a3(F);
  CHECK(proj_rep(a3, 0).dims == std::vector<int>{1, 1, 1});
  auto e4 = fixtures::e4(F);
  CHECK(proj_rep(e4, 0).dims == std::vector<int>{1, 1, 1, 1});
  CHECK(inj_rep(e4, 3).dims == std::vector<int>{1, 1, 1, 1});
  auto e1 = fixtures::e1(F);
  CHECK(inj_rep(e1, 1).dims == std::vector<int>{1, 1, 0, 0, 1});
}

TEST_CASE("Yoneda: Hom(P(i),M) and Hom(M,I(i)) read off the dimension vector") {
  for (auto A : {fixtures::e1(F), fixtures::e2(F), fixtures::e4(F), fixtures::aus_kx2(F)}) {
    std::vector<Rep<FpField>> ms;
    for (int i = 0; i < A->num_vertices(); ++i) {
      ms.push_back(proj_rep(A, i));
      ms.push_back(inj_rep(A, i));
      ms.push_back(simple_rep(A, i));
    }
    for (const auto& m : ms)
      for (int i = 0; i < A->num_vertices(); ++i) {
        CHECK(hom_dim(proj_rep(A, i), m) == m.dims[i]);
        CHECK(hom_dim(m, inj_rep(A, i)) == m.dims[i]);
      }
    for (int i = 0; i < A->num_vertices(); ++i)
      CHECK(hom_dim(simple_rep(A, i), simple_rep(A, i)) == 1);
  }
}

TEST_CASE("hom dimensions match the row-assembled oracle") {
  auto A = fixtures::e1(F);
  std::vector<Rep<FpField>> ms;
  for (int i = 0; i < A->num_vertices(); ++i) {
    ms.push_back(proj_rep(A, i));
    ms.push_back(inj_rep(A, i));
  }
  for (const auto& m : ms)
    for (const auto& n : ms) {
      int d = hom_dim(m, n);
      CHECK(d == hom_dim_oracle(m, n));
      for (const auto& h : hom_space(m, n)) CHECK(is_natural(h));
    }
}

TEST_CASE("kernel, image, cokernel") {
  auto A = fixtures::e1(F);
  Rep<FpField> p1 = proj_rep(A, 0), p2 = proj_rep(A, 1), p5 = proj_rep(A, 4);
  Rep<FpField> s = direct_sum<FpField>({p1, p5});

  CHECK(kernel(identity_morphism(p1)).rep.is_zero());
  CHECK(cokernel(zero_morphism(zero_rep(A), p1)).rep.dims == p1.dims);

  // the map P(2) -> P(1)+P(5) combining one generator of each Hom space
  auto h1 = hom_space(p2, p1);
  auto h2 = hom_space(p2, p5);
  REQUIRE(h1.size() == 1);
  REQUIRE(h2.size() == 1);
  std::vector<Rep<FpField>> parts{p1, p5};
  Morphism<FpField> f = morphism_add(compose(h1[0], summand_inclusion(parts, s, 0)),
                                     compose(h2[0], summand_inclusion(parts, s, 1)));
  REQUIRE(is_natural(f));
  CHECK(is_mono(f));
  RepWithMap<FpField> cok = cokernel(f);
  CHECK(cok.rep.dims == std::vector<int>{1, 1, 1, 0, 1});
  validate_rep(cok.rep);

  // exactness: image(f) = kernel(cokernel projection), dims additive
  RepWithMap<FpField> im = image(f);
  RepWithMap<FpField> ker_of_proj = kernel(cok.map);
  CHECK(im.rep.dims == ker_of_proj.rep.dims);
  for (int i = 0; i < s.num_vertices(); ++i)
    CHECK(same_row_space(im.map.mats[i], ker_of_proj.map.mats[i]));
  for (int i = 0; i < s.num_vertices(); ++i)
    CHECK(im.rep.dims[i] + cok.rep.dims[i] == s.dims[i]);
}

TEST_CASE("top, radical, socle") {
  auto a3 = fixtures::a3(F);
  CHECK(radical(proj_rep(a3, 0)).rep.dims == std::vector<int>{0, 1, 1});
  for (auto A : {fixtures::e1(F), fixtures::e2(F), fixtures::e4(F)})
    for (int i = 0; i < A->num_vertices(); ++i) {
      CHECK(top(proj_rep(A, i)).rep.dims == simple_rep(A, i).dims);
      CHECK(socle(inj_rep(A, i)).rep.dims == simple_rep(A, i).dims);
      validate_rep(radical(proj_rep(A, i)).rep);
      validate_rep(top(proj_rep(A, i)).rep);
      validate_rep(socle(inj_rep(A, i)).rep);
    }
}

TEST_CASE("projective covers and injective hulls") {
  for (auto A : {fixtures::e1(F), fixtures::e2(F), fixtures::e4(F), fixtures::nak3(F)}) {
    for (int i = 0; i < A->num_vertices(); ++i) {
      CoverData<FpField> c = projective_cover(simple_rep(A, i));
      CHECK(c.map.src.dims == proj_rep(A, i).dims);
      CHECK(c.vertex_labels == std::vector<int>{i});
      CoverData<FpField> h = injective_hull(simple_rep(A, i));
      CHECK(h.map.tgt.dims == inj_rep(A, i).dims);
    }
    // cover of an injective: kernel must sit inside the radical of the source
    for (int i = 0; i < A->num_vertices(); ++i) {
      Rep<FpField> m = inj_rep(A, i);
      CoverData<FpField> c = projective_cover(m);
      CHECK(is_epi(c.map));
      RepWithMap<FpField> k = kernel(c.map);
      std::vector<Mat<FpField>> rad = radical_rows(c.map.src);
      for (int v = 0; v < m.num_vertices(); ++v)
        CHECK(rows_contained(k.map.mats[v], rad[v]));
    }
    // hull of a projective: image essential, i.e. socle multiplicities agree
    for (int i = 0; i < A->num_vertices(); ++i) {
      Rep<FpField> m = proj_rep(A, i);
      CoverData<FpField> h = injective_hull(m);
      CHECK(is_mono(h.map));
      CHECK(socle(h.map.tgt).rep.dims == socle(m).rep.dims);
    }
  }
}

TEST_CASE("projectivity and injectivity recognition") {
  auto A = fixtures::e1(F);
  for (int i = 0; i < A->num_vertices(); ++i) {
    CHECK(is_projective_rep(proj_rep(A, i)));
    CHECK(is_injective_rep(inj_rep(A, i)));
  }
  CHECK(!is_projective_rep(simple_rep(A, 0)));
  CHECK(is_injective_rep(simple_rep(A, 0)));  // nothing ends at vertex 1, so I(1) = S(1)
  CHECK(!is_injective_rep(simple_rep(A, 1)));
  auto aus = fixtures::aus_kx2(F);
  CHECK(is_injective_rep(proj_rep(aus, 1)));  // P(2) = I(2) here
}

TEST_CASE("duality is an exact involution") {
  auto A = fixtures::e1(F);
  auto op = opposite_algebra(*A);
  for (int i = 0; i < A->num_vertices(); ++i) {
    Rep<FpField> m = proj_rep(A, i);
    Rep<FpField> dd = dual_rep(dual_rep(m, op), A);
    CHECK(dd == m);
  }
  // mono <-> epi under D
  Rep<FpField> p2 = proj_rep(A, 1), p1 = proj_rep(A, 0);
  auto h = hom_space(p2, p1);
  REQUIRE(h.size() == 1);
  CHECK(is_mono(h[0]));
  CHECK(is_epi(dual_morphism(h[0], op)));
  CHECK(is_natural(dual_morphism(h[0], op)));
  // D swaps projectives and injectives
  for (int i = 0; i < A->num_vertices(); ++i) {
    Rep<FpField> d = dual_rep(proj_rep(A, i), op);
    CHECK(d.dims == inj_rep(op, i).dims);
    CHECK(is_injective_rep(d));
  }
}

TEST_CASE("nakayama sends P(i) to I(i) and rejects non-projectives") {
  for (auto A : {fixtures::e1(F), fixtures::e2(F), fixtures::e4(F), fixtures::aus_kx2(F)})
    for (int i = 0; i < A->num_vertices(); ++i)
      CHECK(nakayama(proj_rep(A, i)).dims == inj_rep(A, i).dims);
  auto A = fixtures::a3(F);
  CHECK_THROWS_AS(nakayama(simple_rep(A, 0)), Error);
  // Hom(P,T) and Hom(T,nu P) have the same dimension
  auto e1 = fixtures::e1(F);
  for (int i = 0; i < e1->num_vertices(); ++i)
    for (int j = 0; j < e1->num_vertices(); ++j) {
      Rep<FpField> p = proj_rep(e1, i), t = inj_rep(e1, j);
      CHECK(hom_dim(p, t) == hom_dim(t, nakayama(p)));
    }
}

TEST_CASE("trace submodules") {
  auto a3 = fixtures::a3(F);
  Rep<FpField> p1 = proj_rep(a3, 0);
  CHECK(trace(p1, p1).rep.dims == p1.dims);
  CHECK(trace(simple_rep(a3, 0), proj_rep(a3, 1)).rep.is_zero());
  CHECK(trace(simple_rep(a3, 2), p1).rep.dims == std::vector<int>{0, 0, 1});
  validate_rep(trace(simple_rep(a3, 2), p1).rep);
}

TEST_CASE("regular module sanity checks") {
  for (auto A : {fixtures::e1(F), fixtures::e2(F)}) {
    Rep<FpField> r = regular_rep(A);
    validate_rep(r);
    CHECK(r.total_dim() == A->dim());
    CHECK(top(r).rep.dims == std::vector<int>(A->num_vertices(), 1));
    CHECK(is_projective_rep(r));
  }
}
