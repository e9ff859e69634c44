#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bqa/classify.hpp"
#include "fixtures.hpp"

using namespace bqa;

namespace {
const FpField F(32003);

using R = Rep<FpField>;

std::vector<int> sorted_labels(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("canonical injective selection keeps the classes of projective dimension at most one") {
  auto N = fixtures::nak3(F);
  InjSelection<FpField> sn = canonical_injective_pd1(N, 8);
  CHECK(sn.labels == std::vector<int>{0});
  CHECK(is_projective_rep(sn.module));
  CHECK(sn.pds == std::vector<Extent>{Extent::finite(0)});

  auto A = fixtures::a3(F);
  InjSelection<FpField> sa = canonical_injective_pd1(A, 8);
  CHECK(sorted_labels(sa.labels) == std::vector<int>{0, 1, 2});
  CHECK(sa.pds == std::vector<Extent>{Extent::finite(1), Extent::finite(1), Extent::finite(0)});

  auto E4 = fixtures::e4(F);
  InjSelection<FpField> s4 = canonical_injective_pd1(E4, 8);
  CHECK(sorted_labels(s4.labels) == std::vector<int>{1, 2, 3});
  CHECK(s4.pds[0] == Extent::finite(2));

  auto T5 = fixtures::e3(F, 5);
  InjSelection<FpField> st = canonical_injective_pd1(T5, 12);
  CHECK(sorted_labels(st.labels) == std::vector<int>{1, 2, 3, 4});
  CHECK(st.pds[0] == Extent::finite(3));
  // Two of the selected classes are projective-injective; the two at the
  // junction end of the quiver are injective only.
  CHECK(are_isomorphic(inj_rep(T5, 1), proj_rep(T5, 0)));
  CHECK(are_isomorphic(inj_rep(T5, 2), proj_rep(T5, 1)));
  CHECK(!is_projective_rep(inj_rep(T5, 3)));
  CHECK(!is_projective_rep(inj_rep(T5, 4)));
}

TEST_CASE("the projective-injective part picks out the corner classes") {
  auto K = fixtures::aus_kx2(F);
  R pk = proj_injective_part(K);
  CHECK(are_isomorphic(pk, inj_rep(K, 1)));
  CHECK(are_isomorphic(pk, proj_rep(K, 1)));

  auto E4 = fixtures::e4(F);
  CHECK(are_isomorphic(proj_injective_part(E4), inj_rep(E4, 3)));

  auto A = fixtures::a3(F);
  CHECK(are_isomorphic(proj_injective_part(A), proj_rep(A, 0)));

  auto N = fixtures::nak3(F);
  CHECK(are_isomorphic(proj_injective_part(N), regular_rep(N)));
}

TEST_CASE("tower family is almost Gorenstein of the expected degree but not almost Auslander") {
  auto T5 = fixtures::e3(F, 5);
  ClassificationReport<FpField> r = classify(T5, 12);
  CHECK(r.inj_dim_a == Extent::finite(3));
  CHECK(r.inj_dim_op == Extent::finite(3));
  CHECK(!r.gl_dim.is_finite());
  CHECK(r.gdom == Extent::finite(3));
  // The classical dominant dimension vanishes and the opposite side has
  // relative dominant dimension zero: the two notions and the two sides all
  // genuinely differ on this family.
  CHECK(r.dom == Extent::finite(0));
  CHECK(r.op_gdom == Extent::finite(0));
  CHECK(r.almost_ag);
  CHECK(r.almost_ag_n == 2);
  CHECK(!r.almost_auslander);
  CHECK(r.iwanaga_gorenstein);
  CHECK(r.ig_k == 3);
  CHECK(!r.hereditary);
  CHECK(!r.self_injective);
  CHECK(!r.auslander);
  CHECK(r.chain_attempted);
  CHECK(r.chain.ok);
  CHECK(r.chain.m == 2);
  CHECK(r.chain.terms.size() == 4);

  ClassificationReport<FpField> r4 = classify(fixtures::e3(F, 4), 12);
  CHECK(r4.inj_dim_a == Extent::finite(2));
  CHECK(r4.gdom == Extent::finite(2));
  CHECK(r4.almost_ag);
  CHECK(r4.almost_ag_n == 1);
  CHECK(!r4.almost_auslander);
}

TEST_CASE("loop-free tower quotient is almost Auslander") {
  ClassificationReport<FpField> r = classify(fixtures::e3p(F, 5), 12);
  CHECK(r.gl_dim == Extent::finite(3));
  CHECK(r.gdom == Extent::finite(3));
  CHECK(r.almost_auslander);
  CHECK(r.almost_auslander_n == 2);
  CHECK(r.almost_ag);
  CHECK(r.almost_ag_n == 2);
  CHECK(r.iwanaga_gorenstein);
  CHECK(r.ig_k == 3);
}

TEST_CASE("commutative square is almost Auslander on both sides but not an Auslander algebra") {
  ClassificationReport<FpField> r = classify(fixtures::e4(F), 8);
  CHECK(r.gl_dim == Extent::finite(2));
  CHECK(r.inj_dim_a == Extent::finite(2));
  CHECK(r.inj_dim_op == Extent::finite(2));
  CHECK(r.gdom == Extent::finite(2));
  CHECK(r.op_gdom == Extent::finite(2));
  CHECK(r.dom == Extent::finite(1));
  CHECK(r.almost_auslander);
  CHECK(r.almost_auslander_n == 1);
  CHECK(r.almost_ag_n == 1);
  CHECK(r.ig_k == 2);
  CHECK(!r.auslander);
  CHECK(r.relative_auslander);
  CHECK(!r.hereditary);
}

TEST_CASE("hereditary path algebra classifies as almost Auslander of degree zero") {
  ClassificationReport<FpField> r = classify(fixtures::a3(F), 8);
  CHECK(r.hereditary);
  CHECK(r.gl_dim == Extent::finite(1));
  CHECK(r.gdom == Extent::inf());
  CHECK(r.dom == Extent::finite(1));
  CHECK(r.almost_auslander);
  CHECK(r.almost_auslander_n == 0);
  CHECK(r.almost_ag_n == 0);
  CHECK(r.ig_k == 1);
  CHECK(!r.auslander);
  CHECK(r.relative_auslander);
}

TEST_CASE("self-injective algebra has degree zero and infinite dominant dimension") {
  ClassificationReport<FpField> r = classify(fixtures::nak3(F), 8);
  CHECK(r.self_injective);
  CHECK(r.inj_dim_a == Extent::finite(0));
  CHECK(r.inj_dim_op == Extent::finite(0));
  CHECK(r.gdom == Extent::inf());
  CHECK(r.dom == Extent::inf());
  CHECK(r.almost_ag);
  CHECK(r.almost_ag_n == 0);
  CHECK(!r.almost_auslander);
  CHECK(r.ig_k == 0);
  CHECK(r.chain_attempted);
  CHECK(!r.chain.ok);
  CHECK(r.chain.error.find("already lies") != std::string::npos);
}

TEST_CASE("Auslander algebra of the dual numbers carries every flag of its class") {
  auto K = fixtures::aus_kx2(F);
  ClassificationReport<FpField> r = classify(K, 8);
  CHECK(r.gl_dim == Extent::finite(2));
  CHECK(r.dom == Extent::finite(2));
  CHECK(r.gdom == Extent::finite(2));
  CHECK(r.auslander);
  CHECK(r.relative_auslander);
  CHECK(r.almost_ag_n == 1);
  CHECK(r.almost_auslander_n == 1);
  CHECK(r.inj.labels == std::vector<int>{1});
  CHECK(are_isomorphic(r.inj.module, proj_injective_part(K)));
}

TEST_CASE("injective coresolution terms exhaust the injectives when the degree is positive") {
  // With id A = m+1 and relative dominant dimension >= m+1, every
  // indecomposable injective appears among the coresolution terms.
  std::vector<AlgebraPtr<FpField>> algs = {fixtures::e3(F, 4), fixtures::e3(F, 5),
                                           fixtures::e4(F), fixtures::aus_kx2(F)};
  for (const auto& A : algs) {
    Coresolution<FpField> co = min_inj_coresolution(regular_rep(A), 12);
    REQUIRE(co.complete);
    std::set<int> seen;
    for (const auto& term : co.labels) seen.insert(term.begin(), term.end());
    std::set<int> all;
    for (int v = 0; v < A->num_vertices(); ++v) all.insert(v);
    CHECK(seen == all);
  }
}

TEST_CASE("indecomposable injectives split by projective dimension") {
  // Each indecomposable injective has pd 0, 1, or exactly id A; the last
  // coresolution term collects precisely the top-dimension classes, and the
  // relative dominant dimension equals id A.
  std::vector<AlgebraPtr<FpField>> algs = {fixtures::e3(F, 4), fixtures::e3(F, 5),
                                           fixtures::e4(F), fixtures::aus_kx2(F)};
  for (const auto& A : algs) {
    ClassificationReport<FpField> r = classify(A, 12);
    REQUIRE(r.inj_dim_a.is_finite());
    int top = r.inj_dim_a.value;
    REQUIRE(top >= 2);
    CHECK(r.gdom == r.inj_dim_a);
    Coresolution<FpField> co = min_inj_coresolution(regular_rep(A), 12);
    REQUIRE(static_cast<int>(co.labels.size()) == top + 1);
    std::set<int> last(co.labels.back().begin(), co.labels.back().end());
    for (int v = 0; v < A->num_vertices(); ++v) {
      const Extent& e = r.inj.pds[v];
      REQUIRE(e.is_finite());
      CHECK((e.value <= 1 || e.value == top));
      CHECK((e.value == top) == (last.count(v) == 1));
    }
  }
}

TEST_CASE("flags agree with the Iwanaga-Gorenstein characterization") {
  std::vector<ClassificationReport<FpField>> reports;
  reports.push_back(classify(fixtures::e3(F, 5), 12));
  reports.push_back(classify(fixtures::e3p(F, 5), 12));
  reports.push_back(classify(fixtures::e4(F), 8));
  reports.push_back(classify(fixtures::a3(F), 8));
  reports.push_back(classify(fixtures::aus_kx2(F), 8));
  reports.push_back(classify(fixtures::nak3(F), 8));
  reports.push_back(classify(fixtures::e1(F), 8));
  reports.push_back(classify(fixtures::e2(F), 8));
  for (const auto& r : reports) {
    if (r.almost_ag) {
      CHECK(r.iwanaga_gorenstein);
      CHECK(r.ig_k <= r.almost_ag_n + 1);
      CHECK(extent_at_least(r.gdom, r.almost_ag_n + 1));
      // Both injective dimensions agree once finite.
      CHECK(r.inj_dim_a == r.inj_dim_op);
    }
    if (r.iwanaga_gorenstein && extent_at_least(r.gdom, std::max(1, r.ig_k)))
      CHECK(r.almost_ag);
    if (r.almost_auslander) {
      CHECK(r.almost_ag);
      CHECK(r.gl_dim.is_finite());
      CHECK(r.almost_ag_n <= r.almost_auslander_n);
    }
    if (r.hereditary) CHECK(r.almost_auslander_n == 0);
  }
}

TEST_CASE("existence and uniqueness hold degree by degree on the commutative square") {
  MainTheoremEvidence<FpField> ev = verify_main_theorem(fixtures::e4(F), 1, 8);
  CHECK(ev.inj_ok);
  CHECK(ev.pd_ok);
  CHECK(ev.premise);
  CHECK(ev.gdom == Extent::finite(2));
  CHECK(ev.chain.ok);
  CHECK(ev.chain.m == 1);
  CHECK(ev.max_degree == 2);
  REQUIRE(ev.degrees.size() == 3);
  for (const DegreeEvidence& de : ev.degrees) {
    CHECK(de.tilting);
    CHECK(de.in_fac);
    CHECK(de.in_sub);
    CHECK(de.unique);
    CHECK(de.pool_size == 4);
  }
  CHECK(ev.all_confirmed);
}

TEST_CASE("four-vertex cycle fails the premises in both directions") {
  auto E2 = fixtures::e2(F);
  std::vector<R> qs = {inj_rep(E2, 1), inj_rep(E2, 2), inj_rep(E2, 3)};
  R q = direct_sum(qs);

  MainTheoremEvidence<FpField> ev = verify_main_theorem(E2, q, 1, 8);
  CHECK(ev.inj_ok);
  CHECK(!ev.pd_ok);  // pd Q = 2
  CHECK(ev.gdom == Extent::finite(2));
  CHECK(ev.premise);
  CHECK(!ev.chain.ok);
  CHECK(ev.chain.error.find("projective dimension") != std::string::npos);
  CHECK(!ev.all_confirmed);

  MainTheoremEvidence<FpField> ev2 = verify_main_theorem(E2, q, 2, 8);
  CHECK(!ev2.premise);
  CHECK(!ev2.all_confirmed);
}

TEST_CASE("linear quiver confirms the theorem at degree zero") {
  MainTheoremEvidence<FpField> ev = verify_main_theorem(fixtures::a3(F), 0, 8);
  CHECK(ev.premise);
  CHECK(ev.max_degree == 1);
  REQUIRE(ev.degrees.size() == 2);
  CHECK(ev.all_confirmed);
  CHECK(is_injective_rep(ev.chain.terms[1]));
}

TEST_CASE("self-injective algebra needs only the regular module") {
  MainTheoremEvidence<FpField> ev = verify_main_theorem(fixtures::nak3(F), 3, 8);
  CHECK(ev.premise);
  CHECK(!ev.chain.ok);
  CHECK(ev.max_degree == 0);
  REQUIRE(ev.degrees.size() == 1);
  CHECK(ev.all_confirmed);
}

TEST_CASE("a non-injective reference module is rejected") {
  auto E1 = fixtures::e1(F);
  MainTheoremEvidence<FpField> ev = verify_main_theorem(E1, fixtures::e1_q(E1), 1, 8);
  CHECK(!ev.inj_ok);
  CHECK(!ev.all_confirmed);
}

TEST_CASE("tilting-cotilting pairing holds along the tower chain") {
  AlmostAGEvidence<FpField> ev = verify_almost_ag_theorem(fixtures::e3(F, 5), 2, 12);
  CHECK(ev.premise);
  REQUIRE(ev.degrees.size() == 3);
  for (const AlmostAGDegree& de : ev.degrees) {
    CHECK(de.tilting);
    CHECK(de.in_fac);
    CHECK(de.in_sub);
    CHECK(de.cotilting);
    CHECK(de.unique);
    CHECK(de.cotilting_degree <= ev.n + 1 - de.d);
  }
  CHECK(ev.degrees.back().cotilting_degree == 0);
  CHECK(is_injective_rep(ev.report.chain.terms[3]));
  CHECK(ev.all_confirmed);

  AlmostAGEvidence<FpField> evp = verify_almost_ag_theorem(fixtures::e3p(F, 5), 2, 12);
  CHECK(evp.all_confirmed);
}

TEST_CASE("tilting-cotilting pairing on the square and the corner algebra") {
  AlmostAGEvidence<FpField> e4ev = verify_almost_ag_theorem(fixtures::e4(F), 1, 8);
  CHECK(e4ev.premise);
  REQUIRE(e4ev.degrees.size() == 2);
  CHECK(e4ev.degrees[0].cotilting);
  CHECK(e4ev.degrees[0].unique);
  CHECK(e4ev.degrees[1].cotilting_degree == 0);
  CHECK(e4ev.all_confirmed);

  // For an Auslander algebra the degree-one witness is the unique basic
  // module that is both 1-tilting and 1-cotilting inside the corner classes.
  AlmostAGEvidence<FpField> kev = verify_almost_ag_theorem(fixtures::aus_kx2(F), 1, 8);
  CHECK(kev.report.auslander);
  CHECK(kev.premise);
  REQUIRE(kev.degrees.size() == 2);
  CHECK(kev.degrees[0].tilting);
  CHECK(kev.degrees[0].cotilting);
  CHECK(kev.degrees[0].cotilting_degree == 1);
  CHECK(kev.degrees[0].unique);
  CHECK(kev.all_confirmed);
}

TEST_CASE("self-injective case degenerates to the regular module at every degree") {
  AlmostAGEvidence<FpField> ev = verify_almost_ag_theorem(fixtures::nak3(F), 1, 8);
  CHECK(ev.premise);
  REQUIRE(ev.degrees.size() == 2);
  for (const AlmostAGDegree& de : ev.degrees) {
    CHECK(de.tilting);
    CHECK(de.cotilting);
    CHECK(de.cotilting_degree == 0);
    CHECK(de.unique);
  }
  CHECK(ev.all_confirmed);
}

TEST_CASE("the pairing theorem refuses a degree beyond the dominant dimension") {
  AlmostAGEvidence<FpField> ev = verify_almost_ag_theorem(fixtures::e4(F), 2, 8);
  CHECK(!ev.premise);  // relative dominant dimension is 2 < 3
  CHECK(!ev.all_confirmed);
}
