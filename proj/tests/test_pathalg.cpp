#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"

using namespace bqa;

namespace {

const FpField F(32003);

// Every free path of length <= cap.
std::vector<Path> all_paths(const Quiver& q, int cap) {
  std::vector<Path> out, frontier;
  for (int v = 0; v < q.num_vertices(); ++v) frontier.push_back(Path{v, {}});
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      out.push_back(p);
      if (static_cast<int>(p.length()) == cap) continue;
      int at = path_target(q, p);
      for (int a = 0; a < q.num_arrows(); ++a)
        if (q.arrows[a].source == at) {
          Path e = p;
          e.arrows.push_back(a);
          next.push_back(e);
        }
    }
    frontier = std::move(next);
  }
  return out;
}

// Independent dimension oracle for algebras with length-homogeneous
// relations: dim kQ/I = #paths(<L) - rank{u r w : |u r w| < L}.
int dim_oracle(const Algebra<FpField>& A) {
  const Quiver& q = A.quiver();
  int L = A.max_len();
  std::vector<Path> paths = all_paths(q, L - 1);
  std::map<Path, int> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = static_cast<int>(i);
  std::vector<std::vector<FpElem>> rows;
  for (const Relation<FpField>& r : A.relations()) {
    int rs = r.combo.front().path.source;
    int rt = path_target(q, r.combo.front().path);
    std::size_t rlen = r.combo.front().path.length();
    for (const Path& u : paths) {
      if (path_target(q, u) != rs) continue;
      for (const Path& w : paths) {
        if (w.source != rt) continue;
        if (u.length() + rlen + w.length() >= static_cast<std::size_t>(L)) continue;
        std::vector<FpElem> row(paths.size(), F.zero());
        for (const PathTerm<FpField>& t : r.combo) {
          Path m = path_concat(q, path_concat(q, u, t.path), w);
          row[index.at(m)] = F.add(row[index.at(m)], t.coeff);
        }
        rows.push_back(row);
      }
    }
  }
  Mat<FpField> m(F, rows.size(), paths.size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return static_cast<int>(paths.size() - rank(m));
}

std::vector<int> proj_dims(const Algebra<FpField>& A, int i) {
  std::vector<int> d;
  for (int j = 0; j < A.num_vertices(); ++j)
    d.push_back(static_cast<int>(A.basis_at(i, j).size()));
  return d;
}

}  // namespace

TEST_CASE("e1: dimensions and projective fibers") {
  auto A = fixtures::e1(F);
  CHECK(A->dim() == 15);
  CHECK(A->dim() == dim_oracle(*A));
  CHECK(proj_dims(*A, 0) == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(proj_dims(*A, 1) == std::vector<int>{0, 1, 0, 1, 1});
  CHECK(proj_dims(*A, 2) == std::vector<int>{0, 0, 1, 1, 1});
  CHECK(proj_dims(*A, 3) == std::vector<int>{0, 0, 0, 1, 1});
  CHECK(proj_dims(*A, 4) == std::vector<int>{0, 1, 0, 0, 1});
}

TEST_CASE("e2/e4/a3/aus dimensions match the rank oracle") {
  for (auto A : {fixtures::e2(F), fixtures::e4(F), fixtures::a3(F), fixtures::a3rev(F),
                 fixtures::aus_kx2(F), fixtures::nak3(F)})
    CHECK(A->dim() == dim_oracle(*A));
  CHECK(fixtures::e2(F)->dim() == 9);
  CHECK(fixtures::e4(F)->dim() == 9);
  CHECK(fixtures::a3(F)->dim() == 6);
  CHECK(fixtures::aus_kx2(F)->dim() == 5);
  CHECK(fixtures::nak3(F)->dim() == 3);
  CHECK(fixtures::e3(F, 4)->dim() == dim_oracle(*fixtures::e3(F, 4)));
  CHECK(fixtures::e3(F, 5)->dim() == dim_oracle(*fixtures::e3(F, 5)));
}

TEST_CASE("rewriting is confluent: random reduction orders agree") {
  std::mt19937_64 rng(2024);
  for (auto A : {fixtures::e1(F), fixtures::e2(F), fixtures::e3(F, 4), fixtures::e4(F),
                 fixtures::aus_kx2(F), fixtures::nak3(F)}) {
    const auto& rs = A->rewrite_system();
    for (const Path& p : all_paths(A->quiver(), 7)) {
      PathCombo<FpField> nf = rs.reduce_path(p);
      for (int t = 0; t < 4; ++t) {
        PathCombo<FpField> alt = rs.reduce_random(PathCombo<FpField>{{F.one(), p}}, rng);
        REQUIRE(alt.size() == nf.size());
        for (std::size_t k = 0; k < nf.size(); ++k) {
          CHECK(alt[k].path == nf[k].path);
          CHECK(F.eq(alt[k].coeff, nf[k].coeff));
        }
      }
    }
  }
}

TEST_CASE("multiplication table is associative and unital") {
  auto A = fixtures::e1(F);
  std::mt19937_64 rng(5);
  auto random_elem = [&]() {
    SparseVec<FpField> v;
    for (int i = 0; i < A->dim(); ++i)
      if (rng() % 3 == 0) v.emplace_back(i, F.from_long(static_cast<std::int64_t>(rng() % 32003)));
    return v;
  };
  SparseVec<FpField> unit;
  for (int v = 0; v < A->num_vertices(); ++v) unit.emplace_back(A->trivial_idx(v), F.one());
  std::sort(unit.begin(), unit.end());
  for (int t = 0; t < 10; ++t) {
    auto x = random_elem(), y = random_elem(), z = random_elem();
    CHECK(A->multiply(A->multiply(x, y), z) == A->multiply(x, A->multiply(y, z)));
    CHECK(A->multiply(unit, x) == x);
    CHECK(A->multiply(x, unit) == x);
  }
}

TEST_CASE("opposite algebra: same dimension, fibers transposed, involutive") {
  for (auto A : {fixtures::e1(F), fixtures::e2(F), fixtures::e3(F, 4), fixtures::aus_kx2(F)}) {
    auto op = opposite_algebra(*A);
    CHECK(op->dim() == A->dim());
    for (int i = 0; i < A->num_vertices(); ++i)
      for (int j = 0; j < A->num_vertices(); ++j)
        CHECK(op->basis_at(i, j).size() == A->basis_at(j, i).size());
    auto opop = opposite_algebra(*op);
    CHECK(opop->dim() == A->dim());
    for (int i = 0; i < A->num_vertices(); ++i)
      for (int j = 0; j < A->num_vertices(); ++j)
        CHECK(opop->basis_at(i, j).size() == A->basis_at(i, j).size());
  }
}

TEST_CASE("vertex quotient: e4 without vertex 4, edge cases") {
  auto A = fixtures::e4(F);
  auto q = quotient_by_vertices(*A, {3});
  REQUIRE(!q.zero_algebra);
  CHECK(q.algebra->dim() == 5);  // e1,e2,e3 and the two remaining arrows
  CHECK(q.algebra->num_vertices() == 3);
  CHECK(q.algebra->relations().empty());

  auto all = quotient_by_vertices(*A, {0, 1, 2, 3});
  CHECK(all.zero_algebra);

  auto none = quotient_by_vertices(*A, {});
  CHECK(none.algebra->dim() == A->dim());
}

TEST_CASE("non-admissible and non-finite-dimensional inputs are refused") {
  // free loop: not finite dimensional below any bound
  CHECK_THROWS_AS(fixtures::build(F, {"1"}, {{{"x", "1", "1"}}}, std::vector<std::string>{}),
                  InputError);
  // relation with a length-1 term
  CHECK_THROWS_AS(fixtures::build(F, {"1", "2"}, {{{"a", "1", "2"}, {"b", "1", "2"}}}, {"a - b"}),
                  InputError);
  // non-parallel paths
  CHECK_THROWS_AS(
      fixtures::build(F, {"1", "2", "3"}, {{{"a", "1", "2"}, {"b", "2", "3"}, {"c", "2", "2"}}},
                      {"a*b - c*c"}),
      InputError);
  // x*y = (x*y)^2 forces an idempotent in the radical: the certificate that
  // every long path vanishes must fail
  CHECK_THROWS_AS(
      fixtures::build(F, {"1", "2"}, {{{"x", "1", "2"}, {"y", "2", "1"}}}, {"x*y - x*y*x*y"}),
      InputError);
}

TEST_CASE("modular field must exceed dim^2") {
  FpField tiny(3);
  CHECK_THROWS_AS(fixtures::a3(tiny), FieldTooSmallError);
}

TEST_CASE("path expression parsing") {
  auto A = fixtures::e1(F);
  const Quiver& q = A->quiver();
  auto c = parse_path_expr(q, F, "2*a*c + 3*b*d");
  REQUIRE(c.size() == 2);
  std::multiset<std::int64_t> coeffs{c[0].coeff.v, c[1].coeff.v};
  CHECK(coeffs == std::multiset<std::int64_t>{2, 3});
  CHECK_THROWS_AS(parse_path_expr(q, F, "a*zz"), InputError);
  CHECK_THROWS_AS(parse_path_expr(q, F, "a*b"), InputError);  // not composable
  CHECK_THROWS_AS(parse_path_expr(q, F, ""), InputError);
  CHECK_THROWS_AS(parse_path_expr(q, F, "3 - 3"), InputError);  // no arrows
}
