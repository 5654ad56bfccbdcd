#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "relfree/finite_generation.hpp"
#include "relfree/group.hpp"
#include "relfree/invariants.hpp"

using namespace relfree;

namespace {

MatrixQ rot90() { return MatrixQ{{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}}; }
MatrixQ minus_id() { return MatrixQ{{Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}}; }
MatrixQ swap2() { return MatrixQ{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}; }

}  // namespace

TEST_CASE("sign-flip group needs new generators in every even degree") {
  const FiniteMatrixGroup G = group_closure(2, {minus_id()});
  const ModGenReport rep = module_generator_report(G, 10);
  CHECK(rep.linear_invariant_dim == 0);
  REQUIRE(rep.rows.size() == 9);
  for (const auto& r : rep.rows) {
    if (r.n % 2 == 0) {
      CHECK(r.dim_invariants == 2 * r.n);
      CHECK(r.dim_module_span == 0);
      CHECK(r.new_generators == 2 * r.n);
    } else {
      CHECK(r.dim_invariants == 0);
      CHECK(r.new_generators == 0);
    }
  }
}

TEST_CASE("trivial group: everything is reachable from degree one") {
  const FiniteMatrixGroup G = group_closure(2, {});
  const ModGenReport rep = module_generator_report(G, 6);
  CHECK(rep.linear_invariant_dim == 2);
  for (const auto& r : rep.rows) {
    CHECK(r.dim_invariants == 2 * r.n);  // the whole component is invariant
    CHECK(r.dim_module_span == r.dim_invariants);
    CHECK(r.new_generators == 0);
  }
}

TEST_CASE("swap group report matches the independent product-span oracle") {
  const FiniteMatrixGroup G = group_closure(2, {swap2()});
  const std::size_t d = 2;
  const ModGenReport rep = module_generator_report(G, 8);
  CHECK(rep.linear_invariant_dim == 1);

  // frozen from the oracle below
  const std::vector<std::vector<long long>> expected = {
      {2, 2, 1, 1}, {3, 3, 2, 1}, {4, 4, 3, 1}, {5, 5, 4, 1},
      {6, 6, 5, 1}, {7, 7, 6, 1}, {8, 8, 7, 1}};
  REQUIRE(rep.rows.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(rep.rows[i].n == expected[i][0]);
    CHECK(rep.rows[i].dim_invariants == expected[i][1]);
    CHECK(rep.rows[i].dim_module_span == expected[i][2]);
    CHECK(rep.rows[i].new_generators == expected[i][3]);
  }

  // oracle: span all products w o (x1+x2)^(n-k) with w an invariant of
  // degree k, enumerated directly rather than through the report recursion
  const PolyElement u = PolyElement::variable(d, 1) + PolyElement::variable(d, 2);
  for (int n = 2; n <= 8; ++n) {
    GradedComponent comp(AlgebraKind::LeftNilpotent, d, n);
    const GradedInvariantBasis inv_n = fixed_space(G, AlgebraKind::LeftNilpotent, n);
    std::vector<VectorQ> vecs;
    for (int k = 1; k < n; ++k) {
      GradedComponent ck(AlgebraKind::LeftNilpotent, d, k);
      const GradedInvariantBasis inv_k = fixed_space(G, AlgebraKind::LeftNilpotent, k);
      PolyElement mult = PolyElement::one(d);
      for (int j = 0; j < n - k; ++j) mult = mult * u;
      for (const auto& w : inv_k.space.basis())
        vecs.push_back(comp.coords_of(l_module_action(ck.l_element(w), mult)));
    }
    const Subspace span = span_of(comp.dim(), vecs);
    const auto& row = rep.rows[static_cast<std::size_t>(n - 2)];
    CHECK(static_cast<long long>(inv_n.dim()) == row.dim_invariants);
    CHECK(static_cast<long long>(span.dim()) == row.dim_module_span);
  }
}

TEST_CASE("algebra report coincides with the module report") {
  for (const MatrixQ& g : {minus_id(), swap2(), rot90()}) {
    const FiniteMatrixGroup G = group_closure(2, {g});
    const ModGenReport a = module_generator_report(G, 6);
    const ModGenReport b = algebra_generator_report(G, 6);
    CHECK(a.linear_invariant_dim == b.linear_invariant_dim);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].dim_invariants == b.rows[i].dim_invariants);
      CHECK(a.rows[i].dim_module_span == b.rows[i].dim_module_span);
      CHECK(a.rows[i].new_generators == b.rows[i].new_generators);
    }
  }
  CHECK_THROWS_AS(module_generator_report(group_closure(2, {}), 1), std::invalid_argument);
}

TEST_CASE("finite group criterion") {
  const CriterionVerdict t = check_finite_group(group_closure(2, {}));
  CHECK(t.kind == CriterionVerdict::Kind::TrivialGroup);
  CHECK(t.rule == "trivial-group");

  const CriterionVerdict m = check_finite_group(group_closure(2, {minus_id()}));
  CHECK(m.kind == CriterionVerdict::Kind::NotFinitelyGenerated);
  CHECK(m.rule == "finite-group");
  CHECK(m.numbers.at("transcendence_degree") == 2);
  CHECK(m.numbers.at("linear_invariant_dim") == 0);

  const CriterionVerdict s = check_finite_group(group_closure(2, {swap2()}));
  CHECK(s.kind == CriterionVerdict::Kind::NotFinitelyGenerated);
  CHECK(s.numbers.at("linear_invariant_dim") == 1);
}

TEST_CASE("block-count criterion") {
  CHECK(check_weitzenbock({3}).kind == CriterionVerdict::Kind::NotFinitelyGenerated);
  CHECK(check_weitzenbock({3}).rule == "weitzenbock-block-count");
  CHECK(check_weitzenbock({2, 1}).kind == CriterionVerdict::Kind::Inconclusive);
  CHECK(check_weitzenbock({2}).kind == CriterionVerdict::Kind::Inconclusive);
  CHECK(check_weitzenbock({1, 1}).kind == CriterionVerdict::Kind::TrivialGroup);
  CHECK(check_weitzenbock({1, 1}).rule == "zero-derivation");
  CHECK(check_weitzenbock({2, 2}).kind == CriterionVerdict::Kind::NotFinitelyGenerated);
  CHECK(check_weitzenbock({3, 1}).kind == CriterionVerdict::Kind::NotFinitelyGenerated);
  CHECK(check_weitzenbock({4}).numbers.at("linear_constants_dim") == 1);
  CHECK_THROWS_AS(check_weitzenbock({}), std::invalid_argument);
}

TEST_CASE("metabelian evidence criterion") {
  const CriterionVerdict m = check_metabelian(group_closure(2, {minus_id()}), 8);
  CHECK(m.kind == CriterionVerdict::Kind::NotFinitelyGenerated);
  CHECK(m.rule == "metabelian-dimension-evidence");
  CHECK(m.dim_table == std::vector<long long>{0, 1, 0, 3, 0, 5, 0, 7});

  const CriterionVerdict c = check_metabelian(group_closure(2, {rot90()}), 8);
  CHECK(c.kind == CriterionVerdict::Kind::NotFinitelyGenerated);
  CHECK(c.dim_table == std::vector<long long>{0, 1, 0, 1, 0, 3, 0, 3});

  // linear invariants present: the degree argument is not applicable
  const CriterionVerdict s = check_metabelian(group_closure(2, {swap2()}), 8);
  CHECK(s.kind == CriterionVerdict::Kind::Inconclusive);
  CHECK(s.rule == "metabelian-linear-invariants");
  const CriterionVerdict t = check_metabelian(group_closure(2, {}), 8);
  CHECK(t.kind == CriterionVerdict::Kind::Inconclusive);
}

TEST_CASE("constants of the standard derivation are generated as claimed") {
  for (bool ok : remark_generation_check(2, 6)) CHECK(ok);
  for (bool ok : remark_generation_check(3, 5)) CHECK(ok);
}

TEST_CASE("invariants lift: the quotient bounds the subspace") {
  for (const MatrixQ& g : {minus_id(), swap2(), rot90()}) {
    const FiniteMatrixGroup G = group_closure(2, {g});
    for (int n = 2; n <= 6; ++n)
      CHECK(fixed_space(G, AlgebraKind::LeftNilpotent, n).dim() >=
            fixed_space(G, AlgebraKind::Polynomial, n).dim());
  }
}
