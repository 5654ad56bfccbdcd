#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "relfree/action.hpp"
#include "relfree/lalgebra.hpp"
#include "relfree/metabelian.hpp"
#include "relfree/polyalg.hpp"
#include "relfree/schur.hpp"

using namespace relfree;

namespace {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  long pick(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational() { return Rational(pick(-5, 5), pick(1, 4)); }
};

LElement random_l_element(Rng& rng, std::size_t d, int max_degree, int terms) {
  LElement v;
  for (int t = 0; t < terms; ++t) {
    const int n = static_cast<int>(rng.pick(1, max_degree));
    const auto basis = l_basis(d, n);
    v += LElement::monomial(basis[static_cast<std::size_t>(rng.pick(0, static_cast<long>(basis.size()) - 1))],
                            rng.rational());
  }
  return v;
}

MetabElement random_metab_element(Rng& rng, std::size_t d, int max_degree, int terms) {
  MetabElement v;
  for (int t = 0; t < terms; ++t) {
    const int n = static_cast<int>(rng.pick(1, max_degree));
    const auto basis = metab_basis(d, n);
    v += MetabElement::monomial(
        basis[static_cast<std::size_t>(rng.pick(0, static_cast<long>(basis.size()) - 1))],
        rng.rational());
  }
  return v;
}

PolyElement random_poly(Rng& rng, std::size_t d, int max_degree, int terms) {
  PolyElement v;
  for (int t = 0; t < terms; ++t) {
    const int n = static_cast<int>(rng.pick(0, max_degree));
    const auto basis = poly_basis(d, n);
    v += PolyElement::monomial(
        basis[static_cast<std::size_t>(rng.pick(0, static_cast<long>(basis.size()) - 1))],
        rng.rational());
  }
  return v;
}

MatrixQ random_matrix(Rng& rng, std::size_t d) {
  MatrixQ m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m.at(i, j) = Rational(rng.pick(-2, 2));
  return m;
}

}  // namespace

TEST_CASE("polynomial monomial enumeration") {
  const auto b = poly_basis(2, 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Exponents{2, 0});
  CHECK(b[1] == Exponents{1, 1});
  CHECK(b[2] == Exponents{0, 2});
  for (std::size_t d = 1; d <= 4; ++d)
    for (int n = 0; n <= 6; ++n)
      CHECK(poly_basis(d, n).size() ==
            static_cast<std::size_t>(binomial(static_cast<unsigned long>(n + d - 1),
                                              static_cast<unsigned long>(d - 1))
                                         .get_ui()));
}

TEST_CASE("polynomial arithmetic") {
  const PolyElement x = PolyElement::variable(2, 1);
  const PolyElement y = PolyElement::variable(2, 2);
  const PolyElement sq = (x + y) * (x + y);
  CHECK(sq.terms().size() == 3);
  CHECK(sq.terms().at(Exponents{1, 1}) == Rational(2));
  CHECK((sq - sq).is_zero());
  CHECK(sq.str() == "1 * x[2,0] + 2 * x[1,1] + 1 * x[0,2]");
}

TEST_CASE("head-and-tail basis layout") {
  const auto b = l_basis(2, 2);
  REQUIRE(b.size() == 4);
  CHECK(b[0] == LMonomial{1, {1, 0}});
  CHECK(b[1] == LMonomial{1, {0, 1}});
  CHECK(b[2] == LMonomial{2, {1, 0}});
  CHECK(b[3] == LMonomial{2, {0, 1}});

  // component dimension equals the two-summand module dimension
  for (std::size_t d = 2; d <= 4; ++d)
    for (int n = 2; n <= 8; ++n)
      CHECK(l_basis(d, n).size() ==
            static_cast<std::size_t>(weyl_dim(Partition{n}, d) + weyl_dim(Partition{n - 1, 1}, d)));
}

TEST_CASE("product rules of the head-and-tail algebra") {
  const std::size_t d = 2;
  const LElement x1 = LElement::generator(d, 1);
  const LElement x2 = LElement::generator(d, 2);

  // x1 * x2 keeps head 1 and pushes 2 into the tail
  const LElement p = l_mul(x1, x2);
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms().begin()->first == LMonomial{1, {0, 1}});

  // right factor of degree two kills the product
  CHECK(l_mul(x1, p).is_zero());
  CHECK(l_mul(p, p).is_zero());

  // the tail is commutative
  CHECK(l_mul(l_mul(x1, x2), x1) == l_mul(l_mul(x1, x1), x2));
}

TEST_CASE("right-symmetry and left nilpotency at random") {
  Rng rng(101);
  int checked = 0;
  for (int rep = 0; rep < 400; ++rep) {
    const std::size_t d = static_cast<std::size_t>(rng.pick(2, 3));
    const LElement u = random_l_element(rng, d, 4, 3);
    const LElement v = random_l_element(rng, d, 4, 3);
    const LElement w = random_l_element(rng, d, 4, 3);
    // associator symmetry in the last two arguments
    const LElement assoc_vw = l_mul(u, l_mul(v, w)) - l_mul(l_mul(u, v), w);
    const LElement assoc_wv = l_mul(u, l_mul(w, v)) - l_mul(l_mul(u, w), v);
    CHECK(assoc_vw == assoc_wv);
    // left nilpotency: u(vw) = 0
    CHECK(l_mul(u, l_mul(v, w)).is_zero());
    checked += 2;
  }
  CHECK(checked >= 800);
}

TEST_CASE("module action over polynomials") {
  Rng rng(202);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t d = static_cast<std::size_t>(rng.pick(2, 3));
    const LElement v = random_l_element(rng, d, 3, 2);
    const PolyElement f = random_poly(rng, d, 2, 2);
    const PolyElement g = random_poly(rng, d, 2, 2);
    CHECK(l_module_action(l_module_action(v, f), g) == l_module_action(v, f * g));
  }

  // acting by a linear form agrees with multiplying by the matching element
  const std::size_t d = 2;
  const LElement v = l_mul(LElement::generator(d, 1), LElement::generator(d, 2));
  const PolyElement lin = PolyElement::variable(d, 1) + PolyElement::variable(d, 2);
  const LElement as_elem = LElement::generator(d, 1) + LElement::generator(d, 2);
  CHECK(l_module_action(v, lin) == l_mul(v, as_elem));
}

TEST_CASE("metabelian basis layout") {
  const auto b = metab_basis(3, 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == MetabMonomial{2, {1}});
  CHECK(b[1] == MetabMonomial{3, {1}});
  CHECK(b[2] == MetabMonomial{3, {2}});

  for (std::size_t d = 2; d <= 4; ++d) {
    CHECK(metab_basis(d, 1).size() == d);
    for (int n = 2; n <= 8; ++n)
      CHECK(metab_basis(d, n).size() == static_cast<std::size_t>(weyl_dim(Partition{n - 1, 1}, d)));
  }
}

TEST_CASE("metabelian bracket normal form") {
  // [[x3,x2],x1] = [x3,x1,x2] - [x2,x1,x3]
  const MetabElement lhs = metab_bracket(MetabElement::monomial(MetabMonomial{3, {2}}),
                                         MetabElement::generator(3, 1));
  MetabElement expected = MetabElement::monomial(MetabMonomial{3, {1, 2}});
  expected -= MetabElement::monomial(MetabMonomial{2, {1, 3}});
  CHECK(lhs == expected);

  // [x1,[x2,x1]] = -[x2,x1,x1]
  const MetabElement r = metab_bracket(MetabElement::generator(2, 1),
                                       MetabElement::monomial(MetabMonomial{2, {1}}));
  CHECK(r == MetabElement::monomial(MetabMonomial{2, {1, 1}}, Rational(-1)));

  // generators: [x2,x1] is a basis monomial, [x1,x2] its negative
  const MetabElement g21 = metab_bracket(MetabElement::generator(2, 2), MetabElement::generator(2, 1));
  CHECK(g21 == MetabElement::monomial(MetabMonomial{2, {1}}));
  const MetabElement g12 = metab_bracket(MetabElement::generator(2, 1), MetabElement::generator(2, 2));
  CHECK(g12 == MetabElement::monomial(MetabMonomial{2, {1}}, Rational(-1)));
  CHECK(metab_bracket(MetabElement::generator(2, 1), MetabElement::generator(2, 1)).is_zero());
}

TEST_CASE("metabelian identities at random") {
  Rng rng(303);
  int checked = 0;
  for (int rep = 0; rep < 400; ++rep) {
    const std::size_t d = static_cast<std::size_t>(rng.pick(2, 3));
    const MetabElement a = random_metab_element(rng, d, 4, 3);
    const MetabElement b = random_metab_element(rng, d, 4, 3);
    const MetabElement c = random_metab_element(rng, d, 4, 3);

    // anticommutativity
    CHECK(metab_bracket(a, b) == metab_bracket(b, a) * Rational(-1));
    // Jacobi
    MetabElement jac = metab_bracket(metab_bracket(a, b), c);
    jac += metab_bracket(metab_bracket(b, c), a);
    jac += metab_bracket(metab_bracket(c, a), b);
    CHECK(jac.is_zero());
    // solvability of class 2: brackets of brackets vanish
    CHECK(metab_bracket(metab_bracket(a, b), metab_bracket(b, c)).is_zero());
    checked += 3;
  }
  CHECK(checked >= 1200);
}

TEST_CASE("left-normed words agree across build orders") {
  // [x3,x1,x2] built letter by letter equals the stored normal form, and
  // permuting the late letters changes nothing.
  const std::size_t d = 3;
  auto chain = [&](std::vector<int> letters) {
    MetabElement cur = MetabElement::generator(d, static_cast<std::size_t>(letters[0]));
    for (std::size_t i = 1; i < letters.size(); ++i)
      cur = metab_bracket(cur, MetabElement::generator(d, static_cast<std::size_t>(letters[i])));
    return cur;
  };
  CHECK(chain({3, 1, 2}) == MetabElement::monomial(MetabMonomial{3, {1, 2}}));
  CHECK(chain({3, 1, 2, 2}) == chain({3, 1, 2, 2}));
  CHECK(chain({2, 1, 3, 1}) == chain({2, 1, 1, 3}));
  CHECK(chain({3, 2, 1, 2, 3}) == chain({3, 2, 3, 2, 1}));
}

TEST_CASE("substitution respects products and composition") {
  Rng rng(404);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t d = static_cast<std::size_t>(rng.pick(2, 3));
    const MatrixQ g = random_matrix(rng, d);
    const MatrixQ h = random_matrix(rng, d);

    const PolyElement f1 = random_poly(rng, d, 3, 2);
    const PolyElement f2 = random_poly(rng, d, 3, 2);
    CHECK(substitute(g, f1 * f2) == substitute(g, f1) * substitute(g, f2));
    CHECK(substitute(g * h, f1) == substitute(g, substitute(h, f1)));

    const LElement u = random_l_element(rng, d, 3, 2);
    const LElement v = random_l_element(rng, d, 3, 2);
    CHECK(substitute(g, l_mul(u, v)) == l_mul(substitute(g, u), substitute(g, v)));
    CHECK(substitute(g * h, u) == substitute(g, substitute(h, u)));

    const MetabElement a = random_metab_element(rng, d, 3, 2);
    const MetabElement b = random_metab_element(rng, d, 3, 2);
    CHECK(substitute(g, metab_bracket(a, b)) ==
          metab_bracket(substitute(g, a), substitute(g, b)));
    CHECK(substitute(g * h, a) == substitute(g, substitute(h, a)));
  }
}

TEST_CASE("derivations satisfy the Leibniz rule") {
  Rng rng(505);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t d = static_cast<std::size_t>(rng.pick(2, 3));
    const MatrixQ delta = random_matrix(rng, d);

    const PolyElement f1 = random_poly(rng, d, 3, 2);
    const PolyElement f2 = random_poly(rng, d, 3, 2);
    CHECK(derivation_apply(delta, f1 * f2) ==
          derivation_apply(delta, f1) * f2 + f1 * derivation_apply(delta, f2));

    const LElement u = random_l_element(rng, d, 3, 2);
    const LElement v = random_l_element(rng, d, 3, 2);
    CHECK(derivation_apply(delta, l_mul(u, v)) ==
          l_mul(derivation_apply(delta, u), v) + l_mul(u, derivation_apply(delta, v)));

    const MetabElement a = random_metab_element(rng, d, 3, 2);
    const MetabElement b = random_metab_element(rng, d, 3, 2);
    MetabElement rhs = metab_bracket(derivation_apply(delta, a), b);
    rhs += metab_bracket(a, derivation_apply(delta, b));
    CHECK(derivation_apply(delta, metab_bracket(a, b)) == rhs);
  }
}

TEST_CASE("action matrices compose") {
  Rng rng(606);
  for (AlgebraKind kind :
       {AlgebraKind::Polynomial, AlgebraKind::LeftNilpotent, AlgebraKind::Metabelian}) {
    for (int rep = 0; rep < 10; ++rep) {
      const std::size_t d = 2;
      const int n = static_cast<int>(rng.pick(1, 4));
      GradedComponent comp(kind, d, n);
      const MatrixQ g = random_matrix(rng, d);
      const MatrixQ h = random_matrix(rng, d);
      CHECK(action_matrix(g * h, comp) == action_matrix(g, comp) * action_matrix(h, comp));
    }
  }
}

TEST_CASE("coordinates round-trip") {
  Rng rng(707);
  GradedComponent comp(AlgebraKind::Metabelian, 3, 3);
  for (int rep = 0; rep < 20; ++rep) {
    VectorQ v;
    for (std::size_t i = 0; i < comp.dim(); ++i) v.push_back(rng.rational());
    CHECK(comp.coords_of(comp.metab_element(v)) == v);
  }
  GradedComponent bad(AlgebraKind::Polynomial, 2, 2);
  CHECK_THROWS_AS(bad.coords_of(PolyElement::variable(2, 1)), std::invalid_argument);
}
