// Generator growth for the sign-flip group {I, -I} in two variables: the
// invariants of the head-and-tail algebra need fresh generators in every even
// degree, so the invariant algebra is not finitely generated.

#include <iostream>

#include "relfree/relfree.hpp"

using namespace relfree;

int main() {
  const MatrixQ minus{{Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}};
  const FiniteMatrixGroup G = group_closure(2, {minus});

  const ModGenReport rep = module_generator_report(G, 12);
  std::cout << "linear invariants: " << rep.linear_invariant_dim << "\n";
  for (const auto& r : rep.rows)
    std::cout << "degree " << r.n << ": invariants " << r.dim_invariants << ", reachable "
              << r.dim_module_span << ", new generators " << r.new_generators << "\n";

  const CriterionVerdict v = check_finite_group(G);
  std::cout << "verdict: " << to_string(v.kind) << " (" << v.rule << ")\n";
  return 0;
}
