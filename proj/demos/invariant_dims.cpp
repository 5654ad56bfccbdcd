// Invariant dimensions of the cyclic rotation group of order 4 acting on
// polynomials in two variables, computed twice: by averaging the character
// series and by intersecting kernels degree by degree.

#include <iostream>

#include "relfree/relfree.hpp"

using namespace relfree;

int main() {
  const MatrixQ rot{{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}};
  const FiniteMatrixGroup G = group_closure(2, {rot});
  std::cout << "group order: " << G.order() << "\n";

  const int N = 8;
  const PowerSeriesQ averaged = molien_series(glmodule_series_poly(2, N), G);
  std::cout << "averaged series:   " << averaged.str() << "\n";

  std::cout << "kernel dimensions: 1";  // constants
  for (int n = 1; n <= N; ++n)
    std::cout << ", " << fixed_space(G, AlgebraKind::Polynomial, n).dim();
  std::cout << "\n";
  return 0;
}
