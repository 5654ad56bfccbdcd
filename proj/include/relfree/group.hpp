#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "relfree/errors.hpp"
#include "relfree/matrix.hpp"
#include "relfree/rational.hpp"

namespace relfree {

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// A finite subgroup of GL_d(Q), stored as the full element list in a
/// deterministic order: breadth-first layers from the identity, each layer
/// sorted entrywise.
class FiniteMatrixGroup {
public:
  FiniteMatrixGroup(std::size_t d, std::vector<MatrixQ> generators, std::vector<MatrixQ> elements)
      : d_(d), generators_(std::move(generators)), elements_(std::move(elements)) {}

  std::size_t d() const { return d_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<MatrixQ>& generators() const { return generators_; }
  const std::vector<MatrixQ>& elements() const { return elements_; }

  bool is_trivial() const { return elements_.size() == 1; }

private:
  std::size_t d_;
  std::vector<MatrixQ> generators_;
  std::vector<MatrixQ> elements_;
};

/// Saturate the generator set into a full group element list. An empty
/// generator list yields the trivial group. Generators must be invertible;
/// if the closure grows past max_elements the group is reported non-finite.
inline FiniteMatrixGroup group_closure(std::size_t d, const std::vector<MatrixQ>& generators,
                                       std::size_t max_elements = kDefaultGroupCap) {
  if (d < 1) throw std::invalid_argument("group_closure: d must be >= 1");
  for (const auto& g : generators) {
    if (g.rows() != d || g.cols() != d)
      throw std::invalid_argument("group_closure: generator size does not match d");
    if (det(g).is_zero())
      throw std::invalid_argument("group_closure: generator is not invertible");
  }

  const MatrixQ id = MatrixQ::identity(d);
  std::set<MatrixQ> seen;
  std::vector<MatrixQ> elements;
  seen.insert(id);
  elements.push_back(id);

  std::vector<MatrixQ> frontier{id};
  while (!frontier.empty()) {
    std::set<MatrixQ> next;
    for (const auto& e : frontier)
      for (const auto& g : generators) {
        MatrixQ p = e * g;
        if (seen.insert(p).second) {
          if (seen.size() > max_elements)
            throw NonFiniteGroupError("group closure exceeded " + std::to_string(max_elements) +
                                      " elements; the generated group is not finite within this cap");
          next.insert(std::move(p));
        }
      }
    frontier.assign(next.begin(), next.end());
    for (const auto& p : frontier) elements.push_back(p);
  }
  return FiniteMatrixGroup(d, generators, elements);
}

}  // namespace relfree
