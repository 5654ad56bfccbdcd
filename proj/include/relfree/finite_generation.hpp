#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "relfree/action.hpp"
#include "relfree/group.hpp"
#include "relfree/invariants.hpp"
#include "relfree/lalgebra.hpp"
#include "relfree/linalg.hpp"
#include "relfree/polyalg.hpp"
#include "relfree/weitzenbock.hpp"

namespace relfree {

/// One degree of a generation report: total invariants, the part reachable
/// from below by multiplying with degree-1 invariants, and the complement.
struct ModGenRow {
  int n = 0;
  long long dim_invariants = 0;
  long long dim_module_span = 0;
  long long new_generators = 0;
};

struct ModGenReport {
  std::size_t d = 0;
  int max_degree = 0;
  long long linear_invariant_dim = 0;
  std::vector<ModGenRow> rows;  // degrees 2..max_degree
};

/// Degree-by-degree generator count for the invariant algebra inside the
/// head-and-tail algebra. Products with a right factor of degree >= 2 vanish
/// there, so everything reachable from lower degrees is an old invariant
/// times a degree-1 invariant; the recursion tracks exactly that span,
/// measured against the full invariant space of each degree.
inline ModGenReport module_generator_report(const FiniteMatrixGroup& G, int max_degree) {
  if (max_degree < 2)
    throw std::invalid_argument("module_generator_report: max_degree must be >= 2");
  ModGenReport rep;
  rep.d = G.d();
  rep.max_degree = max_degree;

  const Subspace lin = linear_invariants(G);
  rep.linear_invariant_dim = static_cast<long long>(lin.dim());

  // Degree-1 invariants double as module multipliers, taken as linear forms.
  std::vector<PolyElement> multipliers;
  for (const auto& u : lin.basis()) {
    PolyElement p;
    for (std::size_t j = 0; j < u.size(); ++j) {
      Exponents e(G.d(), 0);
      e[j] = 1;
      p.add_term(e, u[j]);
    }
    multipliers.push_back(p);
  }

  // Full invariant basis of the previous degree, as algebra elements.
  std::vector<LElement> prev;
  {
    GradedComponent comp1(AlgebraKind::LeftNilpotent, G.d(), 1);
    const GradedInvariantBasis inv1 = fixed_space(G, AlgebraKind::LeftNilpotent, 1);
    for (const auto& v : inv1.space.basis()) prev.push_back(comp1.l_element(v));
  }

  for (int n = 2; n <= max_degree; ++n) {
    GradedComponent comp(AlgebraKind::LeftNilpotent, G.d(), n);
    const GradedInvariantBasis inv = fixed_space(G, AlgebraKind::LeftNilpotent, n);

    std::vector<VectorQ> span_vectors;
    for (const auto& v : prev)
      for (const auto& p : multipliers)
        span_vectors.push_back(comp.coords_of(l_module_action(v, p)));
    const Subspace span = span_of(comp.dim(), span_vectors);

    ModGenRow row;
    row.n = n;
    row.dim_invariants = static_cast<long long>(inv.dim());
    row.dim_module_span = static_cast<long long>(span.dim());
    row.new_generators = row.dim_invariants - row.dim_module_span;
    if (row.new_generators < 0 || !inv.space.contains(span))
      throw std::logic_error("module_generator_report: span escaped the invariant space");
    rep.rows.push_back(row);

    prev.clear();
    for (const auto& v : inv.space.basis()) prev.push_back(comp.l_element(v));
  }
  return rep;
}

/// Generator count for the invariants as an algebra. Since a product is zero
/// unless its right factor has degree 1, the subalgebra generated by the
/// invariants grows exactly by the degree-1 multiplier span; the report
/// coincides with the module one, with the linear invariants read as the
/// degree-1 generator supply.
inline ModGenReport algebra_generator_report(const FiniteMatrixGroup& G, int max_degree) {
  return module_generator_report(G, max_degree);
}

/// Outcome of one of the finite-generation criteria.
struct CriterionVerdict {
  enum class Kind { NotFinitelyGenerated, Inconclusive, TrivialGroup };

  Kind kind = Kind::Inconclusive;
  std::string rule;
  std::map<std::string, long long> numbers;  // named witness quantities
  std::vector<long long> dim_table;          // metabelian evidence, degrees 1..N
  std::string note;
};

inline std::string to_string(CriterionVerdict::Kind k) {
  switch (k) {
    case CriterionVerdict::Kind::NotFinitelyGenerated: return "not-finitely-generated";
    case CriterionVerdict::Kind::Inconclusive: return "inconclusive";
    case CriterionVerdict::Kind::TrivialGroup: return "trivial-group";
  }
  throw std::logic_error("to_string(CriterionVerdict::Kind): bad enum value");
}

/// Finite-group criterion. A nontrivial finite group leaves fewer than d
/// independent linear invariants, while the invariant field still has
/// transcendence degree d; the gap forces infinitely many generators.
inline CriterionVerdict check_finite_group(const FiniteMatrixGroup& G) {
  CriterionVerdict v;
  if (G.order() == 1) {
    v.kind = CriterionVerdict::Kind::TrivialGroup;
    v.rule = "trivial-group";
    v.note = "the identity group fixes everything; the invariants are the whole algebra";
    return v;
  }
  const long long m = static_cast<long long>(linear_invariants(G).dim());
  v.kind = CriterionVerdict::Kind::NotFinitelyGenerated;
  v.rule = "finite-group";
  v.numbers["transcendence_degree"] = static_cast<long long>(G.d());
  v.numbers["linear_invariant_dim"] = m;
  v.note = "linear invariants span " + std::to_string(m) + " < " + std::to_string(G.d()) +
           " dimensions, but the invariant field needs " + std::to_string(G.d()) +
           " independent elements";
  return v;
}

/// Weitzenboeck criterion, driven only by the block shape: the constants of
/// the derivation contain p independent linear elements (one per block),
/// against a required supply of d - 1.
inline CriterionVerdict check_weitzenbock(const std::vector<int>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("check_weitzenbock: no blocks");
  long long d = 0;
  for (int b : blocks) {
    if (b < 1) throw std::invalid_argument("check_weitzenbock: block sizes must be >= 1");
    d += b;
  }
  const long long p = static_cast<long long>(blocks.size());

  CriterionVerdict v;
  v.numbers["block_count"] = p;
  v.numbers["dimension"] = d;
  v.numbers["linear_constants_dim"] = p;
  v.numbers["required_supply"] = d - 1;
  if (p == d) {
    v.kind = CriterionVerdict::Kind::TrivialGroup;
    v.rule = "zero-derivation";
    v.note = "all blocks have size 1, so the derivation vanishes and every element is a constant";
    return v;
  }
  if (p < d - 1) {
    v.kind = CriterionVerdict::Kind::NotFinitelyGenerated;
    v.rule = "weitzenbock-block-count";
    v.note = "only " + std::to_string(p) + " independent linear constants against a required " +
             std::to_string(d - 1);
    return v;
  }
  v.kind = CriterionVerdict::Kind::Inconclusive;
  v.rule = "weitzenbock-block-count";
  v.note = "the linear constants meet the d - 1 threshold, so this count decides nothing";
  return v;
}

/// Metabelian criterion. Without linear invariants the bracket of invariants
/// vanishes, so any nonzero invariant in high degree cannot be generated from
/// below; nonzero dimensions at the top of the inspected range are the
/// witness.
inline CriterionVerdict check_metabelian(const FiniteMatrixGroup& G, int max_degree) {
  if (max_degree < 2)
    throw std::invalid_argument("check_metabelian: max_degree must be >= 2");
  CriterionVerdict v;
  const long long m = static_cast<long long>(linear_invariants(G).dim());
  v.numbers["linear_invariant_dim"] = m;
  if (m > 0) {
    v.kind = CriterionVerdict::Kind::Inconclusive;
    v.rule = "metabelian-linear-invariants";
    v.note = "linear invariants are present, so the degree argument does not apply";
    return v;
  }
  for (int n = 1; n <= max_degree; ++n)
    v.dim_table.push_back(static_cast<long long>(fixed_space(G, AlgebraKind::Metabelian, n).dim()));
  const bool evidence = v.dim_table[static_cast<std::size_t>(max_degree) - 2] > 0 ||
                        v.dim_table[static_cast<std::size_t>(max_degree) - 1] > 0;
  v.rule = "metabelian-dimension-evidence";
  if (evidence) {
    v.kind = CriterionVerdict::Kind::NotFinitelyGenerated;
    v.note = "no linear invariants, yet invariants persist at degrees " +
             std::to_string(max_degree - 1) + ".." + std::to_string(max_degree) +
             "; with zero linear part the invariant subalgebra is abelian and cannot reach them";
  } else {
    v.kind = CriterionVerdict::Kind::Inconclusive;
    v.note = "no invariants near degree " + std::to_string(max_degree) +
             "; nothing witnesses missing generators in this range";
  }
  return v;
}

/// Constants of the standard one-jordan-block-plus-fixed-axes derivation,
/// checked degree by degree against the subalgebra generated by
/// x1 x2 - x2 x1 together with the annihilated variables x2..xd. Returns the
/// per-degree equality flags for degrees 1..max_degree.
inline std::vector<bool> remark_generation_check(std::size_t d, int max_degree) {
  if (d < 2) throw std::invalid_argument("remark_generation_check: d must be >= 2");
  if (max_degree < 1)
    throw std::invalid_argument("remark_generation_check: max_degree must be >= 1");
  std::vector<int> blocks{2};
  for (std::size_t i = 2; i < d; ++i) blocks.push_back(1);
  const WeitzenbockDerivation delta = weitzenbock_from_blocks(blocks);

  std::vector<bool> ok;

  // Degree-1 layer of the generated subalgebra: the annihilated variables.
  std::vector<LElement> layer;
  for (std::size_t j = 2; j <= d; ++j) layer.push_back(LElement::generator(d, j));
  const std::vector<LElement> letters = layer;

  for (int n = 1; n <= max_degree; ++n) {
    if (n == 2) {
      // v = x1 x2 - x2 x1 enters as the one extra degree-2 generator.
      const LElement x1 = LElement::generator(d, 1);
      const LElement x2 = LElement::generator(d, 2);
      std::vector<LElement> next;
      next.push_back(l_mul(x1, x2) - l_mul(x2, x1));
      for (const auto& a : letters)
        for (const auto& b : letters) next.push_back(l_mul(a, b));
      layer = next;
    } else if (n >= 3) {
      std::vector<LElement> next;
      for (const auto& a : layer)
        for (const auto& b : letters) next.push_back(l_mul(a, b));
      layer = next;
    }

    GradedComponent comp(AlgebraKind::LeftNilpotent, d, n);
    std::vector<VectorQ> vecs;
    for (const auto& w : layer) vecs.push_back(comp.coords_of(w));
    const Subspace generated = span_of(comp.dim(), vecs);
    const GradedInvariantBasis constants = delta_constants(delta, AlgebraKind::LeftNilpotent, n);
    ok.push_back(generated == constants.space);
  }
  return ok;
}

}  // namespace relfree
