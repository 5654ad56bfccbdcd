#include <algorithm>
#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relfree/io.hpp"
#include "relfree/relfree.hpp"

namespace {

using namespace relfree;

constexpr std::size_t kMaxDimension = 8;
constexpr int kMaxDegree = 32;

void guard_limits(std::size_t d, int N) {
  if (d > kMaxDimension)
    throw LimitError("d = " + std::to_string(d) + " exceeds the supported limit of " +
                     std::to_string(kMaxDimension));
  if (N > kMaxDegree)
    throw LimitError("degree " + std::to_string(N) + " exceeds the supported limit of " +
                     std::to_string(kMaxDegree));
}

void require_series_dimension(std::size_t d) {
  if (d < 2) throw MalformedInputError("this command needs d >= 2");
}

SymmSeries series_for(AlgebraKind kind, std::size_t d, int N) {
  switch (kind) {
    case AlgebraKind::Polynomial: return glmodule_series_poly(d, N);
    case AlgebraKind::LeftNilpotent: return glmodule_series_L(d, N);
    case AlgebraKind::Metabelian: return glmodule_series_metabelian(d, N);
  }
  throw std::logic_error("series_for: bad kind");
}

/// Degrees start at 0 for polynomials and at 1 for the two graded algebras
/// without a unit.
std::string joined_coeffs(const PowerSeriesQ& s, AlgebraKind kind) {
  std::string out;
  for (std::size_t k = (kind == AlgebraKind::Polynomial ? 0u : 1u); k <= s.order(); ++k) {
    if (!out.empty()) out += ", ";
    out += s[k].str();
  }
  return out;
}

std::string joined_dims(const std::vector<long long>& dims, std::size_t from) {
  std::string out;
  for (std::size_t k = from; k < dims.size(); ++k) {
    if (!out.empty()) out += ", ";
    out += std::to_string(dims[k]);
  }
  return out;
}

FiniteMatrixGroup closed_group(const std::string& path, std::size_t cap) {
  const GroupInput in = load_group_file(path);
  if (in.d < 1) throw MalformedInputError("group dimension must be >= 1");
  guard_limits(in.d, 1);
  return group_closure(in.d, in.generators, cap);
}

bool is_standard_blocks(const std::vector<int>& blocks) {
  // one block of size 2, everything else size 1
  return std::count(blocks.begin(), blocks.end(), 2) == 1 &&
         std::count(blocks.begin(), blocks.end(), 1) ==
             static_cast<long>(blocks.size()) - 1;
}

int cmd_hilbert(AlgebraKind kind, std::size_t d, int N, bool json) {
  guard_limits(d, N);
  require_series_dimension(d);
  const SymmSeries s = series_for(kind, d, N);
  const std::vector<long long> dims = s.hilbert_dims();
  const std::size_t from = (kind == AlgebraKind::Polynomial) ? 0 : 1;
  if (json) {
    ordered_json j;
    j["algebra"] = to_string(kind);
    j["d"] = d;
    j["N"] = N;
    j["first_degree"] = from;
    j["dims"] = std::vector<long long>(dims.begin() + static_cast<long>(from), dims.end());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << joined_dims(dims, from) << "\n";
  }
  return 0;
}

int cmd_decompose(AlgebraKind kind, std::size_t d, int N, bool json) {
  guard_limits(d, N);
  require_series_dimension(d);
  const SymmSeries s = series_for(kind, d, N);
  if (json)
    std::cout << symm_series_json(s).dump(2) << "\n";
  else
    std::cout << s.str();
  return 0;
}

int cmd_molien(AlgebraKind kind, const std::string& group_path, int N, std::size_t cap,
               bool json) {
  const FiniteMatrixGroup G = closed_group(group_path, cap);
  guard_limits(G.d(), N);
  require_series_dimension(G.d());
  const PowerSeriesQ m = molien_series(series_for(kind, G.d(), N), G);
  if (json) {
    ordered_json j;
    j["algebra"] = to_string(kind);
    j["d"] = G.d();
    j["N"] = N;
    j["group_order"] = G.order();
    const std::size_t from = (kind == AlgebraKind::Polynomial) ? 0 : 1;
    j["first_degree"] = from;
    ordered_json dims = ordered_json::array();
    for (std::size_t k = from; k <= m.order(); ++k) dims.push_back(m[k].str());
    j["dims"] = std::move(dims);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << joined_coeffs(m, kind) << "\n";
  }
  return 0;
}

int cmd_invariants(AlgebraKind kind, const std::string& group_path, int N, std::size_t cap,
                   bool json) {
  const FiniteMatrixGroup G = closed_group(group_path, cap);
  guard_limits(G.d(), N);
  ordered_json degrees = ordered_json::array();
  for (int n = 1; n <= N; ++n) {
    const GradedInvariantBasis inv = fixed_space(G, kind, n);
    GradedComponent comp(kind, G.d(), n);
    std::vector<std::string> elements;
    for (const auto& v : inv.space.basis()) {
      switch (kind) {
        case AlgebraKind::Polynomial: elements.push_back(comp.poly_element(v).str()); break;
        case AlgebraKind::LeftNilpotent: elements.push_back(comp.l_element(v).str()); break;
        case AlgebraKind::Metabelian: elements.push_back(comp.metab_element(v).str()); break;
      }
    }
    if (json) {
      ordered_json row;
      row["n"] = n;
      row["dim"] = inv.dim();
      row["basis"] = elements;
      degrees.push_back(std::move(row));
    } else {
      std::cout << "degree " << n << ": dim " << inv.dim() << "\n";
      for (const auto& e : elements) std::cout << "  " << e << "\n";
    }
  }
  if (json) {
    ordered_json j;
    j["algebra"] = to_string(kind);
    j["d"] = G.d();
    j["N"] = N;
    j["group_order"] = G.order();
    j["degrees"] = std::move(degrees);
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_modgen(const std::string& group_path, int N, std::size_t cap, bool as_algebra,
               bool json) {
  const FiniteMatrixGroup G = closed_group(group_path, cap);
  guard_limits(G.d(), N);
  if (N < 2) throw MalformedInputError("modgen needs --degree >= 2");
  const ModGenReport rep =
      as_algebra ? algebra_generator_report(G, N) : module_generator_report(G, N);
  if (json) {
    ordered_json j = modgen_report_json(rep);
    j["as_algebra"] = as_algebra;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "linear_invariant_dim: " << rep.linear_invariant_dim << "\n";
    for (const auto& r : rep.rows)
      std::cout << "n=" << r.n << ": invariants " << r.dim_invariants << ", module_span "
                << r.dim_module_span << ", new_generators " << r.new_generators << "\n";
  }
  return 0;
}

void print_verdict_text(const CriterionVerdict& v) {
  std::cout << "verdict: " << to_string(v.kind) << "\n";
  std::cout << "rule: " << v.rule << "\n";
  for (const auto& [k, val] : v.numbers) std::cout << k << ": " << val << "\n";
  if (!v.dim_table.empty()) std::cout << "dims (1..N): " << joined_dims(v.dim_table, 0) << "\n";
  if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
}

int cmd_check(const std::string& criterion, const std::string& group_path, int N,
              std::size_t cap, bool json) {
  const FiniteMatrixGroup G = closed_group(group_path, cap);
  guard_limits(G.d(), N);
  CriterionVerdict v;
  if (criterion == "finite-group") {
    v = check_finite_group(G);
  } else if (criterion == "metabelian") {
    require_series_dimension(G.d());
    if (N < 2) throw MalformedInputError("the metabelian check needs --degree >= 2");
    v = check_metabelian(G, N);
  } else {
    throw MalformedInputError("unknown criterion: " + criterion);
  }
  if (json) {
    ordered_json j;
    j["criterion"] = criterion;
    j.update(verdict_json(v));
    std::cout << j.dump(2) << "\n";
  } else {
    print_verdict_text(v);
  }
  return 0;
}

int cmd_weitzenbock(const std::vector<int>& blocks, AlgebraKind kind, int N, bool json) {
  long long dsum = 0;
  for (int b : blocks) dsum += b;
  guard_limits(static_cast<std::size_t>(dsum), N);
  const CriterionVerdict v = check_weitzenbock(blocks);
  const WeitzenbockDerivation delta = weitzenbock_from_blocks(blocks);

  std::vector<long long> constants;
  for (int n = 1; n <= N; ++n)
    constants.push_back(static_cast<long long>(delta_constants(delta, kind, n).dim()));

  std::vector<bool> remark;
  if (is_standard_blocks(blocks) && delta.d >= 2)
    remark = remark_generation_check(delta.d, N);

  if (json) {
    ordered_json j;
    j["blocks"] = blocks;
    j["algebra"] = to_string(kind);
    j["N"] = N;
    j.update(verdict_json(v));
    j["constants_dims"] = constants;
    if (!remark.empty()) {
      std::vector<bool> r(remark.begin(), remark.end());
      j["remark_generation"] = r;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    print_verdict_text(v);
    std::cout << "constants dims (" << to_string(kind) << ", degrees 1..N): "
              << joined_dims(constants, 0) << "\n";
    if (!remark.empty()) {
      std::cout << "generation check (degrees 1..N): ";
      for (std::size_t i = 0; i < remark.size(); ++i)
        std::cout << (i ? ", " : "") << (remark[i] ? "ok" : "MISMATCH");
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_closure(const std::string& group_path, std::size_t cap, bool json) {
  const FiniteMatrixGroup G = closed_group(group_path, cap);
  if (json) {
    ordered_json j;
    j["d"] = G.d();
    j["order"] = G.order();
    ordered_json elems = ordered_json::array();
    for (const auto& m : G.elements()) elems.push_back(matrix_json(m));
    j["elements"] = std::move(elems);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "d: " << G.d() << "\n";
    std::cout << "order: " << G.order() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relfree: exact invariant computations in relatively free algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("-f,--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string algebra = "L";
  std::size_t d = 2;
  int N = 8;
  std::string group_path;
  std::string criterion = "finite-group";
  std::size_t cap = relfree::kDefaultGroupCap;
  std::vector<int> blocks;
  std::string blocks_path;
  bool as_algebra = false;

  const std::string algebra_help = "algebra: poly | L | metab";

  auto* hilbert = app.add_subcommand("hilbert", "dimensions of the graded components");
  hilbert->add_option("-a,--algebra", algebra, algebra_help);
  hilbert->add_option("-d,--d", d, "number of generators")->required();
  hilbert->add_option("-n,--degree", N, "degree bound")->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "multiplicities of the irreducible summands");
  decompose->add_option("-a,--algebra", algebra, algebra_help);
  decompose->add_option("-d,--d", d, "number of generators")->required();
  decompose->add_option("-n,--degree", N, "degree bound")->capture_default_str();

  auto* molien = app.add_subcommand("molien", "invariant dimensions per degree for a group");
  molien->add_option("-a,--algebra", algebra, algebra_help);
  molien->add_option("-g,--group", group_path, "group JSON file")->required();
  molien->add_option("-n,--degree", N, "degree bound")->capture_default_str();
  molien->add_option("--cap", cap, "closure element cap")->capture_default_str();

  auto* invariants = app.add_subcommand("invariants", "bases of the invariant subspaces");
  invariants->add_option("-a,--algebra", algebra, algebra_help);
  invariants->add_option("-g,--group", group_path, "group JSON file")->required();
  invariants->add_option("-n,--degree", N, "degree bound")->capture_default_str();
  invariants->add_option("--cap", cap, "closure element cap")->capture_default_str();

  auto* modgen = app.add_subcommand("modgen", "degree-by-degree generator report");
  modgen->add_option("-g,--group", group_path, "group JSON file")->required();
  modgen->add_option("-n,--degree", N, "degree bound")->capture_default_str();
  modgen->add_option("--cap", cap, "closure element cap")->capture_default_str();
  modgen->add_flag("--as-algebra", as_algebra, "count algebra generators instead");

  auto* check = app.add_subcommand("check", "finite-generation criteria");
  check->add_option("-c,--criterion", criterion, "finite-group | metabelian")
      ->capture_default_str();
  check->add_option("-g,--group", group_path, "group JSON file")->required();
  check->add_option("-n,--degree", N, "degree bound for the metabelian check")
      ->capture_default_str();
  check->add_option("--cap", cap, "closure element cap")->capture_default_str();

  auto* weitzenbock = app.add_subcommand("weitzenbock", "nilpotent derivation analysis");
  auto* opt_blocks = weitzenbock->add_option("-b,--blocks", blocks, "block sizes, e.g. -b 2 1");
  auto* opt_bfile = weitzenbock->add_option("--blocks-file", blocks_path, "derivation JSON file");
  opt_blocks->excludes(opt_bfile);
  weitzenbock->add_option("-a,--algebra", algebra, algebra_help);
  weitzenbock->add_option("-n,--degree", N, "degree bound")->capture_default_str();

  auto* closure = app.add_subcommand("closure", "group generated by the given matrices");
  closure->add_option("-g,--group", group_path, "group JSON file")->required();
  closure->add_option("--cap", cap, "closure element cap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  using namespace relfree;
  try {
    if (N < 1) throw MalformedInputError("--degree must be >= 1");
    const bool json = (format == "json");
    const AlgebraKind kind = parse_algebra_kind(algebra);
    if (hilbert->parsed()) return cmd_hilbert(kind, d, N, json);
    if (decompose->parsed()) return cmd_decompose(kind, d, N, json);
    if (molien->parsed()) return cmd_molien(kind, group_path, N, cap, json);
    if (invariants->parsed()) return cmd_invariants(kind, group_path, N, cap, json);
    if (modgen->parsed()) return cmd_modgen(group_path, N, cap, as_algebra, json);
    if (check->parsed()) return cmd_check(criterion, group_path, N, cap, json);
    if (weitzenbock->parsed()) {
      if (!blocks_path.empty()) blocks = load_blocks_file(blocks_path);
      if (blocks.empty())
        throw MalformedInputError("weitzenbock needs --blocks or --blocks-file");
      return cmd_weitzenbock(blocks, kind, N, json);
    }
    if (closure->parsed()) return cmd_closure(group_path, cap, json);
    throw std::logic_error("no subcommand dispatched");
  } catch (const MalformedInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonFiniteGroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
