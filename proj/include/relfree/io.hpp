#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "relfree/errors.hpp"
#include "relfree/finite_generation.hpp"
#include "relfree/matrix.hpp"
#include "relfree/partition.hpp"
#include "relfree/rational.hpp"
#include "relfree/symm_series.hpp"

namespace relfree {

using ordered_json = nlohmann::ordered_json;

/// A group description as read from disk: the dimension and the generator
/// matrices, before closure.
struct GroupInput {
  std::size_t d = 0;
  std::vector<MatrixQ> generators;
};

inline Rational rational_from_string(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::invalid_argument& e) {
    throw MalformedInputError(std::string("bad rational '") + s + "': " + e.what());
  }
}

namespace detail {

inline Rational rational_from_json(const ordered_json& j) {
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw MalformedInputError("matrix entries must be integers or \"p/q\" strings");
}

inline MatrixQ matrix_from_json(const ordered_json& j, std::size_t d) {
  if (!j.is_array() || j.size() != d)
    throw MalformedInputError("a matrix must be an array of " + std::to_string(d) + " rows");
  MatrixQ m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != d)
      throw MalformedInputError("matrix row " + std::to_string(i) + " must have " +
                                std::to_string(d) + " entries");
    for (std::size_t k = 0; k < d; ++k) m.at(i, k) = rational_from_json(row[k]);
  }
  return m;
}

}  // namespace detail

/// {"d": 2, "generators": [[[...row...], ...], ...]}; entries are integers or
/// "p/q" strings, rows are listed top to bottom.
inline GroupInput group_from_json(const ordered_json& j) {
  if (!j.is_object()) throw MalformedInputError("group input must be a JSON object");
  if (!j.contains("d") || !j["d"].is_number_integer() || j["d"].get<long long>() < 1)
    throw MalformedInputError("group input needs a positive integer field \"d\"");
  const std::size_t d = static_cast<std::size_t>(j["d"].get<long long>());
  if (!j.contains("generators") || !j["generators"].is_array())
    throw MalformedInputError("group input needs an array field \"generators\"");
  GroupInput g;
  g.d = d;
  for (const auto& gen : j["generators"]) g.generators.push_back(detail::matrix_from_json(gen, d));
  return g;
}

/// {"blocks": [2, 1]}; block sizes of a nilpotent derivation in Jordan form.
inline std::vector<int> blocks_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
    throw MalformedInputError("derivation input needs an array field \"blocks\"");
  std::vector<int> blocks;
  for (const auto& b : j["blocks"]) {
    if (!b.is_number_integer() || b.get<long long>() < 1)
      throw MalformedInputError("block sizes must be positive integers");
    blocks.push_back(static_cast<int>(b.get<long long>()));
  }
  if (blocks.empty()) throw MalformedInputError("derivation needs at least one block");
  return blocks;
}

inline ordered_json parse_json_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInputError(std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GroupInput load_group_file(const std::string& path) {
  return group_from_json(parse_json_text(read_text_file(path)));
}

inline std::vector<int> load_blocks_file(const std::string& path) {
  return blocks_from_json(parse_json_text(read_text_file(path)));
}

inline ordered_json matrix_json(const MatrixQ& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ordered_json group_json(const GroupInput& g) {
  ordered_json j;
  j["d"] = g.d;
  j["generators"] = ordered_json::array();
  for (const auto& m : g.generators) j["generators"].push_back(matrix_json(m));
  return j;
}

inline ordered_json symm_series_json(const SymmSeries& s) {
  ordered_json j;
  j["d"] = s.d();
  j["N"] = s.truncation();
  ordered_json terms = ordered_json::array();
  std::vector<std::pair<Partition, long long>> rows(s.terms().begin(), s.terms().end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first.weight() != b.first.weight()) return a.first.weight() < b.first.weight();
    return a.first < b.first;
  });
  for (const auto& [lambda, mult] : rows) {
    ordered_json t;
    t["partition"] = lambda.parts();
    t["mult"] = mult;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline SymmSeries symm_series_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("N") || !j.contains("terms"))
    throw MalformedInputError("series input needs fields \"d\", \"N\", \"terms\"");
  if (!j["d"].is_number_integer() || !j["N"].is_number_integer() || !j["terms"].is_array())
    throw MalformedInputError("series fields have the wrong types");
  SymmSeries s(static_cast<std::size_t>(j["d"].get<long long>()),
               static_cast<int>(j["N"].get<long long>()));
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("partition") || !t.contains("mult"))
      throw MalformedInputError("each series term needs \"partition\" and \"mult\"");
    std::vector<int> parts;
    for (const auto& p : t["partition"]) {
      if (!p.is_number_integer()) throw MalformedInputError("partition parts must be integers");
      parts.push_back(static_cast<int>(p.get<long long>()));
    }
    try {
      s.set(Partition(parts), t["mult"].get<long long>());
    } catch (const std::invalid_argument& e) {
      throw MalformedInputError(std::string("bad series term: ") + e.what());
    }
  }
  return s;
}

inline ordered_json modgen_report_json(const ModGenReport& rep) {
  ordered_json j;
  j["d"] = rep.d;
  j["max_degree"] = rep.max_degree;
  j["linear_invariant_dim"] = rep.linear_invariant_dim;
  ordered_json degrees = ordered_json::array();
  for (const auto& row : rep.rows) {
    ordered_json r;
    r["n"] = row.n;
    r["dim_invariants"] = row.dim_invariants;
    r["dim_module_span"] = row.dim_module_span;
    r["new_generators"] = row.new_generators;
    degrees.push_back(std::move(r));
  }
  j["degrees"] = std::move(degrees);
  return j;
}

inline ordered_json verdict_json(const CriterionVerdict& v) {
  ordered_json j;
  j["verdict"] = to_string(v.kind);
  j["rule"] = v.rule;
  if (!v.numbers.empty()) {
    ordered_json nums;
    for (const auto& [k, val] : v.numbers) nums[k] = val;
    j["numbers"] = std::move(nums);
  }
  if (!v.dim_table.empty()) j["dim_table"] = v.dim_table;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace relfree
