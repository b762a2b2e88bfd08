#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lagext/spec_format.hpp"

namespace lagext {

struct CatalogEntry {
  std::string label; // a_3, l_26, t_17, ...
  char base = 'a';
  AlgebraBlock block;
  bool suspect = false; // some connection cell is written twice
};

/// Embedded catalog text (data/table1.spec).
const std::string& table1_text();
/// Parsed once; 70 entries in table order.
const std::vector<CatalogEntry>& table1_entries();
/// nullptr when absent.
const CatalogEntry* find_entry(const std::string& label);

struct ParameterSample {
  ParamValues values;
  std::uint64_t seed = 0;
  std::size_t index = 0;
  /// "t=1,mu=2" or "" without parameters.
  [[nodiscard]] std::string str() const;
};

/// k distinct assignments satisfying every constraint, deterministic in
/// seed. The pool {1, 2, 1/3, -1, -1/2, 3} is rotated by seed and extended
/// by 4, 5, 6, ... when too few combinations qualify; several parameters
/// are enumerated jointly by increasing index sum. An entry without
/// parameters yields one empty sample.
std::vector<ParameterSample> sample_parameters(const CatalogEntry& e, std::size_t k,
                                               std::uint64_t seed);

struct ConflictReport {
  std::string label;
  std::vector<DuplicateCell> duplicates;
  [[nodiscard]] std::string str() const;
};

/// Throws PreconditionError when the sample violates a constraint.
std::variant<FlatConnection, ConflictReport> instantiate(const CatalogEntry& e,
                                                         const ParameterSample& s);

/// Eight-dimensional symplectic filiform algebras: symplectic forms kept as
/// printed. No bracket data exists for them, so nothing is checked.
struct FiliformFormRecord {
  std::string algebra;
  std::string form;
  std::string coefficients;
  std::string remarks;
};
const std::vector<FiliformFormRecord>& filiform_form_records();

} // namespace lagext
