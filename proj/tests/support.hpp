#pragma once

#include "lagext/catalog.hpp"

namespace testing {

// Connection of a catalog row at its k-th constrained sample.
inline lagext::FlatConnection entry_connection(const std::string& label, std::size_t k = 0,
                                               std::uint64_t seed = 0) {
  const lagext::CatalogEntry* e = lagext::find_entry(label);
  if (!e) throw lagext::Error("unknown entry " + label);
  const auto samples = lagext::sample_parameters(*e, k + 1, seed);
  return std::get<lagext::FlatConnection>(lagext::instantiate(*e, samples[k]));
}

inline lagext::Vector vec(std::initializer_list<lagext::Rational> xs) { return {xs}; }

} // namespace testing
