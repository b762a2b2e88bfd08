#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lagext/catalog.hpp"

namespace lagext {

enum class Status { pass, fail, conflict, skipped };
const char* to_string(Status s);

struct ReportRecord {
  std::string entry;
  std::string check;
  std::string sample; // "0", or "0:t=1" when the entry has parameters
  Status status = Status::pass;
  std::string witness;
};

inline constexpr std::array<const char*, 9> kCatalogChecks{
    "torsion",         "flatness",         "base-bracket-match",
    "completeness",    "extension-jacobi", "extension-closed",
    "lagrangian-ideal", "extension-nilpotent", "round-trip"};

struct VerifyOptions {
  std::size_t samples = 3;
  std::uint64_t seed = 0;
  std::optional<std::string> entry;
  std::size_t threads = 0; // 0: hardware concurrency
};

struct VerifyResult {
  std::vector<ReportRecord> records;
  int exit_code = 0; // 0 iff no fail among non-suspect entries
};

/// Records for one instantiated connection, one per check, in check order.
std::vector<ReportRecord> verify_connection(const std::string& label, const std::string& sample,
                                            const FlatConnection& c, char base,
                                            std::uint64_t seed);

std::vector<ReportRecord> verify_entry(const CatalogEntry& e, const VerifyOptions& opt);

/// Entries run concurrently; records come back in catalog order.
/// Throws Error for an unknown --entry label.
VerifyResult run_verify_catalog(const VerifyOptions& opt);

std::string format_text(const VerifyResult& r);
std::string format_tsv(const VerifyResult& r);

/// Coordinates as "a e1 + b e^2"; positions >= n_half are dual when n_half > 0.
std::string format_vector(const Vector& v, std::size_t n_half = 0);

} // namespace lagext
