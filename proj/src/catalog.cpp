#include "lagext/catalog.hpp"

#include <fmt/format.h>

namespace lagext {

namespace detail {
extern const char* const table1_source;
}

const std::string& table1_text() {
  static const std::string text = detail::table1_source;
  return text;
}

const std::vector<CatalogEntry>& table1_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (auto& b : parse_spec(table1_text()).blocks) {
      CatalogEntry e;
      e.label = b.name;
      e.base = b.base.value_or('a');
      e.suspect = !connection_duplicates(b).empty();
      e.block = std::move(b);
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

const CatalogEntry* find_entry(const std::string& label) {
  for (const auto& e : table1_entries())
    if (e.label == label) return &e;
  return nullptr;
}

std::string ParameterSample::str() const {
  std::string out;
  for (const auto& [name, v] : values) {
    if (!out.empty()) out += ',';
    out += name + "=" + v.str();
  }
  return out;
}

namespace {

constexpr std::size_t kMaxPoolGrowth = 64;

std::vector<Rational> pool(std::uint64_t seed, std::size_t size) {
  const std::vector<Rational> base{1, 2, Rational(1, 3), -1, Rational(-1, 2), 3};
  std::vector<Rational> out;
  const std::size_t shift = seed % base.size();
  for (std::size_t i = 0; i < base.size(); ++i) out.push_back(base[(i + shift) % base.size()]);
  for (long next = 4; out.size() < size; ++next) out.push_back(next);
  return out;
}

// Index tuples of length p with entries < bound and the given sum, in
// lexicographic order.
void tuples_with_sum(std::size_t p, std::size_t bound, std::size_t sum,
                     std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() + 1 == p) {
    if (sum < bound) {
      cur.push_back(sum);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (std::size_t v = 0; v < bound && v <= sum; ++v) {
    cur.push_back(v);
    tuples_with_sum(p, bound, sum - v, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<ParameterSample> sample_parameters(const CatalogEntry& e, std::size_t k,
                                               std::uint64_t seed) {
  if (k == 0) throw PreconditionError("at least one sample is required");
  const auto& params = e.block.params;
  if (params.empty()) return {ParameterSample{{}, seed, 0}};

  const std::size_t p = params.size();
  for (std::size_t size = 6; size <= 6 + kMaxPoolGrowth; ++size) {
    const std::vector<Rational> values = pool(seed, size);
    std::vector<ParameterSample> out;
    for (std::size_t sum = 0; sum <= p * (size - 1) && out.size() < k; ++sum) {
      std::vector<std::vector<std::size_t>> tuples;
      std::vector<std::size_t> cur;
      tuples_with_sum(p, size, sum, cur, tuples);
      for (const auto& t : tuples) {
        ParamValues assignment;
        for (std::size_t i = 0; i < p; ++i) assignment.emplace_back(params[i].name, values[t[i]]);
        if (!satisfies(e.block, assignment)) continue;
        out.push_back({std::move(assignment), seed, out.size()});
        if (out.size() == k) break;
      }
    }
    if (out.size() == k) return out;
  }
  throw Error(fmt::format("cannot find {} parameter samples for {} satisfying its constraints", k,
                          e.label));
}

std::string ConflictReport::str() const {
  std::string out;
  for (const auto& d : duplicates) {
    if (!out.empty()) out += "; ";
    out += fmt::format("({},{}) assigned", basis_name({d.i + 1, false}), basis_name({d.j + 1, false}));
    for (std::size_t c = 0; c < d.claims.size(); ++c)
      out += (c == 0 ? " " : " and ") + format_terms(d.claims[c]);
  }
  return out;
}

std::variant<FlatConnection, ConflictReport> instantiate(const CatalogEntry& e,
                                                         const ParameterSample& s) {
  if (!satisfies(e.block, s.values))
    throw PreconditionError(fmt::format("sample {} violates the constraints of {}", s.str(), e.label));
  auto dups = connection_duplicates(e.block);
  if (!dups.empty()) return ConflictReport{e.label, std::move(dups)};
  return to_connection(e.block, s.values);
}

const std::vector<FiliformFormRecord>& filiform_form_records() {
  static const std::vector<FiliformFormRecord> records{
      {R"(g_{8,80}^{a,b,c,d,\lambda,\mu,\mu_1})",
       R"(\omega=\kappa_1e^{13}+e^{15}+\kappa_2 e^{23}+e^{26}+e^{37}+e^{48})",
       R"((\kappa_1=c,\kappa_2=d-\lambda)\in\mathbb{R})", R"(b(\mu_1-1)(\mu+1)\neq0)"},
      {R"(g_{8,90}^{a,b,c,d,\lambda})",
       R"(\omega=\kappa_1e^{13}+e^{15}+\kappa_2 e^{23}+e^{26}+e^{37}+e^{48})",
       R"((\kappa_1=-c,\kappa_2=a-d)\in\mathbb{R})", R"(\lambda\neq0)"},
      {R"(g_{8,91}^{a,b,c,d,\lambda})", R"(\omega=e^{15}+\kappa e^{23}+e^{26}+e^{37}+e^{48})",
       R"((\kappa=c-\lambda)\in\mathbb{R})", R"(b-d\neq0)"},
      {R"(g_{8,93}^{a,b,c,d,\lambda})", R"(\omega=e^{15}+\kappa e^{23}+e^{26}+e^{37}+e^{48})",
       R"((\kappa=-d-\frac{8c}{5})\in\mathbb{R})", R"(b\neq0)"},
      {R"(g_{8,95}^{a,b,c,d,\lambda})", R"(\omega=e^{15}+\kappa e^{23}+e^{26}+e^{37}+e^{48})",
       R"((\kappa=b-d-\frac{1}{5}(3a+8c))\in\mathbb{R})", R"(b\neq0)"},
  };
  return records;
}

} // namespace lagext
