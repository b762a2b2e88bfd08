#include "lagext/verify.hpp"

#include <atomic>
#include <thread>

#include <fmt/format.h>

#include "lagext/symplectic.hpp"

namespace lagext {

const char* to_string(Status s) {
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::conflict: return "conflict";
  case Status::skipped: return "skipped";
  }
  return "?";
}

namespace {

std::string name_at(std::size_t pos, std::size_t n_half) {
  if (n_half > 0 && pos >= n_half) return fmt::format("e^{}", pos - n_half + 1);
  return fmt::format("e{}", pos + 1);
}

} // namespace

std::string format_vector(const Vector& v, std::size_t n_half) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const bool dual = n_half > 0 && k >= n_half;
    terms.push_back({Expr::constant(v[k]), {dual ? k - n_half + 1 : k + 1, dual}});
  }
  return format_terms(terms);
}

std::vector<ReportRecord> verify_connection(const std::string& label, const std::string& sample,
                                            const FlatConnection& c, char base,
                                            std::uint64_t seed) {
  std::vector<ReportRecord> out;
  const auto add = [&](const char* check, Status s, std::string witness = {}) {
    out.push_back({label, check, sample, s, std::move(witness)});
  };
  const std::size_t n = c.dim();

  const ConnectionReport rep = check_flat_torsion_free(c);
  if (rep.torsion_free()) {
    add("torsion", Status::pass);
  } else {
    const auto& t = rep.torsion.front();
    add("torsion", Status::fail,
        fmt::format("T({},{}) = {}", name_at(t.i, 0), name_at(t.j, 0), format_vector(t.residual)));
  }

  if (!rep.formulations_agree()) {
    add("flatness", Status::fail, "curvature and associator formulations disagree");
  } else if (rep.flat()) {
    add("flatness", Status::pass);
  } else {
    const auto& r = rep.curvature.front();
    add("flatness", Status::fail,
        fmt::format("R({},{}){} = {}", name_at(r.i, 0), name_at(r.j, 0), name_at(r.k, 0),
                    format_vector(r.residual)));
  }

  const LieAlgebra induced = induced_bracket(c);
  const LieAlgebra declared = base_algebra(base);
  if (induced == declared && c.base() == declared) {
    add("base-bracket-match", Status::pass);
  } else {
    std::string w = "declared base differs from the connection's algebra";
    for (std::size_t i = 0; i < n && induced != declared; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (induced.bracket_basis(i, j) != declared.bracket_basis(i, j)) {
          w = fmt::format("[{},{}] induced {} but declared {}", name_at(i, 0), name_at(j, 0),
                          format_vector(induced.bracket_basis(i, j)),
                          format_vector(declared.bracket_basis(i, j)));
          i = n;
          break;
        }
    add("base-bracket-match", Status::fail, w);
  }

  if (!rep.ok()) {
    add("completeness", Status::skipped, "needs a flat torsion-free connection");
  } else {
    const CompletenessEvidence ev = is_geodesically_complete(c, seed);
    std::string w;
    for (std::size_t i = 0; i < n && w.empty(); ++i) {
      if (!ev.right_traces[i].is_zero())
        w = fmt::format("tr right({}) = {}", name_at(i, 0), ev.right_traces[i].str());
      else if (!ev.left_nilpotent[i]) w = fmt::format("left({}) not nilpotent", name_at(i, 0));
      else if (!ev.right_nilpotent[i]) w = fmt::format("right({}) not nilpotent", name_at(i, 0));
    }
    for (std::size_t s = 0; s < ev.samples.size() && w.empty(); ++s)
      if (!ev.sample_left_nilpotent[s])
        w = fmt::format("left({}) not nilpotent", format_vector(ev.samples[s]));
    add("completeness", w.empty() ? Status::pass : Status::fail, w);
  }

  const TwoCochain zero(n);
  const SymplecticLieAlgebra s = build_extension_unchecked(c, zero);
  const auto jac = check_jacobi(s.algebra);
  if (jac.empty()) {
    add("extension-jacobi", Status::pass);
  } else {
    const auto& v = jac.front();
    add("extension-jacobi", Status::fail,
        fmt::format("Jacobi({},{},{}) = {}", name_at(v.i, n), name_at(v.j, n), name_at(v.k, n),
                    format_vector(v.residual, n)));
  }

  const auto dw = d_omega(s);
  if (dw.empty()) {
    add("extension-closed", Status::pass);
  } else {
    const auto& v = dw.front();
    add("extension-closed", Status::fail,
        fmt::format("domega({},{},{}) = {}", name_at(v.i, n), name_at(v.j, n), name_at(v.k, n),
                    v.residual.str()));
  }

  const IdealVerdict iv = is_lagrangian_ideal(s, *s.lagrangian_ideal);
  const bool ideal_ok = iv.kind == IdealKind::lagrangian && iv.normal;
  if (ideal_ok)
    add("lagrangian-ideal", Status::pass);
  else
    add("lagrangian-ideal", Status::fail,
        fmt::format("h* is {}{}", to_string(iv.kind), iv.normal ? "" : ", not normal"));

  if (!rep.ok() || !jac.empty()) {
    add("extension-nilpotent", Status::skipped, "needs a flat connection and a Lie extension");
  } else {
    try {
      const NilpotencyVerdict nv = extension_nilpotency({c, zero}, seed);
      if (nv.nilpotent)
        add("extension-nilpotent", Status::pass);
      else
        add("extension-nilpotent", Status::fail,
            fmt::format("lower central series stalls at dim {}", nv.lcs_dims.back()));
    } catch (const Error& e) {
      add("extension-nilpotent", Status::fail, e.what());
    }
  }

  if (!ideal_ok || !jac.empty()) {
    add("round-trip", Status::skipped, "needs a Lie extension with Lagrangian ideal h*");
  } else {
    try {
      const FlatConnection back = induced_flat_connection(s, *s.lagrangian_ideal);
      if (back == c) {
        add("round-trip", Status::pass);
      } else {
        std::string w = "recovered bracket differs";
        for (std::size_t i = 0; i < n && w.front() == 'r'; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            Vector a(n), b(n);
            for (std::size_t k = 0; k < n; ++k) {
              a[k] = c.gamma(i, j, k);
              b[k] = back.gamma(i, j, k);
            }
            if (a != b) {
              w = fmt::format("nabla_{} {}: {} recovered as {}", name_at(i, 0), name_at(j, 0),
                              format_vector(a), format_vector(b));
              break;
            }
          }
        add("round-trip", Status::fail, w);
      }
    } catch (const Error& e) {
      add("round-trip", Status::fail, e.what());
    }
  }
  return out;
}

std::vector<ReportRecord> verify_entry(const CatalogEntry& e, const VerifyOptions& opt) {
  std::vector<ReportRecord> out;
  const auto samples = sample_parameters(e, opt.samples, opt.seed);
  for (const auto& s : samples) {
    const std::string id =
        s.values.empty() ? std::to_string(s.index) : fmt::format("{}:{}", s.index, s.str());
    auto inst = instantiate(e, s);
    if (const auto* conflict = std::get_if<ConflictReport>(&inst)) {
      for (const char* check : kCatalogChecks)
        out.push_back({e.label, check, id, Status::conflict, conflict->str()});
      // every sample conflicts the same way
      break;
    }
    auto recs = verify_connection(e.label, id, std::get<FlatConnection>(inst), e.base, opt.seed);
    out.insert(out.end(), std::make_move_iterator(recs.begin()),
               std::make_move_iterator(recs.end()));
  }
  return out;
}

VerifyResult run_verify_catalog(const VerifyOptions& opt) {
  std::vector<const CatalogEntry*> todo;
  for (const auto& e : table1_entries())
    if (!opt.entry || e.label == *opt.entry) todo.push_back(&e);
  if (todo.empty()) throw Error("no catalog entry labeled '" + opt.entry.value_or("") + "'");

  std::vector<std::vector<ReportRecord>> per_entry(todo.size());
  std::vector<std::string> errors(todo.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      try {
        per_entry[i] = verify_entry(*todo[i], opt);
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    }
  };
  std::size_t threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
  threads = std::max<std::size_t>(1, std::min(threads, todo.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  VerifyResult r;
  for (std::size_t i = 0; i < todo.size(); ++i) {
    if (!errors[i].empty())
      per_entry[i].push_back({todo[i]->label, "instantiate", "-", Status::fail, errors[i]});
    for (auto& rec : per_entry[i]) {
      if (rec.status == Status::fail && !todo[i]->suspect) r.exit_code = 1;
      r.records.push_back(std::move(rec));
    }
  }
  return r;
}

std::string format_tsv(const VerifyResult& r) {
  std::string out = "entry\tcheck\tsample\tstatus\twitness\n";
  for (const auto& rec : r.records)
    out += fmt::format("{}\t{}\t{}\t{}\t{}\n", rec.entry, rec.check, rec.sample,
                       to_string(rec.status), rec.witness);
  return out;
}

std::string format_text(const VerifyResult& r) {
  std::string out;
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& rec : r.records) {
    ++counts[static_cast<int>(rec.status)];
    std::string line = fmt::format("{:<6} {:<12} {:<20} {:<8} {}", rec.entry, rec.sample,
                                   rec.check, to_string(rec.status), rec.witness);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  out += fmt::format("{} records: {} pass, {} fail, {} conflict, {} skipped\n", r.records.size(),
                     counts[0], counts[1], counts[2], counts[3]);
  return out;
}

} // namespace lagext
