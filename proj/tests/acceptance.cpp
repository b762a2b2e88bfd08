// Acceptance run: one PASS/FAIL line per criterion.
// usage: acceptance PATH_TO_LAGEXT

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>

#include <fmt/format.h>

#include "lagext/cohomology.hpp"
#include "lagext/sampler.hpp"
#include "lagext/verify.hpp"
#include "oracle.hpp"

using namespace lagext;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    else if (detail.size() < 400) detail += "; " + why;
    pass = false;
  }
};

int failures = 0;

template <class F>
void criterion(int id, const char* name, double budget_s, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && s > budget_s) o.fail(fmt::format("took {:.2f}s, budget {:.0f}s", s, budget_s));
  if (!o.pass) ++failures;
  fmt::print("[{}] {} {} ({:.2f}s){}\n", o.pass ? "PASS" : "FAIL", id, name, s,
             o.detail.empty() ? "" : "  " + o.detail);
  std::fflush(stdout);
}

const char* const kRandomEntries[] = {"a_3", "l_3", "l_26", "t_1", "t_13", "t_21"};

FlatConnection connection_of(const std::string& label, std::size_t k = 0) {
  const CatalogEntry& e = *find_entry(label);
  return std::get<FlatConnection>(instantiate(e, sample_parameters(e, k + 1, 0)[k]));
}

TwoCochain combination(const Subspace& z, RationalSampler& rng, std::size_t n) {
  Vector v(z.ambient_dim());
  for (const auto& b : z.basis()) axpy(v, rng.next(), b);
  return TwoCochain::unflatten(n, v);
}

oracle::Tensor tensor_of(const TwoCochain& a) {
  oracle::Tensor t(a.dim());
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (std::size_t k = 0; k < t.n; ++k) t(i, j, k) = oracle::from(a(i, j, k));
  return t;
}

std::string run(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw Error("cannot run " + cmd);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  pclose(p);
  return out;
}

// failing (entry, check) pairs of a sweep, excluding suspect rows
std::map<std::string, std::set<std::string>> failing(const VerifyResult& r,
                                                     const std::set<std::string>& checks) {
  std::map<std::string, std::set<std::string>> out;
  for (const auto& rec : r.records) {
    if (!checks.count(rec.check) || find_entry(rec.entry)->suspect) continue;
    if (rec.status != Status::pass) out[rec.entry].insert(rec.check + ":" + to_string(rec.status));
  }
  return out;
}

std::string describe(const std::map<std::string, std::set<std::string>>& f) {
  std::string out;
  for (const auto& [entry, checks] : f) {
    out += (out.empty() ? "" : ", ") + entry + " [";
    std::string c;
    for (const auto& x : checks) c += (c.empty() ? "" : " ") + x;
    out += c + "]";
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance PATH_TO_LAGEXT\n";
    return 2;
  }
  const std::string cli = argv[1];

  VerifyOptions opt;
  opt.samples = 3;
  opt.seed = 0;
  VerifyResult sweep;

  criterion(1, "catalog soundness sweep", 10, [&](Outcome& o) {
    sweep = run_verify_catalog(opt);
    std::map<std::string, std::size_t> samples;
    std::size_t conflict_rows = 0;
    for (const auto& e : table1_entries()) {
      if (e.suspect) {
        std::size_t c = 0;
        for (const auto& r : sweep.records)
          if (r.entry == e.label && r.status == Status::conflict) ++c;
        if (c == kCatalogChecks.size()) ++conflict_rows;
        else o.fail(e.label + " lacks conflict records");
        continue;
      }
      const auto ss = sample_parameters(e, 3, 0);
      if (!e.block.params.empty() && ss.size() < 3) o.fail(e.label + " has fewer than 3 samples");
      // reference check of torsion and flatness on every sample
      for (const auto& s : ss) {
        const FlatConnection c = std::get<FlatConnection>(instantiate(e, s));
        const auto g = oracle::christoffel(c);
        const auto br = oracle::brackets(c.base());
        const ConnectionReport rep = check_flat_torsion_free(c);
        if (rep.torsion_free() != oracle::torsion_free(g, br) ||
            rep.flat() != oracle::flat(g, br))
          o.fail(e.label + " disagrees with the reference at " + s.str());
      }
    }
    if (conflict_rows != 3) o.fail(fmt::format("{} conflict rows, expected 3", conflict_rows));
    const auto f = failing(sweep, {"torsion", "flatness", "base-bracket-match", "completeness"});
    if (!f.empty()) o.fail("not passing: " + describe(f));
  });

  criterion(2, "extension sweep with zero cocycle", 10, [&](Outcome& o) {
    for (const auto& e : table1_entries()) {
      if (e.suspect) continue;
      for (const auto& s : sample_parameters(e, 3, 0)) {
        const FlatConnection c = std::get<FlatConnection>(instantiate(e, s));
        const SymplecticLieAlgebra x = build_extension_unchecked(c, TwoCochain(4));
        const auto ref = oracle::extension(oracle::christoffel(c), oracle::brackets(c.base()),
                                           oracle::Tensor(4));
        if (!(oracle::brackets(x.algebra) == ref)) o.fail(e.label + " bracket table differs");
        if (check_jacobi(x.algebra).empty() != oracle::jacobi(ref) ||
            d_omega(x).empty() != oracle::closed(ref))
          o.fail(e.label + " disagrees with the reference");
      }
    }
    const auto f = failing(sweep, {"extension-jacobi", "extension-closed", "lagrangian-ideal",
                                   "extension-nilpotent"});
    if (!f.empty()) o.fail("not passing: " + describe(f));
  });

  std::vector<SymplecticLieAlgebra> built;

  criterion(3, "round trip through the induced connection", 0, [&](Outcome& o) {
    const auto f = failing(sweep, {"round-trip"});
    if (!f.empty()) o.fail("not passing: " + describe(f));
    std::size_t trials = 0;
    std::set<std::string> entries;
    for (const char* label : kRandomEntries) {
      const FlatConnection c = connection_of(label);
      const Subspace z2l = cocycle_bases(dual_representation(c)).z2l;
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        RationalSampler rng(1000 + seed);
        const TwoCochain a = combination(z2l, rng, 4);
        const SymplecticLieAlgebra s = build_extension({c, a});
        built.push_back(s);
        ++trials;
        entries.insert(label);
        if (!(induced_flat_connection(s, *s.lagrangian_ideal) == c))
          o.fail(fmt::format("{} seed {} not recovered", label, seed));
      }
    }
    if (trials < 20 || entries.size() < 5) o.fail("too few random cocycles");
    o.detail += fmt::format("{}{} random Lagrangian cocycles over {} rows", o.pass ? "" : "; ",
                            trials, entries.size());
  });

  criterion(4, "Bianchi identity iff closed", 30, [&](Outcome& o) {
    std::size_t trials = 0, closed = 0;
    for (const char* label : kRandomEntries) {
      const FlatConnection c = connection_of(label);
      const Subspace z2 = cocycle_bases(dual_representation(c)).z2;
      const Subspace z2l = cocycle_bases(dual_representation(c)).z2l;
      RationalSampler rng(77);
      for (int k = 0; k < 20; ++k) {
        // every fourth draw from Z2_L so both outcomes occur
        const TwoCochain a = combination(k % 4 == 0 ? z2l : z2, rng, 4);
        const SymplecticLieAlgebra s = build_extension({c, a});
        const bool dw = d_omega(s).empty();
        const bool ref = oracle::closed(
            oracle::extension(oracle::christoffel(c), oracle::brackets(c.base()), tensor_of(a)));
        ++trials;
        closed += dw;
        if (dw != check_bianchi(a) || dw != ref) o.fail(fmt::format("{} draw {} disagrees", label, k));
      }
    }
    if (trials < 100) o.fail("too few trials");
    if (closed == 0 || closed == trials) o.fail("only one outcome sampled");
    o.detail += fmt::format("{}{} cocycles, {} closed", o.pass ? "" : "; ", trials, closed);
  });

  criterion(5, "cohomology of the zero connection", 1, [&](Outcome& o) {
    const std::size_t expect[][2] = {{2, 2}, {9, 8}, {24, 20}};
    for (std::size_t n = 2; n <= 4; ++n) {
      const FlatConnection c(abelian_algebra(n));
      const CohomologySummary s = cohomology(dual_representation(c));
      const oracle::Dims d =
          oracle::cohomology_dims(oracle::christoffel(c), oracle::brackets(c.base()));
      const std::size_t z = n * n * (n - 1) / 2, zl = z - n * (n - 1) * (n - 2) / 6;
      if (s.z2_dim != z || s.z2l_dim != zl || d.z2 != z || d.z2l != zl ||
          z != expect[n - 2][0] || zl != expect[n - 2][1])
        o.fail(fmt::format("n={}: Z2 {} (reference {}), Z2_L {} (reference {})", n, s.z2_dim,
                           d.z2, s.z2l_dim, d.z2l));
    }
  });

  criterion(6, "equivalence maps and adjusted forms", 10, [&](Outcome& o) {
    RationalSampler rng(606);
    std::size_t trials = 0;
    for (const char* label : kRandomEntries) {
      const FlatConnection c = connection_of(label);
      const DualRep r = dual_representation(c);
      const Subspace z2l = cocycle_bases(r).z2l;
      for (int k = 0; k < 4; ++k, ++trials) {
        const TwoCochain a = combination(z2l, rng, 4);
        OneCochain sigma(4), sym(4);
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) sigma(i, j) = rng.next();
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = i; j < 4; ++j) sym(i, j) = sym(j, i) = rng.next();
        const ExtensionTriple t{c, a};
        const ExtensionTriple t2{c, a - coboundary_1(r, sigma)};
        const ExtensionTriple t3{c, a - coboundary_1(r, sym)};
        const RatMatrix psi = equivalence_map_psi(t, t2, sigma);
        if (!preserves_bracket(psi, build_extension(t).algebra, build_extension(t2).algebra))
          o.fail(fmt::format("{} trial {}: Psi not a homomorphism", label, k));
        const RatMatrix psi3 = equivalence_map_psi(t, t3, sym);
        if (!preserves_bracket(psi3, build_extension(t).algebra, build_extension(t3).algebra))
          o.fail(fmt::format("{} trial {}: symmetric Psi not a homomorphism", label, k));
        if (!(pullback(psi3, standard_omega(4)) == standard_omega(4)))
          o.fail(fmt::format("{} trial {}: symmetric Psi does not preserve omega", label, k));
        const RatMatrix w = adjusted_symplectic_form(t, sigma, sym);
        const SymplecticLieAlgebra bar{build_extension(t2).algebra, w, std::nullopt};
        if (!(w.transpose() == Rational(-1) * w) || rank(w) != 8 || !d_omega(bar).empty())
          o.fail(fmt::format("{} trial {}: adjusted form not symplectic", label, k));
      }
    }
    if (trials < 20) o.fail("too few trials");
    o.detail += fmt::format("{}{} random sigma", o.pass ? "" : "; ", trials);
  });

  criterion(7, "canonical connection of every built extension", 10, [&](Outcome& o) {
    std::size_t count = 0;
    for (const auto& e : table1_entries()) {
      if (e.suspect) continue;
      for (const auto& s : sample_parameters(e, 3, 0)) {
        const FlatConnection c = std::get<FlatConnection>(instantiate(e, s));
        try {
          built.push_back(build_extension({c, TwoCochain(4)}));
        } catch (const PreconditionError&) {
          // not a Lie algebra; reported by criterion 2
        }
      }
    }
    for (const auto& s : built) {
      ++count;
      const FlatConnection k = canonical_connection(s);
      const auto g = oracle::christoffel(k);
      const auto br = oracle::brackets(s.algebra);
      if (!check_flat_torsion_free(k).ok() || !oracle::flat(g, br) || !oracle::torsion_free(g, br))
        o.fail(s.algebra.name() + " canonical connection fails");
    }
    o.detail += fmt::format("{}{} extensions", o.pass ? "" : "; ", count);
  });

  criterion(8, "filiform base algebra", 1, [&](Outcome& o) {
    const Fingerprint a = fingerprint(base_algebra_a());
    const Fingerprint l = fingerprint(base_algebra_l());
    const Fingerprint t = fingerprint(base_algebra_t());
    if (a.nilpotency_class != 1u || l.nilpotency_class != 2u || t.nilpotency_class != 3u)
      o.fail("nilpotency classes differ from 1, 2, 3");
    if (a.is_filiform || l.is_filiform || !t.is_filiform) o.fail("filiform flags wrong");
    if (a == l || l == t || a == t) o.fail("fingerprints do not separate the base algebras");
    const auto ref = oracle::lcs_dims(oracle::brackets(base_algebra_t()));
    if (ref != std::vector<std::size_t>{4, 2, 1, 0}) o.fail("reference series of t differs");
  });

  criterion(9, "deterministic verify-catalog output", 0, [&](Outcome& o) {
    const std::string cmd = cli + " verify-catalog --seed 0 --format tsv";
    const std::string first = run(cmd), second = run(cmd);
    if (first.empty()) o.fail("no output");
    if (first != second) o.fail("runs differ");
    o.detail += fmt::format("{}{} bytes", o.pass ? "" : "; ", first.size());
  });

  fmt::print("{} of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
