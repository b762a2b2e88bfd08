// lagext: command-line front end.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lagext/catalog.hpp"
#include "lagext/sampler.hpp"
#include "lagext/verify.hpp"

using namespace lagext;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

ParamValues parse_params(const std::vector<std::string>& items) {
  ParamValues out;
  for (const auto& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos) throw Error("--param expects NAME=VALUE, got " + it);
    out.emplace_back(it.substr(0, eq), parse_expression(it.substr(eq + 1)).eval({}));
  }
  return out;
}

ParamValues values_for(const AlgebraBlock& b, const ParamValues& cli) {
  ParamValues v = cli;
  for (const auto& [name, x] : b.declared_values())
    if (std::none_of(v.begin(), v.end(), [&](const auto& kv) { return kv.first == name; }))
      v.emplace_back(name, x);
  if (!b.params.empty() && !satisfies(b, v))
    throw Error(fmt::format("parameters of {} are missing or violate their constraints", b.name));
  return v;
}

AlgebraBlock single_block(SpecFile f, const std::string& path) {
  if (f.blocks.empty()) throw Error(path + " has no algebra block");
  return std::move(f.blocks.front());
}

std::string conflict_message(const AlgebraBlock& b) {
  return "conflict: " + ConflictReport{b.name, connection_duplicates(b)}.str();
}

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

// ---------------------------------------------------------------------------

int cmd_check(const std::string& path, const ParamValues& cli) {
  const SpecFile f = parse_spec(read_file(path));
  bool ok = true;
  for (const auto& b : f.blocks) {
    const ParamValues vals = values_for(b, cli);
    const LieAlgebra l = to_algebra(b, vals);
    fmt::print("{} (dim {})\n", b.name, b.dim);
    const auto jac = check_jacobi(l);
    fmt::print("  jacobi: {}\n", pass_fail(jac.empty()));
    ok &= jac.empty();
    if (!b.connection.empty()) {
      if (!connection_duplicates(b).empty()) {
        fmt::print("  {}\n", conflict_message(b));
        ok = false;
      } else {
        const auto recs = verify_connection(b.name, "0", to_connection(b, vals),
                                            b.base.value_or('a'), 0);
        for (const auto& r : recs) {
          if (!b.base && r.check == std::string("base-bracket-match")) continue;
          fmt::print("  {}: {}{}\n", r.check, to_string(r.status),
                     r.witness.empty() ? "" : "  " + r.witness);
          ok &= r.status != Status::fail;
        }
      }
    }
    if (!b.omega.empty()) {
      SymplecticLieAlgebra s{l, to_omega(b, vals), std::nullopt};
      const bool nondeg = rank(s.omega) == s.dim();
      const auto dw = d_omega(s);
      fmt::print("  omega-nondegenerate: {}\n  omega-closed: {}\n", pass_fail(nondeg),
                 pass_fail(dw.empty()));
      ok &= nondeg && dw.empty();
    }
    if (!b.cocycle.empty()) {
      const FlatConnection c = b.connection.empty() ? FlatConnection(l) : to_connection(b, vals);
      const TwoCochain a = to_cocycle(b, vals);
      const bool closed = coboundary_2(dual_matrices(c), a).is_zero();
      fmt::print("  cocycle: {}\n  bianchi: {}\n", pass_fail(closed),
                 check_bianchi(a) ? "holds" : "fails");
      ok &= closed;
    }
  }
  return ok ? 0 : 1;
}

void print_cohomology(const CohomologySummary& s, const char* prefix) {
  fmt::print("{}C1 {}\n{}C1_L {}\n", prefix, s.c1_dim, prefix, s.c1l_dim);
  fmt::print("{}Z2 {}\n{}B2 {}\n{}H2 {}\n", prefix, s.z2_dim, prefix, s.b2_dim, prefix, s.h2_dim);
  fmt::print("{}Z2_L {}\n{}B2_L {}\n{}H2_L {}\n", prefix, s.z2l_dim, prefix, s.b2l_dim, prefix,
             s.h2l_dim);
  fmt::print("{}rank H2_L -> H2 {}\n", prefix, s.lagrangian_to_ordinary_rank);
}

FlatConnection connection_of(const AlgebraBlock& b, const ParamValues& vals) {
  if (!connection_duplicates(b).empty()) throw Error(conflict_message(b));
  return to_connection(b, vals);
}

int cmd_cohomology(const std::string& path, const ParamValues& cli) {
  const AlgebraBlock b = single_block(parse_spec(read_file(path)), path);
  const FlatConnection c = connection_of(b, values_for(b, cli));
  fmt::print("{} (dim {})\n", b.name, b.dim);
  print_cohomology(cohomology(dual_representation(c)), "  ");
  return 0;
}

TwoCochain random_lagrangian_cocycle(const DualRep& r, std::uint64_t seed) {
  const Subspace z = cocycle_bases(r).z2l;
  RationalSampler sampler(seed);
  Vector v(z.ambient_dim());
  for (const auto& b : z.basis()) axpy(v, sampler.next(), b);
  return TwoCochain::unflatten(r.dim(), v);
}

int cmd_extend(const std::string& path, const std::string& source, bool with_cohomology,
               const std::string& out_path, const ParamValues& cli) {
  const AlgebraBlock b = single_block(parse_spec(read_file(path)), path);
  const ParamValues vals = values_for(b, cli);
  const FlatConnection c = connection_of(b, vals);
  const DualRep r = dual_representation(c);

  TwoCochain alpha(c.dim());
  if (source == "file") {
    alpha = to_cocycle(b, vals);
  } else if (source.rfind("random:", 0) == 0) {
    alpha = random_lagrangian_cocycle(r, std::stoull(source.substr(7)));
  } else if (source != "zero") {
    throw Error("--cocycle must be zero, file or random:SEED");
  }
  const ThreeCochain d = coboundary_2(r, alpha);
  if (!d.is_zero()) {
    std::size_t t = 0;
    while (is_zero(d.values[t])) ++t;
    std::size_t idx = 0;
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k, ++idx)
          if (idx == t)
            throw Error(fmt::format("not a cocycle: d alpha(e{},e{},e{}) = {}", i + 1, j + 1, k + 1,
                                    format_vector(d.values[t])));
  }

  const ExtensionTriple triple{c, alpha};
  SymplecticLieAlgebra s = build_extension(triple);
  s.algebra = s.algebra.renamed("ext_" + b.name);
  const auto dw = d_omega(s);
  std::string summary;
  summary += fmt::format("# extension of {} by {}\n", b.name, source);
  summary += fmt::format("# closed: {}\n", dw.empty() ? "yes" : "no");
  summary += fmt::format("# bianchi: {}\n", check_bianchi(alpha) ? "holds" : "fails");
  const IdealVerdict iv = is_lagrangian_ideal(s, *s.lagrangian_ideal);
  summary += fmt::format("# h*: {}{}\n", to_string(iv.kind), iv.normal ? ", normal" : "");
  std::string lcs;
  for (const auto& sub : lower_central_series(s.algebra))
    lcs += (lcs.empty() ? "" : ",") + std::to_string(sub.dim());
  const auto cls = nilpotency_class(s.algebra);
  summary += fmt::format("# lower central series: {}\n", lcs);
  summary += cls ? fmt::format("# nilpotent, class {}\n", *cls) : std::string("# not nilpotent\n");
  if (with_cohomology) {
    const CohomologySummary h = cohomology(r);
    summary += fmt::format("# H2 {}  H2_L {}  (Z2 {}, Z2_L {}, B2 {}, B2_L {})\n", h.h2_dim,
                           h.h2l_dim, h.z2_dim, h.z2l_dim, h.b2_dim, h.b2l_dim);
  }
  write_output(out_path, summary + serialize(from_symplectic(s, true)));
  return dw.empty() ? 0 : 1;
}

Subspace parse_ideal(const AlgebraBlock& b, const std::string& list) {
  std::vector<Vector> basis;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    const bool dual = tok.rfind("e^", 0) == 0;
    const std::string digits = tok.substr(dual ? 2 : 1);
    if (tok.empty() || tok[0] != 'e' || digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad basis token in --ideal: " + tok);
    const BasisRef ref{std::stoul(digits), dual};
    if (ref.number == 0 || (dual && !b.dual) || ref.number > (b.dual ? b.dim / 2 : b.dim))
      throw Error("--ideal token out of range: " + tok);
    basis.push_back(unit_vector(b.dim, position(b, ref)));
  }
  return Subspace(b.dim, basis);
}

int cmd_reduce(const std::string& path, const std::string& ideal, const ParamValues& cli) {
  const AlgebraBlock b = single_block(parse_spec(read_file(path)), path);
  const ParamValues vals = values_for(b, cli);
  const SymplecticLieAlgebra s{to_algebra(b, vals), to_omega(b, vals), std::nullopt};
  if (!is_symplectic(s)) throw Error(b.name + " is not symplectic");
  const Subspace j = parse_ideal(b, ideal);
  const IdealVerdict v = is_lagrangian_ideal(s, j);
  fmt::print("# ideal: {}{}\n", to_string(v.kind), v.normal ? ", normal" : ", not normal");
  SymplecticLieAlgebra red = symplectic_reduction(s, j);
  red.algebra = red.algebra.renamed(b.name + "_reduced");
  fmt::print("# reduced dim {}, symplectic: {}\n", red.dim(), is_symplectic(red) ? "yes" : "no");
  std::cout << serialize(from_symplectic(red, false));
  if (v.kind == IdealKind::lagrangian) {
    FlatConnection c = induced_flat_connection(s, j);
    AlgebraBlock cb = from_connection(c);
    cb.name = b.name + "_quotient";
    std::cout << "\n" << serialize(cb);
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flat nilpotent Lie algebras and their Lagrangian extensions, in exact arithmetic"};
  app.require_subcommand(1);

  std::string file, cocycle_source = "zero", out_path, ideal, format = "text", entry;
  std::vector<std::string> params;
  bool with_cohomology = false;
  std::size_t samples = 3;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "check the axioms of every block in FILE");
  check->add_option("FILE", file)->required();
  check->add_option("--param", params, "NAME=VALUE");

  auto* coh = app.add_subcommand("cohomology", "H2 and H2_L of the connection in FILE");
  coh->add_option("FILE", file)->required();
  coh->add_option("--param", params, "NAME=VALUE");

  auto* extend = app.add_subcommand("extend", "build the Lagrangian extension of FILE");
  extend->add_option("FILE", file)->required();
  extend->add_option("--cocycle", cocycle_source, "zero | file | random:SEED");
  extend->add_flag("--cohomology", with_cohomology);
  extend->add_option("--out", out_path);
  extend->add_option("--param", params, "NAME=VALUE");

  auto* reduce = app.add_subcommand("reduce", "symplectic reduction by an isotropic ideal");
  reduce->add_option("FILE", file)->required();
  reduce->add_option("--ideal", ideal, "comma-separated basis vectors, e.g. e^1,e^2")->required();
  reduce->add_option("--param", params, "NAME=VALUE");

  auto* verify = app.add_subcommand("verify-catalog", "re-check every catalog entry");
  verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed);
  verify->add_option("--entry", entry);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "tsv"}));
  verify->add_option("--out", out_path);

  auto* catalog = app.add_subcommand("catalog", "catalog data");
  catalog->require_subcommand(1);
  auto* exp = catalog->add_subcommand("export", "print the embedded catalog");
  exp->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    const ParamValues cli = parse_params(params);
    if (*check) return cmd_check(file, cli);
    if (*coh) return cmd_cohomology(file, cli);
    if (*extend) return cmd_extend(file, cocycle_source, with_cohomology, out_path, cli);
    if (*reduce) return cmd_reduce(file, ideal, cli);
    if (*verify) {
      VerifyOptions opt;
      opt.samples = samples;
      opt.seed = seed;
      if (!entry.empty()) opt.entry = entry;
      const VerifyResult r = run_verify_catalog(opt);
      write_output(out_path, format == "tsv" ? format_tsv(r) : format_text(r));
      return r.exit_code;
    }
    if (*exp) {
      write_output(out_path, table1_text());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "lagext: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
