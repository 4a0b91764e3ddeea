#pragma once

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfrank/hopfrank.hpp"

namespace hopfrank::cli {

enum exit_code : int { ok = 0, failure = 1, usage = 2, internal = 3 };

/// Bad input maps to usage; anything else thrown by the library means an
/// invariant broke.
inline int exit_code_for(errc c) {
  switch (c) {
    case errc::parse_error:
    case errc::relation_violated:
    case errc::unknown_suite:
    case errc::not_prime:
    case errc::no_root_of_unity:
    case errc::characteristic_two:
    case errc::field_too_small:
    case errc::unsupported_algebra:
    case errc::algebra_mismatch:
    case errc::zero_point:
    case errc::dimension_mismatch:
      return usage;
    default:
      return internal;
  }
}

namespace detail {

inline ProjPoint parse_point(const PrimeField& f, const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) fail(errc::parse_error, "point '" + s + "' is not of the form a:b");
  try {
    std::size_t used_a = 0, used_b = 0;
    const unsigned long a = std::stoul(s.substr(0, colon), &used_a), b = std::stoul(s.substr(colon + 1), &used_b);
    if (used_a != colon || used_b != s.size() - colon - 1) throw std::invalid_argument(s);
    return ProjPoint::normalize(f, static_cast<scalar>(a % f.p()), static_cast<scalar>(b % f.p()));
  } catch (const std::logic_error&) {
    fail(errc::parse_error, "point '" + s + "' is not of the form a:b");
  }
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, path + ": cannot write");
  out << text;
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

inline std::string top_summary(const Rep& m) {
  const auto& simples = m.alg().require_tables().simples;
  const auto mult = top_multiplicities(m);
  std::string s;
  for (std::size_t i = 0; i < simples.size(); ++i)
    if (mult[i]) s += (s.empty() ? "" : ",") + simples[i].name + "^" + std::to_string(mult[i]);
  return s.empty() ? "0" : s;
}

}  // namespace detail

/// Runs one command line (without the program name) and returns the exit
/// status. Reports go to `sink`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& sink, std::ostream& err) {
  std::ostringstream out;  // emitted only when the command completes
  CLI::App app{"Rank and support varieties for D(Lambda_2) and its relatives"};
  app.require_subcommand(1);
  int status = ok;

  // alg build
  auto* alg = app.add_subcommand("alg", "Build an algebra family and verify it");
  auto* alg_build = alg->add_subcommand("build", "Build and verify; write a descriptor");
  alg->require_subcommand(1);
  std::string family = "d-taft", alg_out;
  unsigned n = 2;
  std::uint32_t p = 17;
  alg_build->add_option("--family", family, "d-taft or basic-A")->check(CLI::IsMember({"d-taft", "basic-A"}));
  alg_build->add_option("--n", n, "Taft parameter");
  alg_build->add_option("--p", p, "field characteristic");
  alg_build->add_option("--out", alg_out, "descriptor path");
  alg_build->callback([&] {
    AlgebraPtr a = family == "d-taft" ? make_drinfeld_double(n, make_prime_field(p, n))
                                      : make_basic_algebra_A(make_prime_field(p, 2));
    std::string hopf = "absent";
    if (a->hopf) {
      HopfReport h = verify_hopf_axioms(*a);
      hopf = h.pass ? "verified" : "FAILED";
      if (!h.pass) {
        out << "hopf_failure: " << h.failure << "\n";
        status = failure;
      }
    }
    auto desc = algebra_descriptor(*a);
    desc["relations"] = "verified";
    desc["hopf"] = hopf;
    if (!alg_out.empty()) detail::write_text(alg_out, desc.dump(2) + "\n");
    out << "family=" << a->family << "\n"
        << "n=" << a->n << "\n"
        << "p=" << a->field.p() << "\n"
        << "q=" << a->q << "\n"
        << "dim=" << a->dim << "\n"
        << "relations=verified\n"
        << "hopf=" << hopf << "\n";
    if (!alg_out.empty()) out << "out=" << alg_out << "\n";
  });

  // mod check|tensor|induce|restrict
  auto* mod = app.add_subcommand("mod", "Module operations");
  mod->require_subcommand(1);
  std::string module_path, with_path, mod_out, point_str;
  auto* mod_check = mod->add_subcommand("check", "Parse, verify relations and describe a module");
  mod_check->add_option("--module", module_path)->required();
  mod_check->callback([&] {
    Rep m = read_module_file(module_path);
    out << "family=" << m.alg().family << "\n"
        << "p=" << m.field().p() << "\n"
        << "dim=" << m.dim() << "\n"
        << "relations=verified\n"
        << "top=" << detail::top_summary(m) << "\n"
        << "projective=" << (is_projective(m) ? "yes" : "no") << "\n";
  });
  auto* mod_tensor = mod->add_subcommand("tensor", "Tensor product through the coproduct");
  mod_tensor->add_option("--module", module_path)->required();
  mod_tensor->add_option("--with", with_path)->required();
  mod_tensor->add_option("--out", mod_out);
  mod_tensor->callback([&] {
    Rep m = read_module_file(module_path), w = read_module_file(with_path);
    Rep t = tensor(m, w);
    if (!mod_out.empty()) write_module_file(t, mod_out);
    out << "dim=" << t.dim() << "\n"
        << "factors=" << m.dim() << "," << w.dim() << "\n";
    if (!mod_out.empty()) out << "out=" << mod_out << "\n";
  });
  std::uint32_t mod_p = 17;
  auto* mod_induce = mod->add_subcommand("induce", "Induce from H_ab: k_H, or M|_H when --module is given");
  mod_induce->add_option("--point", point_str, "a:b")->required();
  mod_induce->add_option("--module", module_path);
  mod_induce->add_option("--p", mod_p, "field characteristic when no module is given");
  mod_induce->add_option("--out", mod_out);
  mod_induce->callback([&] {
    AlgebraPtr D = module_path.empty() ? family_algebra("d-taft", 2, mod_p) : read_module_file(module_path).algebra();
    if (D->family != "d-taft" || D->n != 2) fail(errc::unsupported_algebra, "induction from H_ab needs D(Lambda_2)");
    const ProjPoint pt = detail::parse_point(D->field, point_str);
    auto H = subalgebra_H(D, pt);
    Rep ind = module_path.empty() ? induce(H, sub_trivial(H)) : induce(H, restrict(read_module_file(module_path), H));
    if (!mod_out.empty()) write_module_file(ind, mod_out);
    out << "point=" << pt.str() << "\n"
        << "dim=" << ind.dim() << "\n"
        << "top=" << detail::top_summary(ind) << "\n";
    if (!mod_out.empty()) out << "out=" << mod_out << "\n";
  });
  auto* mod_restrict = mod->add_subcommand("restrict", "Restrict to H_ab and test projectivity there");
  mod_restrict->add_option("--module", module_path)->required();
  mod_restrict->add_option("--point", point_str, "a:b")->required();
  mod_restrict->callback([&] {
    Rep m = read_module_file(module_path);
    const ProjPoint pt = detail::parse_point(m.field(), point_str);
    Rep r = restrict(m, subalgebra_H(m.algebra(), pt));
    out << "point=" << pt.str() << "\n"
        << "dim=" << r.dim() << "\n"
        << "projective=" << (is_projective(r) ? "yes" : "no") << "\n";
  });

  std::string standard_name, standard_family = "d-taft";
  auto* mod_standard = mod->add_subcommand("standard", "Write a named module: k, k-, P+, P-, S+, S- (k+ over basic-A)");
  mod_standard->add_option("--name", standard_name)->required();
  mod_standard->add_option("--family", standard_family)->check(CLI::IsMember({"d-taft", "basic-A"}));
  mod_standard->add_option("--p", mod_p);
  mod_standard->add_option("--out", mod_out);
  mod_standard->callback([&] {
    auto mods = standard_modules(family_algebra(standard_family, 2, mod_p));
    auto it = mods.find(standard_name);
    if (it == mods.end()) fail(errc::unsupported_algebra, "no standard module '" + standard_name + "'");
    if (!mod_out.empty()) write_module_file(it->second, mod_out);
    out << "name=" << standard_name << "\n"
        << "dim=" << it->second.dim() << "\n";
    if (!mod_out.empty()) out << "out=" << mod_out << "\n";
  });

  // variety rank|support|compare
  auto* variety = app.add_subcommand("variety", "Rank and support varieties");
  variety->require_subcommand(1);
  for (const char* kind : {"rank", "support", "compare"}) {
    auto* sub = variety->add_subcommand(kind);
    sub->add_option("--module", module_path)->required();
    sub->callback([&, kind = std::string(kind)] {
      Rep m = read_module_file(module_path);
      if (kind == "rank") {
        VarietySet v = rank_variety(m);
        out << v.report() << "variety=rank\npoints=" << v.size() << "\n";
      } else if (kind == "support") {
        VarietySet v = support_variety(m);
        out << v.report() << "variety=support\npoints=" << v.size() << "\n";
      } else {
        VarietySet r = rank_variety(m), s = support_variety(m);
        const bool agree = r == s;
        out << r.report();
        if (!agree) out << "support:\n" << s.report();
        out << "variety=compare\nrank_points=" << r.size() << "\nsupport_points=" << s.size()
            << "\nagree=" << (agree ? "yes" : "no") << "\n";
        if (!agree) status = failure;
      }
    });
  }

  // ext dims
  auto* ext = app.add_subcommand("ext", "Ext groups");
  ext->require_subcommand(1);
  std::string source_path, target_path;
  std::size_t upto = 4;
  auto* ext_dims_cmd = ext->add_subcommand("dims", "dim Ext^i(source, target) for i = 0..upto");
  ext_dims_cmd->add_option("--source", source_path)->required();
  ext_dims_cmd->add_option("--target", target_path)->required();
  ext_dims_cmd->add_option("--upto", upto)->check(CLI::Range(0, 64));
  ext_dims_cmd->callback([&] {
    Rep s = read_module_file(source_path), t = read_module_file(target_path);
    require_same_algebra(s, t);
    out << detail::join(ext_dims(s, t, upto)) << "\n"
        << "upto=" << upto << "\n";
  });

  // suite
  auto* suite = app.add_subcommand("suite", "Run a seeded property suite");
  std::string suite_name;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool timing = false;
  suite->add_option("name", suite_name, "dade, tensor, c-axioms, reciprocity, heller, compare, generation, block")
      ->required();
  suite->add_option("--trials", trials)->check(CLI::PositiveNumber);
  suite->add_option("--seed", seed);
  suite->add_flag("--timing", timing, "append wall-clock seconds to the stanza");
  suite->callback([&] {
    SuiteReport r = run_suite(suite_name, trials, seed);
    out << r.render(timing);
    if (!r.pass()) status = failure;
  });

  // random
  auto* random = app.add_subcommand("random", "Write a seeded random module");
  std::vector<std::size_t> hint{1, 1};
  std::uint64_t random_seed = 0;
  std::string random_out, random_family = "d-taft";
  std::uint32_t random_p = 17;
  random->add_option("--dim-hint", hint, "R,S: quotient of A^R by the span of S random seeds")
      ->delimiter(',')
      ->expected(2);
  random->add_option("--seed", random_seed);
  random->add_option("--family", random_family)->check(CLI::IsMember({"d-taft", "basic-A"}));
  random->add_option("--p", random_p);
  random->add_option("--out", random_out);
  random->callback([&] {
    Rep m = random_module(family_algebra(random_family, 2, random_p), hint[0], hint[1], random_seed);
    if (!random_out.empty()) write_module_file(m, random_out);
    out << "family=" << random_family << "\n"
        << "seed=" << random_seed << "\n"
        << "dim=" << m.dim() << "\n";
    if (!random_out.empty()) out << "out=" << random_out << "\n";
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    const int code = app.exit(e, o, x);
    sink << o.str();
    if (code == 0) return ok;
    std::string msg = x.str();
    if (auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "usage: " << msg << "\n";
    return usage;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return internal;
  }
  sink << out.str();
  return status;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace hopfrank::cli
