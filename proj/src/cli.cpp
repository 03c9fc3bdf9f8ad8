#include "gwl/cli.hpp"

#include "gwl/filtration.hpp"
#include "gwl/milnor.hpp"
#include "gwl/model_io.hpp"
#include "gwl/models.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>

namespace gwl::cli {

namespace {

struct ModelSource {
  std::string source;
  std::string base;
  std::optional<unsigned> r, f, s;
  std::size_t truncation = default_truncation;
};

void add_builtin_options(CLI::App* sub, ModelSource& src) {
  sub->add_option("--base", src.base, "point base: C or R");
  sub->add_option("--r", src.r, "projective dimension");
  sub->add_option("--f", src.f, "exponent for gw_punctured_a5");
  sub->add_option("--s", src.s, "rank of Pic(C)[2] for gw_surface_cxp1");
  sub->add_option("--truncation", src.truncation, "series truncation N")->check(CLI::Range(1, 64));
}

BuiltinParams params_of(const ModelSource& src) {
  BuiltinParams p;
  if (!src.base.empty()) p.base = parse_base(src.base);
  p.r = src.r;
  p.f = src.f;
  p.s = src.s;
  p.truncation = src.truncation;
  return p;
}

// Builtins are addressed as "builtin:<name>"; anything else is a file path.
RingModel load(const ModelSource& src) {
  const std::string prefix = "builtin:";
  if (src.source.rfind(prefix, 0) == 0) return builtin_model(src.source.substr(prefix.size()), params_of(src));
  return read_model_file(src.source);
}

// Prints the failure and returns false if the model is invalid.
bool check_valid(const RingModel& m, std::ostream& out) {
  const ValidationReport rep = validate_model(m);
  if (!rep.ok) out << "FAIL " << rep.failed_check << ": " << rep.detail << '\n';
  return rep.ok;
}

std::string span_of(const GroupPresentation& pres, const Subgroup& s) {
  const auto gens = s.generators();
  if (gens.empty()) return "0";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += format_element(pres, gens[i]);
  }
  return out + ">";
}

int cmd_builtin(const std::string& name, const ModelSource& src, const std::string& output, std::ostream& out) {
  const RingModel m = builtin_model(name, params_of(src));
  if (!check_valid(m, out)) return exit_failure;
  if (output.empty() || output == "-") out << model_to_json(m).dump(2) << '\n';
  else write_model_file(m, output);
  return exit_pass;
}

int cmd_validate(const ModelSource& src, std::ostream& out) {
  const RingModel m = load(src);
  const ValidationReport rep = validate_model(m);
  for (const auto& name : rep.passed) out << "PASS " << name << '\n';
  if (!rep.ok) {
    out << "FAIL " << rep.failed_check << ": " << rep.detail << '\n';
    return exit_failure;
  }
  return exit_pass;
}

int cmd_filtration(const ModelSource& src, std::size_t kmax, std::size_t window, bool witt, bool as_json,
                   std::ostream& out) {
  const RingModel m = load(src);
  if (!check_valid(m, out)) return exit_failure;
  FiltrationOptions opt;
  opt.kmax = kmax;
  opt.window = window;
  FiltrationResult f = gamma_filtration(m, opt);
  if (witt) f = witt_filtration(m, f);
  if (as_json) {
    out << filtration_to_json(m.name, f).dump(2) << '\n';
  } else {
    out << "model " << m.name << (f.witt ? " (Witt quotient)" : "") << '\n';
    out << "basis:";
    for (std::size_t i = 0; i < f.group.rank(); ++i) {
      out << ' ' << f.group.names()[i];
      if (f.group.orders()[i] != 0) out << "(mod " << f.group.orders()[i].get_str() << ')';
    }
    out << '\n';
    out << "exact: " << (f.exact ? "yes" : "no") << "  stabilized: " << (f.stabilized ? "yes" : "no")
        << "  levels: " << f.levels_computed << '\n';
    for (std::size_t k = 0; k < f.pieces.size(); ++k)
      out << "F^" << k << " = " << span_of(f.group, f.pieces[k]) << "  ["
          << format_invariants(relative_invariants(f.pieces[k], zero_subgroup(f.group))) << "]  window "
          << f.stabilized_window[k] << '\n';
    for (std::size_t i = 0; i < f.graded.size(); ++i)
      out << "gr^" << i << " = " << format_invariants(f.graded[i]) << '\n';
  }
  if (!f.stabilized) {
    out << "WARNING filtration did not stabilize within the level budget\n";
    return exit_failure;
  }
  return exit_pass;
}

int cmd_special(const ModelSource& src, unsigned bound, std::ostream& out) {
  const RingModel m = load(src);
  if (!check_valid(m, out)) return exit_failure;
  std::size_t pairs = 0, failed = 0;
  const auto& names = m.group.names();
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i; j < m.rank(); ++j) {
      const SpecialReport rep = verify_special_pair(m, m.basis(i), m.basis(j), bound);
      ++pairs;
      if (rep.all_hold()) {
        out << "PASS " << names[i] << " * " << names[j] << '\n';
        continue;
      }
      ++failed;
      out << "FAIL " << names[i] << " * " << names[j] << ':';
      for (const auto& c : rep.checks)
        if (!c.holds) out << ' ' << c.identity;
      out << '\n';
    }
  if (failed) {
    out << "FAIL special: " << failed << " of " << pairs << " pairs\n";
    return exit_failure;
  }
  out << "PASS special: " << pairs << " pairs\n";
  return exit_pass;
}

int cmd_milnor(std::size_t n, std::ostream& out) {
  const MilnorReport rep = milnor_check(n);
  const unsigned d = 1u << (n - 1);
  auto line = [&](bool ok, const std::string& what) { out << (ok ? "PASS " : "FAIL ") << what << '\n'; };
  line(rep.vanishing_ok, "vanishing<" + std::to_string(d) + " (first non-zero degree " + std::to_string(rep.vanishing) + ")");
  line(rep.product_equals_sum, "product=sum");
  line(rep.product_equals_omega, "product=omega_" + std::to_string(d));
  if (rep.substitution_cancels) line(*rep.substitution_cancels, "substitution x" + std::to_string(n) + "=x1+x2 gives 1");
  return rep.all_pass() ? exit_pass : exit_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Presented augmented lambda-rings and their gamma-filtrations", "gwl"};
  app.require_subcommand(1);

  ModelSource src;
  std::string builtin_name, output;
  auto* builtin = app.add_subcommand("builtin", "emit a builtin model file");
  builtin->add_option("name", builtin_name, "builtin name")->required();
  builtin->add_option("-o,--output", output, "output file (stdout if omitted)");
  add_builtin_options(builtin, src);

  auto* validate = app.add_subcommand("validate", "check the ring and lambda axioms of a model");
  validate->add_option("model", src.source, "model file or builtin:<name>")->required();
  add_builtin_options(validate, src);

  std::size_t kmax = 8, window = 2;
  bool witt = false, as_json = false;
  auto* filtration = app.add_subcommand("filtration", "gamma-filtration and graded pieces");
  filtration->add_option("model", src.source, "model file or builtin:<name>")->required();
  filtration->add_option("--max-degree", kmax, "largest filtration degree")->check(CLI::Range(1, 48));
  filtration->add_option("--window", window, "stabilization window")->check(CLI::Range(1, 16));
  filtration->add_flag("--witt", witt, "push the filtration to the Witt quotient");
  filtration->add_flag("--json", as_json, "machine-readable output");
  add_builtin_options(filtration, src);

  unsigned bound = 3;
  auto* special = app.add_subcommand("special", "verify the lambda-ring axioms on basis pairs");
  special->add_option("model", src.source, "model file or builtin:<name>")->required();
  special->add_option("--bound", bound, "largest degree checked")->check(CLI::Range(1, 4));
  add_builtin_options(special, src);

  std::size_t milnor_n = 3;
  auto* milnor = app.add_subcommand("milnor", "GF(2) Stiefel-Whitney identities");
  milnor->add_option("--n", milnor_n, "number of variables")->check(CLI::Range(std::size_t{1}, milnor_max_n));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (builtin->parsed()) return cmd_builtin(builtin_name, src, output, out);
    if (validate->parsed()) return cmd_validate(src, out);
    if (filtration->parsed()) return cmd_filtration(src, kmax, window, witt, as_json, out);
    if (special->parsed()) return cmd_special(src, bound, out);
    if (milnor->parsed()) return cmd_milnor(milnor_n, out);
  } catch (const ModelParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace gwl::cli
