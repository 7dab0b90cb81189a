#pragma once

#include <CLI11.hpp>

#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ncgroup/catalog.hpp"
#include "ncgroup/io.hpp"
#include "ncgroup/ncgraph.hpp"
#include "ncgroup/report_json.hpp"
#include "ncgroup/specifier.hpp"
#include "ncgroup/structure.hpp"

namespace ncgroup::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

struct GlobalOptions {
  bool json = false;
  unsigned threads = 1;
  std::size_t cap = default_order_cap;
  bool timings = false;
};

enum class MethodChoice { automatic, clique, centralizers, formula };

/// Bad input (syntax, files, caps) is a usage error; a mathematical
/// precondition that the group does not meet is a check failure.
inline int exit_code_for(const GroupError& e) {
  switch (e.code()) {
    case Errc::parse_error:
    case Errc::io_error:
    case Errc::order_cap_exceeded:
    case Errc::search_space_exceeded:
    case Errc::invalid_argument:
    case Errc::not_prime:
    case Errc::primes_equal:
    case Errc::not_latin_square:
    case Errc::no_identity:
    case Errc::no_inverse:
    case Errc::not_associative:
      return usage_error;
    default:
      return check_failed;
  }
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const GroupError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

inline std::string format_set(const GroupTable& g, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    out += (first ? "" : ", ") + g.label(x);
    first = false;
  }
  return out + "}";
}

inline int cmd_construct(const std::string& spec, const std::string& out_path, const GlobalOptions& opt,
                         std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GroupTable g = parse_group_spec(spec, opt.cap);
    const std::string table = write_cayley_table(g);
    if (out_path.empty())
      out << table;
    else
      write_file(out_path, table);
    const auto z = center(g).size();
    if (opt.json)
      (out_path.empty() ? err : out) << Json{{"order", g.order()}, {"center_order", z}}.dump() << '\n';
    else
      (out_path.empty() ? err : out) << "order " << g.order() << "\ncenter " << z << '\n';
    return int{ok};
  });
}

inline OmegaResult compute_omega(const GroupTable& g, MethodChoice method, const GlobalOptions& opt) {
  switch (method) {
    case MethodChoice::clique: return max_clique(build_graph(g), {opt.threads});
    case MethodChoice::centralizers: require_non_abelian(g); return omega_via_centralizers(g);
    case MethodChoice::formula: return omega_formula(g);
    case MethodChoice::automatic: break;
  }
  require_non_abelian(g);
  if (is_minimal_non_abelian(g)) return omega_formula(g);
  if (is_ac_group(g) && centralizer_family(g).covers_group) return omega_via_centralizers(g);
  return max_clique(build_graph(g), {opt.threads});
}

inline int cmd_omega(const std::string& spec, MethodChoice method, const GlobalOptions& opt, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    const GroupTable g = parse_group_spec(spec, opt.cap);
    const OmegaResult r = compute_omega(g, method, opt);
    if (opt.json) {
      out << to_json(g, r).dump(2) << '\n';
    } else {
      out << "omega " << r.value << '\n';
      out << "method " << method_name(r.method) << '\n';
      if (r.witness) out << "witness " << format_set(g, *r.witness) << '\n';
      if (!r.derivation.empty()) out << "formula " << r.derivation << '\n';
    }
    return int{ok};
  });
}

inline std::string yes_no(std::optional<bool> b) { return !b ? "-" : (*b ? "yes" : "NO"); }
inline std::string opt_num(std::optional<std::size_t> v) { return v ? std::to_string(*v) : "-"; }

inline void print_run_table(const RunReport& report, std::ostream& out) {
  out << std::left << std::setw(6) << "name" << std::right << std::setw(6) << "|G|" << std::setw(5) << "|Z|"
      << "  " << std::left << std::setw(15) << "kind" << std::right << std::setw(3) << "p" << std::setw(3) << "a"
      << std::setw(4) << "q" << std::setw(3) << "b" << std::setw(4) << "m" << std::setw(8) << "w:cliq"
      << std::setw(7) << "w:cent" << std::setw(7) << "w:form" << std::setw(7) << "pyber" << std::setw(10)
      << "time ms" << "  status\n";
  for (const auto& e : report.entries) {
    double total = 0;
    for (const auto& t : e.timings) total += t.milliseconds;
    const auto& d = e.decomposition;
    out << std::left << std::setw(6) << e.entry.name << std::right << std::setw(6) << e.order << std::setw(5)
        << e.center_order << "  " << std::left << std::setw(15) << kind_name(e.kind) << std::right << std::setw(3)
        << (e.kind == GroupKind::not_applicable ? "-" : std::to_string(e.p)) << std::setw(3)
        << (d ? std::to_string(d->alpha) : "-") << std::setw(4) << (d ? std::to_string(d->q) : "-") << std::setw(3)
        << (d ? std::to_string(d->beta) : "-") << std::setw(4) << (d ? std::to_string(d->m) : "-") << std::setw(8)
        << opt_num(e.omega_clique) << std::setw(7) << opt_num(e.omega_centralizers) << std::setw(7)
        << opt_num(e.omega_formula) << std::setw(7) << std::fixed << std::setprecision(3) << e.pyber_ratio
        << std::setw(10) << std::setprecision(2) << total << "  " << (e.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& f : e.failures) out << "    ! " << f << '\n';
  }
  out << (report.all_passed() ? "all entries passed\n" : "some entries FAILED\n");
}

inline int cmd_verify(const std::optional<std::string>& catalog_path, const GlobalOptions& opt, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    const auto catalog = catalog_path ? parse_catalog(read_file(*catalog_path)) : builtin_catalog();
    const RunReport report = run_catalog(catalog, opt.threads, opt.cap);
    if (opt.json)
      out << to_json(report, opt.timings).dump(2) << '\n';
    else
      print_run_table(report, out);
    return report.all_passed() ? int{ok} : int{check_failed};
  });
}

inline int cmd_export(const std::string& spec, GraphFormat format, const std::string& out_path,
                      const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GroupTable g = parse_group_spec(spec, opt.cap);
    const std::string text = export_graph(build_graph(g), format);
    if (out_path.empty())
      out << text;
    else
      write_file(out_path, text);
    return int{ok};
  });
}

inline int cmd_analyze(const std::string& spec, const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GroupTable g = parse_group_spec(spec, opt.cap);
    const StructureReport r = analyze(g, spec);
    if (opt.json) {
      out << to_json(r).dump(2) << '\n';
      return int{ok};
    }
    out << "group " << spec << "\norder " << r.order << "\ncenter " << r.center_order << '\n';
    out << "minimal non-abelian " << (r.minimal_non_abelian ? "yes" : "no") << "\nkind " << kind_name(r.kind) << '\n';
    if (r.kind == GroupKind::p_group) out << "p " << r.p << '\n';
    if (const auto& d = r.decomposition) {
      out << "p " << d->p << "  alpha " << d->alpha << "  q " << d->q << "  beta " << d->beta << "  m " << d->m
          << '\n';
      out << "P " << format_set(g, d->P) << "\nQ " << format_set(g, d->Q) << '\n';
      const auto& s = *r.structure_checks;
      out << "structure: two primes " << yes_no(s.two_primes) << ", cyclic P " << yes_no(s.cyclic_p)
          << ", elementary abelian Q " << yes_no(s.elementary_abelian_q) << ", normal Q " << yes_no(s.normal_q)
          << ", minimal normal Q " << yes_no(s.minimal_normal_q) << '\n';
      const auto& l = *r.lemma_checks;
      out << "lemma: G'=Q " << yes_no(l.derived_is_q) << ", G' meets Z trivially "
          << yes_no(l.derived_meets_center_trivially) << ", C(P)=N(P)=P " << yes_no(l.p_self_normalizing)
          << ", C(b)=ZQ " << yes_no(l.q_centralizers_split) << '\n';
    }
    return int{ok};
  });
}

/// Parses argv and dispatches. Output goes to the given streams so the whole
/// command line can be exercised in-process.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pairwise non-commuting sets and minimal non-abelian group structure"};
  app.require_subcommand(1);
  GlobalOptions opt;
  app.add_flag("--json", opt.json, "Emit JSON")->configurable(false);
  app.add_option("--threads", opt.threads, "Worker threads (0 = auto)");
  app.add_option("--cap", opt.cap, "Group order cap")->check(CLI::PositiveNumber);
  app.fallthrough();

  std::string spec, out_path, method = "auto", format = "dimacs";
  std::optional<std::string> catalog;

  auto* construct = app.add_subcommand("construct", "Write the Cayley table of a group");
  construct->add_option("spec", spec, "Group specifier")->required();
  construct->add_option("-o,--out", out_path, "Output file (default stdout)");

  auto* omega = app.add_subcommand("omega", "Size of a largest pairwise non-commuting set");
  omega->add_option("spec", spec, "Group specifier")->required();
  omega->add_option("--method", method, "auto | clique | centralizers | formula")
      ->check(CLI::IsMember({"auto", "clique", "centralizers", "formula"}));

  auto* verify = app.add_subcommand("verify", "Run every check over a catalog");
  verify->add_option("catalog", catalog, "Catalog file (default: built-in)");
  verify->add_flag("--timings", opt.timings, "Include wall times in JSON output");

  auto* exp = app.add_subcommand("export", "Write the non-commuting graph");
  exp->add_option("spec", spec, "Group specifier")->required();
  exp->add_option("--format", format, "dimacs | dot")->check(CLI::IsMember({"dimacs", "dot"}));
  exp->add_option("-o,--out", out_path, "Output file (default stdout)");

  auto* an = app.add_subcommand("analyze", "Structure report");
  an->add_option("spec", spec, "Group specifier")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? int{ok} : int{usage_error};
  }

  if (*construct) return cmd_construct(spec, out_path, opt, out, err);
  if (*omega) {
    const std::map<std::string, MethodChoice> m{{"auto", MethodChoice::automatic},
                                                {"clique", MethodChoice::clique},
                                                {"centralizers", MethodChoice::centralizers},
                                                {"formula", MethodChoice::formula}};
    return cmd_omega(spec, m.at(method), opt, out, err);
  }
  if (*verify) return cmd_verify(catalog, opt, out, err);
  if (*exp) return cmd_export(spec, format == "dot" ? GraphFormat::dot : GraphFormat::dimacs, out_path, opt, out, err);
  return cmd_analyze(spec, opt, out, err);
}

}  // namespace ncgroup::cli
