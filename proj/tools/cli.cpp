#include "cli.hpp"

#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "wci/encoding.hpp"
#include "wci/errors.hpp"
#include "wci/family.hpp"
#include "wci/hilbert.hpp"
#include "wci/report.hpp"
#include "wci/verify.hpp"

namespace wci::cli {

namespace {

enum class Format { Text, Json, Csv };

struct FormatFlags {
  bool json = false;
  bool csv = false;

  void attach(CLI::App* app, bool with_csv) {
    auto* j = app->add_flag("--json", json, "Print a JSON report");
    if (with_csv) app->add_flag("--csv", csv, "Print CSV")->excludes(j);
  }
  Format format(Format fallback = Format::Text) const {
    if (json) return Format::Json;
    if (csv) return Format::Csv;
    return fallback;
  }
};

std::string text_bool(const std::optional<bool>& value) {
  if (!value) return "n/a";
  return *value ? "true" : "false";
}

template <class T>
std::string text_optional(const std::optional<T>& value) {
  return value ? std::to_string(*value) : "n/a";
}

void print_json(std::ostream& out, const nlohmann::json& value) { out << value.dump(2) << '\n'; }

// Each predicate an --assert may name, read off one analysis.
std::optional<bool> family_predicate(const std::string& name, const FamilyAnalysis& a) {
  if (name == "well_formed") return a.well_formed;
  if (name == "linear_cone") return a.linear_cone;
  if (name == "quasi_smooth") return a.quasi_smooth;
  if (name == "smooth") return a.smooth;
  const auto type_is = [&](FamilyType t) -> std::optional<bool> {
    if (!a.classification) return std::nullopt;
    return a.classification->type == t;
  };
  if (name == "fano") return type_is(FamilyType::Fano);
  if (name == "calabi_yau") return type_is(FamilyType::CalabiYau);
  if (name == "general") return type_is(FamilyType::GeneralType);
  throw UsageError("unknown predicate '" + name + "'");
}

const std::vector<std::string> kFamilyPredicates = {"well_formed", "linear_cone", "quasi_smooth", "smooth",
                                                    "fano",        "calabi_yau",  "general"};

struct CheckArgs {
  std::string family;
  FormatFlags format;
  std::vector<std::string> asserts;
  bool strata = false;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  const WciFamily family = parse_family(args.family);
  const FamilyAnalysis a = analyze(family);
  if (args.format.format() == Format::Json) {
    print_json(out, analysis_to_json(family, a));
  } else {
    out << "family: " << encode_family(family) << '\n'
        << "dimension: " << family.dimension() << '\n'
        << "linear_cone: " << text_bool(a.linear_cone) << '\n'
        << "well_formed: " << text_bool(a.well_formed) << '\n'
        << "quasi_smooth: " << text_bool(a.quasi_smooth) << '\n'
        << "smooth: " << text_bool(a.smooth) << '\n'
        << "delta: " << a.delta << '\n'
        << "type: " << (a.classification ? to_string(a.classification->type) : "n/a") << '\n'
        << "fano_index: " << (a.classification ? text_optional(a.classification->fano_index) : "n/a") << '\n'
        << "fundamental_index: " << text_optional(a.fundamental_index) << '\n';
    if (!a.note.empty()) out << "note: " << a.note << '\n';
    if (args.strata && a.qs_report) {
      for (const auto& s : a.qs_report->strata) {
        const auto j = stratum_to_json(family, s);
        out << "stratum " << j["values"].get<std::string>() << " k=" << s.k << ' ' << to_string(s.outcome);
        for (const auto& [key, value] : j.items()) {
          if (key != "values" && key != "k" && key != "outcome") out << ' ' << key << '=' << value.dump();
        }
        out << '\n';
      }
    }
  }
  int code = kExitOk;
  for (const auto& name : args.asserts) {
    const auto value = family_predicate(name, a);
    if (!value) throw DomainError("predicate '" + name + "' is undefined here: " + a.note);
    if (!*value) code = kExitNegative;
  }
  return code;
}

struct PairArgs {
  std::string pair;
  Int h = 1;
  Int split = 0;
  FormatFlags format;
  std::vector<std::string> asserts;
};

int cmd_pair(const PairArgs& args, std::ostream& out) {
  const Pair pair = parse_pair(args.pair);
  const std::optional<Int> prime = args.split > 0 ? std::optional<Int>(args.split) : std::nullopt;
  const auto report = pair_report_to_json(pair, args.h, prime);
  if (args.format.format() == Format::Json) {
    print_json(out, report);
  } else {
    out << "pair: " << report["pair"].get<std::string>() << '\n'
        << "delta: " << report["delta"].get<Int>() << '\n'
        << "regular(h=" << args.h << "): " << (report["regular"].get<bool>() ? "true" : "false") << '\n';
    if (!report["witness"].is_null()) out << "witness: " << report["witness"].get<std::string>() << '\n';
    out << "cancelled: " << report["cancelled"].get<std::string>() << '\n'
        << "stripped: " << report["stripped"].get<std::string>() << " (units " << report["units"].get<Int>() << ")\n";
    if (prime) {
      const auto& s = report["split"];
      out << "split(" << *prime << "): top " << s["top"].get<std::string>() << ", at_prime "
          << s["at_prime"].get<std::string>() << ", delta_identity " << (s["delta_identity"].get<bool>() ? "true" : "false")
          << '\n';
    }
  }
  int code = kExitOk;
  for (const auto& name : args.asserts) {
    if (name != "regular") throw UsageError("unknown predicate '" + name + "'");
    if (!report["regular"].get<bool>()) code = kExitNegative;
  }
  return code;
}

struct FrobeniusArgs {
  std::string generators;
  bool brauer = false;
  FormatFlags format;
};

int cmd_frobenius(const FrobeniusArgs& args, std::ostream& out) {
  const auto gens = parse_list(args.generators);
  const Int g = frobenius(gens);
  if (args.format.format() == Format::Json) {
    nlohmann::json j = {{"generators", gens}, {"frobenius", g}};
    if (args.brauer) {
      j["brauer_bound"] = brauer_bound(gens);
      j["brauer_bound_min"] = gens.size() <= 8 ? nlohmann::json(brauer_bound_min(gens)) : nlohmann::json(nullptr);
    }
    print_json(out, j);
  } else if (args.brauer) {
    out << "frobenius: " << g << '\n' << "brauer_bound: " << brauer_bound(gens) << '\n';
    if (gens.size() <= 8) out << "brauer_bound_min: " << brauer_bound_min(gens) << '\n';
  } else {
    out << g << '\n';
  }
  return kExitOk;
}

struct HilbertArgs {
  std::string family;
  Int k = 0;
  FormatFlags format;
};

int cmd_hilbert(const HilbertArgs& args, std::ostream& out, std::ostream& err) {
  const WciFamily family = parse_family(args.family);
  const auto coefficients = hilbert_coefficients(family, args.k);
  if (coefficients.formal) err << "warning: formal series coefficients; the family is not a well-formed quasi-smooth non-cone\n";
  if (args.format.format(Format::Csv) == Format::Json) {
    print_json(out, hilbert_to_json(family, coefficients));
  } else {
    out << hilbert_to_csv(coefficients);
  }
  return kExitOk;
}

struct BaseLocusArgs {
  std::string family;
  Int ell = 0;
  FormatFlags format;
  std::vector<std::string> asserts;
};

int cmd_base_locus(const BaseLocusArgs& args, std::ostream& out) {
  const WciFamily family = parse_family(args.family);
  const auto components = base_locus(family, args.ell);
  if (args.format.format() == Format::Json) {
    print_json(out, base_locus_to_json(family, args.ell, components));
  } else if (components.empty()) {
    out << "empty\n";
  } else {
    for (const auto& c : components) {
      out << encode_weights(c.values) << ": " << (c.induced ? encode_family(*c.induced) : "empty") << '\n';
    }
  }
  int code = kExitOk;
  for (const auto& name : args.asserts) {
    if (name != "empty") throw UsageError("unknown predicate '" + name + "'");
    if (!components.empty()) code = kExitNegative;
  }
  return code;
}

struct BoundOptions {
  CLI::Option* min_codim = nullptr;
  CLI::Option* max_codim = nullptr;
  CLI::Option* min_vars = nullptr;
  CLI::Option* max_vars = nullptr;
  CLI::Option* max_weight = nullptr;
  CLI::Option* max_degree = nullptr;
  SearchBounds values;
  unsigned workers = 0;

  void attach(CLI::App* app) {
    min_codim = app->add_option("--min-codim", values.min_codim, "Smallest codimension c");
    max_codim = app->add_option("--max-codim", values.max_codim, "Largest codimension c");
    min_vars = app->add_option("--min-vars", values.min_vars, "Fewest weights n+1");
    max_vars = app->add_option("--max-vars", values.max_vars, "Most weights n+1");
    max_weight = app->add_option("--max-weight", values.max_weight, "Largest weight");
    max_degree = app->add_option("--max-degree", values.max_degree, "Largest degree");
    app->add_option("--workers", workers, "Worker threads (0: all available)");
  }

  SearchBounds resolve(SearchBounds base) const {
    const std::pair<CLI::Option*, Int SearchBounds::*> fields[] = {
        {min_codim, &SearchBounds::min_codim}, {max_codim, &SearchBounds::max_codim},
        {min_vars, &SearchBounds::min_vars},   {max_vars, &SearchBounds::max_vars},
        {max_weight, &SearchBounds::max_weight}, {max_degree, &SearchBounds::max_degree}};
    for (const auto& [option, field] : fields) {
      if (option->count() > 0) base.*field = values.*field;
    }
    return base;
  }
};

struct EnumerateArgs {
  std::string kind = "families";
  BoundOptions bounds;
  Filters filters;
  FormatFlags format;
};

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out) {
  const EnumerationKind kind = args.kind == "pairs" ? EnumerationKind::Pairs : EnumerationKind::Families;
  SearchBounds base;
  base.max_codim = 1;
  base.max_vars = 3;
  base.max_weight = 3;
  base.max_degree = 6;
  SearchBounds bounds = args.bounds.resolve(base);
  bounds.filters = args.filters;
  const auto instances = enumerate(bounds, kind, {args.bounds.workers, std::nullopt});
  switch (args.format.format()) {
    case Format::Json:
      print_json(out, enumerate_to_json(bounds, kind, instances));
      break;
    case Format::Csv:
      out << enumerate_to_csv(instances);
      break;
    case Format::Text:
      for (const auto& inst : instances) {
        out << inst.encoding << "  delta=" << inst.delta;
        for (const auto& [name, value] : inst.predicates) out << ' ' << name << '=' << text_bool(value);
        if (inst.type) out << " type=" << *inst.type;
        if (inst.fundamental_index) out << " index=" << *inst.fundamental_index;
        out << '\n';
      }
      break;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string claim;
  BoundOptions bounds;
  Int prime = 0;
  FormatFlags format;
  bool assert_clean = false;
  bool no_timing = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const Claim claim = parse_claim(args.claim);
  const SearchBounds bounds = args.bounds.resolve(default_bounds(claim));
  const std::optional<Int> prime = args.prime > 0 ? std::optional<Int>(args.prime) : std::nullopt;
  const VerifyReport report = run_claim(claim, bounds, prime, {args.bounds.workers, std::nullopt});
  switch (args.format.format()) {
    case Format::Json:
      print_json(out, verify_to_json(report, !args.no_timing));
      break;
    case Format::Csv:
      out << verify_to_csv(report);
      break;
    case Format::Text: {
      const auto& b = report.bounds;
      out << "claim: " << report.claim << '\n'
          << "bounds: c " << b.min_codim << ".." << b.max_codim << ", n+1 " << b.min_vars << ".." << b.max_vars
          << ", weights <= " << b.max_weight << ", degrees <= " << b.max_degree << '\n';
      if (report.prime) out << "prime: " << *report.prime << '\n';
      out << "checked: " << report.instances_checked << '\n';
      const auto list = [&](const char* title, const std::vector<Finding>& findings) {
        out << title << ": " << findings.size() << '\n';
        for (const auto& f : findings) {
          out << "  " << f.instance << "  [" << f.check << "]";
          for (const auto& m : f.values) out << ' ' << m.name << '=' << m.value.str();
          out << '\n';
        }
      };
      list("counterexamples", report.counterexamples);
      list("equality_witnesses", report.equality_witnesses);
      for (const auto& [key, value] : report.statistics) out << key << ": " << value << '\n';
      if (!args.no_timing) out << "elapsed_ms: " << static_cast<Int>(report.elapsed_ms) << '\n';
      break;
    }
  }
  return args.assert_clean && !report.counterexamples.empty() ? kExitNegative : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted complete intersections: checks, enumeration and bounded verification", "wcikit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::function<int()> action;

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Analyze a family, e.g. \"8,8,8 / 2^4,3^5,5^3\"");
  c->add_option("family", check.family, "Family: degrees / weights")->required();
  check.format.attach(c, false);
  c->add_option("--assert", check.asserts, "Exit 1 unless the predicate holds")->check(CLI::IsMember(kFamilyPredicates));
  c->add_flag("--strata", check.strata, "List the per-stratum quasi-smoothness verdicts");
  c->callback([&] { action = [&] { return cmd_check(check, out); }; });

  PairArgs pair;
  auto* p = app.add_subcommand("pair", "Pair calculus, e.g. \"6,6/2^2,3^2\"");
  p->add_option("pair", pair.pair, "Pair: degrees/weights")->required();
  p->add_option("--h-regular", pair.h, "Check h-regularity for this h (default 1)")->check(CLI::PositiveNumber);
  p->add_option("--split", pair.split, "Split at this prime")->check(CLI::PositiveNumber);
  pair.format.attach(p, false);
  p->add_option("--assert", pair.asserts, "Exit 1 unless the predicate holds")->check(CLI::IsMember({"regular"}));
  p->callback([&] { action = [&] { return cmd_pair(pair, out); }; });

  FrobeniusArgs frob;
  auto* f = app.add_subcommand("frobenius", "Frobenius number of coprime generators, e.g. 3,5,7");
  f->add_option("generators", frob.generators, "Comma-separated generators")->required();
  f->add_flag("--brauer", frob.brauer, "Also print the Brauer bound (given order) and its minimum over orders");
  frob.format.attach(f, false);
  f->callback([&] { action = [&] { return cmd_frobenius(frob, out); }; });

  HilbertArgs hilbert;
  auto* h = app.add_subcommand("hilbert", "Section dimensions h0(O_X(k)) for k = 0..K as CSV");
  h->add_option("family", hilbert.family, "Family: degrees / weights")->required();
  h->add_option("k", hilbert.k, "Largest degree K")->required()->check(CLI::NonNegativeNumber);
  hilbert.format.attach(h, true);
  h->callback([&] { action = [&] { return cmd_hilbert(hilbert, out, err); }; });

  BaseLocusArgs locus;
  auto* b = app.add_subcommand("base-locus", "Base locus of |O_X(ell)| on the general member");
  b->add_option("family", locus.family, "Family: degrees / weights")->required();
  b->add_option("ell", locus.ell, "Degree")->required();
  locus.format.attach(b, false);
  b->add_option("--assert", locus.asserts, "Exit 1 unless the predicate holds")->check(CLI::IsMember({"empty"}));
  b->callback([&] { action = [&] { return cmd_base_locus(locus, out); }; });

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "List canonical pairs or families within bounds");
  e->add_option("--kind", en.kind, "pairs or families")->check(CLI::IsMember({"pairs", "families"}));
  en.bounds.attach(e);
  e->add_flag("--fano", en.filters.fano, "Keep delta < 0 (union with --calabi-yau)");
  e->add_flag("--calabi-yau", en.filters.calabi_yau, "Keep delta = 0 (union with --fano)");
  e->add_flag("--smooth", en.filters.smooth, "Keep smooth families");
  e->add_flag("--quasi-smooth", en.filters.quasi_smooth, "Keep quasi-smooth families");
  e->add_flag("--well-formed", en.filters.well_formed, "Keep well-formed families");
  e->add_flag("--no-cones", en.filters.exclude_cones, "Drop linear cones (d_j = a_i)");
  e->add_flag("--gcd-one", en.filters.gcd_one, "Keep weights with gcd 1");
  en.format.attach(e, true);
  e->callback([&] { action = [&] { return cmd_enumerate(en, out); }; });

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Exhaustively check a claim within bounds");
  v->add_option("claim", ver.claim, "conjecture-regular, prop-regular, lemma-qdiv, nonvanishing or hypersurface")
      ->required()
      ->check(CLI::IsMember({"conjecture-regular", "prop-regular", "lemma-qdiv", "nonvanishing", "hypersurface"}));
  ver.bounds.attach(v);
  v->add_option("--prime", ver.prime, "Prime q for lemma-qdiv (default 2)")->check(CLI::PositiveNumber);
  ver.format.attach(v, true);
  v->add_flag("--assert", ver.assert_clean, "Exit 1 when any counterexample is found");
  v->add_flag("--no-timing", ver.no_timing, "Omit elapsed time so reports are byte-stable");
  v->callback([&] { action = [&] { return cmd_verify(ver, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"wcikit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace wci::cli
