#include "cli.hpp"

#include <bit>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "medv/errors.hpp"
#include "medv/io.hpp"
#include "medv/medvedev.hpp"
#include "medv/prucnal.hpp"

namespace medv::cli {

namespace {

using io::ordered_json;

struct Globals {
  std::optional<std::uint64_t> work_cap;
  bool serial = false;

  SearchOptions options() const {
    auto o = options_from_environment();
    if (work_cap) o.work_cap = *work_cap;
    if (serial) o.execution = Execution::Serial;
    return o;
  }
};

// Where a query is evaluated: -n N for frame(N), or --frame FILE.
struct FrameSource {
  int n = 0;
  std::string file;
  std::string at = "root";

  void add_to(CLI::App* cmd) {
    cmd->add_option("-n", n, "Medvedev frame frame(n), 1 <= n <= 6");
    cmd->add_option("--frame", file, "poset file");
    cmd->add_option("--at", at, "world name, or root")->capture_default_str();
  }

  std::string label() const { return file.empty() ? "frame(" + std::to_string(n) + ")" : file; }

  Poset load() const {
    if (!file.empty() && n != 0) throw DomainError("give either -n or --frame, not both");
    if (!file.empty()) return io::read_poset_file(file);
    if (n == 0) throw DomainError("a frame is needed: -n N or --frame FILE");
    return frame(n).poset();
  }

  int world(const Poset& p) const {
    if (at == "root") {
      if (auto r = root(p)) return *r;
      throw DomainError(label() + " has no root; choose a world with --at");
    }
    if (auto w = p.index_of(at)) return *w;
    throw DomainError("no world named '" + at + "' in " + label());
  }
};

void print_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// --- frame -------------------------------------------------------------------

int frame_gen(int n, const std::string& format, std::ostream& out) {
  const MedvedevFrame f(n);
  if (format == "dot")
    io::write_frame_dot(f, out);
  else
    io::write_frame_json(f, out);
  return kHolds;
}

int frame_check(const std::string& path, const std::string& format, std::ostream& out) {
  const auto p = io::read_poset_file(path);
  const auto r = root(p);
  const int ends = std::popcount(end_points(p));
  const auto report = check_conditions(p, ends);
  const auto c = characterize(p);

  if (format == "json") {
    ordered_json j;
    j["elements"] = p.size();
    j["rooted"] = r.has_value();
    j["end_points"] = ends;
    j["conditions"] = {{"chain_le", report.chain_le}, {"uni", report.uni}, {"end_ge", report.end_ge}};
    j["weak_uni"] = check_weak_uni(p);
    j["medvedev"] = c.has_value();
    if (c) {
      j["n"] = c->n;
      ordered_json iso = ordered_json::object();
      for (int w = 0; w < p.size(); ++w) iso[p.name(w)] = subset_name(c->iso[w]);
      j["iso"] = std::move(iso);
    }
    print_json(out, j);
  } else {
    if (c)
      out << "n-Medvedev frame with n = " << c->n << '\n';
    else
      out << "not an n-Medvedev frame\n";
    out << "elements: " << p.size() << '\n';
    out << "rooted: " << yes_no(r.has_value()) << '\n';
    out << "end points: " << ends << '\n';
    out << "chain<=" << ends << ": " << yes_no(report.chain_le) << '\n';
    out << "uni: " << yes_no(report.uni) << '\n';
    out << "end>=" << ends << ": " << yes_no(report.end_ge) << '\n';
    out << "weak uni: " << yes_no(check_weak_uni(p)) << '\n';
    if (c) {
      out << "iso:\n";
      for (int w = 0; w < p.size(); ++w) out << "  " << p.name(w) << " = " << subset_name(c->iso[w]) << '\n';
    }
  }
  return c ? kHolds : kFails;
}

// --- valid / decide / countermodel --------------------------------------------

enum class Emit { Verdict, CountermodelOnly };

int query(const Sequent& s, const FrameSource& src, const std::string& format, Emit emit,
          const SearchOptions& options, std::ostream& out) {
  const auto p = src.load();
  const int w = src.world(p);
  const auto r = consequence(p, w, s.premises, s.conclusion, options);

  std::optional<Model> model;
  if (r.witness) model.emplace(p, *r.witness);
  auto view = [&] { return io::CountermodelView{*model, w, s.premises, s.conclusion}; };

  if (emit == Emit::CountermodelOnly && !model) {
    if (format == "json")
      print_json(out, nullptr);
    else if (format == "dot")
      out << io::hasse_dot(p);
    else
      out << "no countermodel: " << render(s) << " holds at " << p.name(w) << " in " << src.label()
          << '\n';
    return kHolds;
  }
  if (emit == Emit::CountermodelOnly || format == "dot") {
    if (format == "json")
      print_json(out, io::countermodel_json(view()));
    else if (format == "dot")
      out << (model ? io::countermodel_dot(view()) : io::hasse_dot(p));
    else
      out << io::countermodel_text(view());
    return model ? kFails : kHolds;
  }

  if (format == "json") {
    ordered_json j;
    j["verdict"] = r.holds ? "valid" : "invalid";
    j["sequent"] = render(s);
    j["frame"] = src.label();
    j["world"] = p.name(w);
    j["work"] = r.work;
    j["countermodel"] = model ? io::countermodel_json(view()) : ordered_json(nullptr);
    print_json(out, j);
  } else {
    out << (r.holds ? "valid: " : "invalid: ") << render(s) << '\n';
    out << "frame: " << src.label() << ", world " << p.name(w) << '\n';
    out << "work: " << r.work << '\n';
    if (model) out << "countermodel:\n" << io::countermodel_text(view());
  }
  return r.holds ? kHolds : kFails;
}

// --- rule edn ------------------------------------------------------------------

int rule_edn(int n, const FrameSource& src, const std::string& format, const SearchOptions& options,
             std::ostream& out) {
  const auto p = src.load();
  const auto witness = edn_witness(p, n);
  const int best = max_pairwise_incompatible(p);
  const int r = *root(p);
  std::optional<EdnFalsifier> falsifier;
  if (!witness) falsifier = edn_falsifier(p, n, options);

  if (format == "json") {
    ordered_json j;
    j["rule"] = "Ed_" + std::to_string(n);
    j["frame"] = src.label();
    j["holds"] = witness.has_value();
    j["max_incompatible"] = best;
    if (witness) {
      auto family = ordered_json::array();
      for (int u : witness->family) family.push_back(p.name(u));
      j["family"] = std::move(family);
      j["valuation"] = io::valuation_json(p, witness->valuation);
    } else {
      j["premise"] = render(falsifier->premise);
      j["conclusion"] = render(falsifier->conclusion);
      j["valuation"] = io::valuation_json(p, falsifier->valuation);
    }
    print_json(out, j);
  } else {
    out << "Ed_" << n << " at " << p.name(r) << " in " << src.label() << ": "
        << (witness ? "holds" : "fails") << '\n';
    out << "pairwise incompatible elements: " << best << '\n';
    if (witness) {
      out << "family:";
      for (int u : witness->family) out << ' ' << p.name(u);
      out << '\n';
      for (const auto& [name, set] : witness->valuation)
        out << "V'(" << name << ") = " << io::world_set(p, set.members) << '\n';
    } else {
      out << "premise valid at root: " << render(falsifier->premise) << '\n';
      out << "conclusion falsified at root: " << render(falsifier->conclusion) << '\n';
    }
  }
  return witness ? kHolds : kFails;
}

// --- pmorph --------------------------------------------------------------------

int pmorph(int n, int j, const std::vector<int>& g, const std::string& format, std::ostream& out) {
  if (static_cast<int>(g.size()) != n)
    throw DomainError("pmorph needs " + std::to_string(n) + " images, got " + std::to_string(g.size()));
  const auto f = induced_pmorphism(n, j, g);
  const auto& src = f.source();
  const auto& dst = f.target();
  if (format == "json") {
    ordered_json map = ordered_json::object();
    for (int x = 0; x < src.size(); ++x) map[src.name(x)] = dst.name(f(x));
    print_json(out, {{"source", n}, {"target", j}, {"map", std::move(map)}});
  } else {
    out << "frame(" << n << ") -> frame(" << j << "), surjective p-morphism\n";
    for (int x = 0; x < src.size(); ++x) out << "  " << src.name(x) << " -> " << dst.name(f(x)) << '\n';
  }
  return kHolds;
}

// --- demos -----------------------------------------------------------------------

int demo_chain(int upto, const SearchOptions& options, std::ostream& out) {
  for (int n = 1; n <= upto; ++n) {
    const auto bd = separation_witness(n, options);
    out << "bd(" << n << ") = " << render(bd) << '\n';
    out << "  valid on frame(" << n << "), invalid on frame(" << n + 1 << ")\n";
    out << "  witness on frame(" << n + 1 << "):\n";
    const auto p = frame(n + 1).poset();
    for (const auto& [name, set] : size_bounded_valuation(n + 1, n))
      out << "    V(" << name << ") = " << io::world_set(p, set.members) << '\n';
  }
  return kHolds;
}

int demo_dp(int upto, const SearchOptions& options, std::ostream& out) {
  for (int n = 1; n <= upto; ++n) {
    const auto [a, b] = dp_failure_witness(n, options);
    out << "frame(" << n << "): " << render(Formula::disj(a, b)) << " valid\n";
    out << "  " << render(a) << " invalid\n";
    out << "  " << render(b) << " invalid\n";
  }
  return kHolds;
}

int demo_compactness(int upto, const SearchOptions& options, std::ostream& out) {
  for (int i = 1; i <= upto; ++i) {
    const auto m = compactness_witness(i);
    const auto& p = m.poset();
    out << "i = " << i << ": frame(" << i + 1 << ") root forces bd(j) -> p0 for j <= " << i
        << ", not p0\n";
    for (const auto& [name, set] : m.valuation())
      out << "  V(" << name << ") = " << io::world_set(p, set.members) << '\n';
  }
  for (int n = 1; n <= upto; ++n) {
    if (!compactness_entailment(n, options))
      throw VerificationFailure("{bd(j) -> p0 : j <= " + std::to_string(n) +
                                "} does not entail p0 on frame(" + std::to_string(n) + ")");
    out << "frame(" << n << "): {bd(j) -> p0 : j <= " << n << "} entails p0\n";
  }
  return kHolds;
}

int demo_prucnal(int n, const std::string& premise, const std::string& conclusion,
                 const SearchOptions& options, std::ostream& out) {
  const auto r = structural_demo(n, parse(premise), parse(conclusion), options);
  out << "rule: " << render(r.premise) << " / " << render(r.conclusion) << " on frame(" << n << ")\n";
  if (r.vacuous) {
    out << "premise -> conclusion is valid on frame(" << n << "); nothing to demonstrate\n";
    return kHolds;
  }
  const auto p = frame(n).poset();
  out << "falsifying valuation:\n";
  for (const auto& [name, set] : r.countervaluation)
    out << "  V(" << name << ") = " << io::world_set(p, set.members) << '\n';
  out << "substitution:\n";
  for (const auto& [name, f] : r.sigma) out << "  " << name << " := " << render(f) << '\n';
  out << "sigma(premise) = " << render(*r.sigma_premise) << ": valid\n";
  out << "sigma(conclusion) = " << render(*r.sigma_conclusion) << ": invalid\n";
  return kHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Model checker for the n-Medvedev logics", "medv"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--work-cap", globals.work_cap, "clause evaluation budget (env MEDV_WORK_CAP)");
  app.add_flag("--serial", globals.serial, "single-threaded search");

  std::function<int()> action;
  auto format_option = [](CLI::App* cmd, std::string& target, std::vector<std::string> allowed) {
    target = allowed.front();
    cmd->add_option("--format", target, "output format")
        ->check(CLI::IsMember(std::move(allowed)))
        ->capture_default_str();
  };

  // frame gen | check
  auto* frame_cmd = app.add_subcommand("frame", "generate or recognise Medvedev frames");
  frame_cmd->require_subcommand(1);
  int gen_n = 0;
  std::string gen_format;
  auto* gen = frame_cmd->add_subcommand("gen", "poset file of frame(n)");
  gen->add_option("n", gen_n, "1 <= n <= 19")->required();
  format_option(gen, gen_format, {"json", "dot"});
  gen->callback([&] { action = [&] { return frame_gen(gen_n, gen_format, out); }; });

  std::string check_file, check_format;
  auto* check = frame_cmd->add_subcommand("check", "is a poset file an n-Medvedev frame");
  check->add_option("file", check_file)->required();
  format_option(check, check_format, {"text", "json"});
  check->callback([&] { action = [&] { return frame_check(check_file, check_format, out); }; });

  // valid | decide | countermodel
  struct QueryArgs {
    std::string text;
    FrameSource src;
    std::string format;
  };
  QueryArgs valid_args, decide_args, cm_args;

  auto* valid = app.add_subcommand("valid", "is a formula valid at a world");
  valid->add_option("formula", valid_args.text)->required();
  valid_args.src.add_to(valid);
  format_option(valid, valid_args.format, {"text", "json", "dot"});
  valid->callback([&] {
    action = [&] {
      return query(Sequent{{}, parse(valid_args.text)}, valid_args.src, valid_args.format,
                   Emit::Verdict, globals.options(), out);
    };
  });

  auto* decide_cmd = app.add_subcommand("decide", "does a sequent hold at a world");
  decide_cmd->add_option("sequent", decide_args.text, "g1 ; g2 |- phi")->required();
  decide_args.src.add_to(decide_cmd);
  format_option(decide_cmd, decide_args.format, {"text", "json", "dot"});
  decide_cmd->callback([&] {
    action = [&] {
      return query(parse_sequent(decide_args.text), decide_args.src, decide_args.format,
                   Emit::Verdict, globals.options(), out);
    };
  });

  auto* cm = app.add_subcommand("countermodel", "first countermodel of a sequent");
  cm->add_option("sequent", cm_args.text, "g1 ; g2 |- phi")->required();
  cm_args.src.add_to(cm);
  format_option(cm, cm_args.format, {"text", "json", "dot"});
  cm->callback([&] {
    action = [&] {
      return query(parse_sequent(cm_args.text), cm_args.src, cm_args.format, Emit::CountermodelOnly,
                   globals.options(), out);
    };
  });

  // rule edn
  auto* rule = app.add_subcommand("rule", "frame correspondence of inference rules");
  rule->require_subcommand(1);
  int edn_n = 0;
  FrameSource edn_src;
  std::string edn_format;
  auto* edn = rule->add_subcommand("edn", "does Ed_n hold at the root");
  edn->add_option("rule_n", edn_n, "the n of Ed_n")->required()->check(CLI::PositiveNumber);
  edn->add_option("-n", edn_src.n, "Medvedev frame frame(n)");
  edn->add_option("--frame", edn_src.file, "rooted poset file");
  format_option(edn, edn_format, {"text", "json"});
  edn->callback([&] {
    action = [&] { return rule_edn(edn_n, edn_src, edn_format, globals.options(), out); };
  });

  // pmorph
  int pm_n = 0, pm_j = 0;
  std::vector<int> pm_g;
  std::string pm_format;
  auto* pm = app.add_subcommand("pmorph", "p-morphism frame(n) -> frame(j) induced by g");
  pm->add_option("n", pm_n)->required();
  pm->add_option("j", pm_j)->required();
  pm->add_option("g", pm_g, "g(0) .. g(n-1), each in 0..j-1")->required();
  format_option(pm, pm_format, {"text", "json"});
  pm->callback([&] { action = [&] { return pmorph(pm_n, pm_j, pm_g, pm_format, out); }; });

  // demo chain | dp | compactness | prucnal
  auto* demo = app.add_subcommand("demo", "re-verify the results about the n-Medvedev logics");
  demo->require_subcommand(1);
  int chain_upto = 3, dp_upto = 3, compact_upto = 3;
  auto* chain = demo->add_subcommand("chain", "bd(n) separates frame(n) from frame(n+1)");
  chain->add_option("--upto", chain_upto)->capture_default_str()->check(CLI::PositiveNumber);
  chain->callback([&] { action = [&] { return demo_chain(chain_upto, globals.options(), out); }; });
  auto* dp = demo->add_subcommand("dp", "failure of the disjunction property");
  dp->add_option("--upto", dp_upto)->capture_default_str()->check(CLI::PositiveNumber);
  dp->callback([&] { action = [&] { return demo_dp(dp_upto, globals.options(), out); }; });
  auto* compact = demo->add_subcommand("compactness", "the bd family entails p0 only as a whole");
  compact->add_option("--upto", compact_upto)->capture_default_str()->check(CLI::PositiveNumber);
  compact->callback(
      [&] { action = [&] { return demo_compactness(compact_upto, globals.options(), out); }; });
  int pr_n = 2;
  std::string pr_premise = "~~p", pr_conclusion = "p";
  auto* pr = demo->add_subcommand("prucnal", "substitution refuting a non-derivable rule");
  pr->add_option("-n", pr_n)->capture_default_str();
  pr->add_option("--premise", pr_premise)->capture_default_str();
  pr->add_option("--conclusion", pr_conclusion)->capture_default_str();
  pr->callback([&] {
    action = [&] { return demo_prucnal(pr_n, pr_premise, pr_conclusion, globals.options(), out); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action();
  } catch (const WorkCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kWorkCap;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerification;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace medv::cli
