#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <loopkit/catalog.hpp>
#include <loopkit/errors.hpp>
#include <loopkit/identity_check.hpp>
#include <loopkit/report.hpp>
#include <loopkit/search.hpp>
#include <loopkit/structure.hpp>
#include <loopkit/table_io.hpp>
#include <loopkit/term.hpp>
#include <loopkit/verify.hpp>

namespace {

using namespace loopkit;

enum Exit : int { kOk = 0, kFails = 1, kInputError = 2, kBudget = 3 };

std::string set_text(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s.members()) {
    out += (first ? "" : ", ") + std::to_string(e);
    first = false;
  }
  return out + "}";
}

void print_relabel_note(const ValidatedTable& v, std::ostream& out) {
  if (v.relabel.is_identity()) return;
  out << "# identity element was " << v.relabel.inverse()(0) << "; labels " << v.relabel.inverse()(0)
      << " and 0 were swapped\n";
}

int cmd_analyze(const std::string& path, const std::string& format) {
  const auto v = read_table_file(path);
  const auto report = analyze(v.table);
  if (format == "json") {
    auto doc = to_json(report);
    doc["order"] = v.table.order();
    if (!v.relabel.is_identity()) doc["relabel"] = v.relabel.images();
    std::cout << doc.dump(2) << '\n';
    return kOk;
  }
  print_relabel_note(v, std::cout);
  std::cout << "order: " << v.table.order() << '\n'
            << "left_nucleus: " << set_text(report.left_nucleus) << '\n'
            << "middle_nucleus: " << set_text(report.middle_nucleus) << '\n'
            << "right_nucleus: " << set_text(report.right_nucleus) << '\n'
            << "nucleus: " << set_text(report.nucleus) << '\n'
            << "commutant: " << set_text(report.commutant) << '\n'
            << "center: " << set_text(report.center) << '\n'
            << "nilpotency_class: "
            << (report.nilpotency_class ? std::to_string(*report.nilpotency_class) : std::string("none")) << '\n';
  for (auto name : flag_names()) {
    std::cout << name << ": " << (flag_value(report.flags, name) ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_check(const std::string& path, const std::string& identity_text) {
  const auto identity = resolve_identity(identity_text);
  const auto v = read_table_file(path);
  const auto cex = counterexample(v.table, identity);
  if (!cex) {
    std::cout << "holds: " << render(identity) << '\n';
    return kOk;
  }
  // Report the assignment in the file's own labels.
  const auto back = v.relabel.inverse();
  std::cout << "fails: " << render(identity) << "\ncounterexample:";
  for (const auto& [var, value] : *cex) std::cout << ' ' << var << '=' << back(value);
  const auto lhs = eval_term(identity.lhs, *cex, v.table);
  const auto rhs = eval_term(identity.rhs, *cex, v.table);
  std::cout << "\nlhs=" << back(lhs) << " rhs=" << back(rhs) << '\n';
  return kFails;
}

/// Named table filters for `enumerate --predicate`. A leading '!' negates.
LoopPredicate make_predicate(const std::vector<std::string>& names) {
  using Test = std::function<bool(const LoopTable&)>;
  static const std::map<std::string, Test, std::less<>> builtin = {
      {"associative", is_associative},
      {"commutative", is_commutative},
      {"group", is_group},
      {"nucleus_not_central",
       [](const LoopTable& t) { return !nucleus(t).subset_of(center(t)); }},
  };
  std::vector<Test> tests;
  for (const auto& raw : names) {
    const bool negate = !raw.empty() && raw[0] == '!';
    const std::string name = negate ? raw.substr(1) : raw;
    Test base;
    if (auto it = builtin.find(name); it != builtin.end()) {
      base = it->second;
    } else {
      const auto names_list = flag_names();
      if (std::find(names_list.begin(), names_list.end(), name) == names_list.end()) {
        throw CLI::ValidationError("--predicate", "unknown predicate '" + name + "'");
      }
      base = [name](const LoopTable& t) { return flag_value(analyze(t).flags, name); };
    }
    tests.push_back(negate ? Test([base](const LoopTable& t) { return !base(t); }) : base);
  }
  if (tests.empty()) return {};
  return [tests](const LoopTable& t) {
    return std::all_of(tests.begin(), tests.end(), [&](const Test& f) { return f(t); });
  };
}

struct EnumerateArgs {
  int order = 1;
  std::vector<std::string> identities;
  std::string mode = "all";
  bool up_to_iso = false;
  std::vector<std::string> predicates;
  int jobs = 1;
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;
  std::string out;
  bool count_only = false;
};

int cmd_enumerate(const EnumerateArgs& a) {
  SearchSpec spec;
  spec.order = a.order;
  for (const auto& text : a.identities) spec.constraints.push_back(resolve_identity(text));
  spec.mode = a.up_to_iso || a.mode == "iso" ? SearchMode::up_to_isomorphism
              : a.mode == "first"            ? SearchMode::first_only
                                             : SearchMode::all_labeled;
  spec.predicate = make_predicate(a.predicates);
  spec.jobs = a.jobs;
  spec.limits = {a.max_nodes, a.max_seconds};

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw Error("cannot write " + a.out);
  }
  std::ostream& out = a.out.empty() ? std::cout : file;
  bool first = true;
  const auto outcome = enumerate(spec, [&](const LoopTable& t) {
    if (a.count_only) return;
    if (!first) out << '\n';
    first = false;
    write_table(out, t);
  });
  auto trailer = to_json(outcome.stats);
  trailer["complete"] = outcome.complete;
  if (!a.count_only && !first) out << '\n';
  out << "# stats: " << trailer.dump() << '\n';
  if (!outcome.complete) {
    std::cerr << "error: search budget exhausted; output is partial\n";
    return kBudget;
  }
  return kOk;
}

struct VerifyArgs {
  int max_order = 8;
  int unconstrained_max_order = 6;
  std::string format = "text";
  std::string witness_dir;
  std::vector<std::string> claims;
  int jobs = 1;
  double max_seconds = 0;
  std::uint64_t max_nodes = 0;
  std::string example_table;
};

int cmd_verify(const VerifyArgs& a) {
  verify::SuiteConfig config;
  config.max_order = a.max_order;
  config.unconstrained_max_order = a.unconstrained_max_order;
  config.jobs = a.jobs;
  config.limits = {a.max_nodes, a.max_seconds};
  if (!a.example_table.empty()) config.example_override = read_table_file(a.example_table).table;

  std::vector<verify::ClaimResult> results;
  if (a.claims.empty()) {
    results = verify::run_suite(config);
  } else {
    for (const auto& id : a.claims) results.push_back(verify::run_claim(id, config));
  }
  if (!a.witness_dir.empty()) verify::save_witnesses(results, a.witness_dir);

  if (a.format == "json") {
    std::cout << verify::to_json(results).dump(2) << '\n';
  } else {
    std::cout << verify::render_text(results);
  }
  bool failed = false;
  bool skipped = false;
  for (const auto& r : results) {
    failed = failed || r.verdict == verify::Verdict::fail;
    skipped = skipped || r.verdict == verify::Verdict::skipped;
  }
  return failed ? kFails : skipped ? kBudget : kOk;
}

int cmd_catalog(const std::string& format) {
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& e : catalog()) doc.push_back({{"name", e.name}, {"text", e.text}, {"rendered", render(e.identity)}});
    std::cout << doc.dump(2) << '\n';
    return kOk;
  }
  std::size_t width = 0;
  for (const auto& e : catalog()) width = std::max(width, e.name.size());
  for (const auto& e : catalog()) std::cout << e.name << std::string(width - e.name.size() + 2, ' ') << e.text << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loopkit: finite loops as Cayley tables"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  auto* analyze_cmd = app.add_subcommand("analyze", "Print the structural invariants of a table file");
  analyze_cmd->add_option("table", path, "Table file")->required();
  analyze_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string identity;
  auto* check_cmd = app.add_subcommand("check", "Check an identity on a table file");
  check_cmd->add_option("table", path, "Table file")->required();
  check_cmd->add_option("identity", identity, "Catalog name or expression such as \"x*(y*x) = (x*y)*x\"")->required();

  EnumerateArgs ea;
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate loops of one order satisfying identities");
  enum_cmd->add_option("--order", ea.order, "Order of the loops")->required()->check(CLI::Range(1, kMaxOrder));
  enum_cmd->add_option("--identity", ea.identities, "Catalog name or expression; repeatable");
  enum_cmd->add_option("--mode", ea.mode, "all, iso or first")->check(CLI::IsMember({"all", "iso", "first"}));
  enum_cmd->add_flag("--up-to-iso", ea.up_to_iso, "Same as --mode iso");
  enum_cmd->add_option("--predicate", ea.predicates,
                       "Filter: a report flag, associative, commutative, group or nucleus_not_central; "
                       "prefix ! to negate; repeatable");
  enum_cmd->add_option("--jobs", ea.jobs, "Worker threads")->check(CLI::PositiveNumber);
  enum_cmd->add_option("--max-nodes", ea.max_nodes, "Node budget (0 = unlimited)");
  enum_cmd->add_option("--max-seconds", ea.max_seconds, "Time budget (0 = unlimited)");
  enum_cmd->add_option("--out", ea.out, "Write tables here instead of stdout");
  enum_cmd->add_flag("--count", ea.count_only, "Print only the stats trailer");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Check the toolkit's catalog of loop-theory claims on finite models");
  verify_cmd->add_option("--max-order", va.max_order, "Bound for constrained searches")->check(CLI::Range(1, kMaxOrder));
  verify_cmd->add_option("--unconstrained-max-order", va.unconstrained_max_order,
                         "Bound for enumerating every loop of an order");
  verify_cmd->add_option("--format", va.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--witness-dir", va.witness_dir, "Write counterexample tables here");
  verify_cmd->add_option("--claim", va.claims, "Run only this claim; repeatable");
  verify_cmd->add_option("--jobs", va.jobs, "Worker threads per search")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-seconds", va.max_seconds, "Time budget per search");
  verify_cmd->add_option("--max-nodes", va.max_nodes, "Node budget per search");
  verify_cmd->add_option("--example-table", va.example_table, "Replace the embedded order-8 example")
      ->group("");  // hidden; used by the harness self-test

  auto* catalog_cmd = app.add_subcommand("catalog", "List the named identities");
  catalog_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(path, format);
    if (*check_cmd) return cmd_check(path, identity);
    if (*enum_cmd) return cmd_enumerate(ea);
    if (*verify_cmd) return cmd_verify(va);
    if (*catalog_cmd) return cmd_catalog(format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
