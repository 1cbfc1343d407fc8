#include "loopkit/verify.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "loopkit/catalog.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/identity_check.hpp"
#include "loopkit/identity_parser.hpp"
#include "loopkit/isomorphism.hpp"
#include "loopkit/models.hpp"
#include "loopkit/structure.hpp"
#include "loopkit/table_io.hpp"

namespace loopkit::verify {

namespace {

constexpr std::size_t kMaxWitnesses = 5;
constexpr std::size_t kMaxNotes = 12;

const ClaimInfo kClaims[] = {
    {"example_fidelity", "the embedded order-8 table is a left Cheban loop in which 1 is nuclear but not central"},
    {"example_minimality",
     "no left Cheban loop of order below 8 has a nuclear non-central element; order 8 has one, isomorphic to the "
     "embedded example"},
    {"left_cheban_iff_lcc_squares", "left Cheban loops are exactly the LCC loops with R(x)^2 = L(x)^2"},
    {"left_cheban_wippacc_first_axiom", "left Cheban loops satisfy (xy.x).xz = x.(yx.x)z"},
    {"left_cheban_nuclei",
     "in a left Cheban loop the left and middle nuclei coincide and are normal, the nucleus is normal, the commutant "
     "lies in the nucleus, and squares of left nuclear elements are central"},
    {"left_cheban_wip_squares",
     "in a left Cheban loop squares of WIP elements are central, every square is a WIP element, and fourth powers are "
     "central"},
    {"cheban_iff_left_and_right", "a loop is Cheban exactly when it is left and right Cheban"},
    {"left_cheban_upgrade_to_cheban", "a left Cheban loop that is WIP, or has R(x^2) = L(x^2), is Cheban"},
    {"left_cheban_flexible_or_rap_is_extra", "a flexible or RAP left Cheban loop is extra"},
    {"cc_square_conditions_agree", "in a CC loop, R(x^2) = L(x^2) for all x exactly when R(x)^2 = L(x)^2 for all x"},
    {"cheban_iff_cc_central_squares", "Cheban loops are exactly the CC loops with R(x^2) = L(x^2)"},
    {"cheban_wippacc_class_two",
     "Cheban loops are WIP, power associative and CC, have squares in the commutant, an abelian quotient by the "
     "center, and nilpotency class at most 2"},
    {"odd_class_two_group_not_cheban",
     "the nonabelian group of order 27 and exponent 3 is a WIP PACC loop of class 2 without R(x^2) = L(x^2), hence "
     "not Cheban"},
    {"squares_or_involutions_abelian",
     "a left, right or two-sided Cheban loop in which every element is a square or an involution is an abelian group"},
};

std::string range(int hi) { return hi == 1 ? "1" : "1.." + std::to_string(hi); }

bool contains(const std::vector<LoopTable>& sorted, const LoopTable& t) {
  return std::binary_search(sorted.begin(), sorted.end(), t);
}

/// Enumerations shared by the claims of one run.
class Context {
 public:
  explicit Context(const SuiteConfig& config)
      : config_(config),
        max_order_(config.max_order),
        unconstrained_max_(std::min(config.unconstrained_max_order, config.max_order)),
        example_(config.example_override ? *config.example_override : models::example_3_3()),
        heisenberg_(models::heisenberg_27()) {
    if (config.max_order < 1 || config.max_order > kMaxOrder) {
      throw std::invalid_argument("max_order must be in 1.." + std::to_string(kMaxOrder));
    }
    const auto& lcc = catalog_identity("lcc");
    families_ = {
        {"all", {}},
        {"left_cheban", {catalog_identity("left_cheban")}},
        {"right_cheban", {catalog_identity("right_cheban")}},
        {"cheban", {catalog_identity("cheban")}},
        {"cc", {lcc, mirror(lcc)}},
        {"lcc_squares", {lcc, parse_identity("(y*x)*x = x*(x*y)")}},
        {"cc_central_squares", {lcc, mirror(lcc), parse_identity("y*(x*x) = (x*x)*y")}},
    };
  }

  int max_order() const { return max_order_; }
  int unconstrained_max() const { return unconstrained_max_; }
  const LoopTable& example() const { return example_; }
  const LoopTable& heisenberg() const { return heisenberg_; }

  /// Canonical forms, sorted, of the loops of order n in a named family.
  const std::vector<LoopTable>& family(const std::string& name, int n) {
    const auto key = std::make_pair(name, n);
    if (auto it = failures_.find(key); it != failures_.end()) throw BudgetExceeded(it->second);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    SearchSpec spec;
    spec.order = n;
    spec.constraints = families_.at(name);
    spec.mode = SearchMode::up_to_isomorphism;
    spec.limits = config_.limits;
    spec.jobs = config_.jobs;
    try {
      return cache_[key] = enumerate_all(spec);
    } catch (const BudgetExceeded&) {
      failures_[key] = "budget exhausted enumerating " + name + " loops of order " + std::to_string(n);
      throw BudgetExceeded(failures_[key]);
    }
  }

  /// Members of a family over orders 1..hi, followed by the fixed models
  /// that satisfy `hypothesis`.
  std::vector<LoopTable> family_with_models(const std::string& name, int hi,
                                            const std::function<bool(const LoopTable&)>& hypothesis) {
    std::vector<LoopTable> out;
    for (int n = 1; n <= hi; ++n) {
      const auto& f = family(name, n);
      out.insert(out.end(), f.begin(), f.end());
    }
    for (const auto* m : {&example_, &heisenberg_}) {
      if (hypothesis(*m)) out.push_back(*m);
    }
    return out;
  }

 private:
  SuiteConfig config_;
  int max_order_;
  int unconstrained_max_;
  LoopTable example_;
  LoopTable heisenberg_;
  std::map<std::string, std::vector<Identity>> families_;
  std::map<std::pair<std::string, int>, std::vector<LoopTable>> cache_;
  std::map<std::pair<std::string, int>, std::string> failures_;
};

class Recorder {
 public:
  explicit Recorder(ClaimResult& r) : r_(r) {}

  void fail(const LoopTable& witness, const std::string& why) {
    r_.verdict = Verdict::fail;
    if (r_.witnesses.size() < kMaxWitnesses && std::find(r_.witnesses.begin(), r_.witnesses.end(), witness) == r_.witnesses.end()) {
      r_.witnesses.push_back(witness);
    }
    note("order " + std::to_string(witness.order()) + ": " + why);
  }

  void expect(bool ok, const LoopTable& witness, const std::string& why) {
    if (!ok) fail(witness, why);
  }

  void note(const std::string& text) {
    if (r_.notes.size() < kMaxNotes) r_.notes.push_back(text);
  }

  /// Both sides must be sorted canonical forms; each difference is a witness.
  void same_set(const std::vector<LoopTable>& a, const std::vector<LoopTable>& b, const std::string& a_name,
                const std::string& b_name) {
    for (const auto& t : a) {
      if (!contains(b, t)) fail(t, "in " + a_name + " but not in " + b_name);
    }
    for (const auto& t : b) {
      if (!contains(a, t)) fail(t, "in " + b_name + " but not in " + a_name);
    }
  }

 private:
  ClaimResult& r_;
};

bool holds_named(const LoopTable& t, std::string_view name) { return holds(t, catalog_identity(name)); }
bool is_left_cheban(const LoopTable& t) { return holds_named(t, "left_cheban"); }
bool is_cheban(const LoopTable& t) { return holds_named(t, "cheban"); }

Element square(const LoopTable& t, Element x) { return t.mul(x, x); }

/// Canonical forms of the order-n loops satisfying `keep`, sorted.
std::vector<LoopTable> filter_all(Context& ctx, int n, const std::function<bool(const LoopTable&)>& keep) {
  std::vector<LoopTable> out;
  for (const auto& t : ctx.family("all", n)) {
    if (keep(t)) out.push_back(t);
  }
  return out;
}

std::string left_cheban_scope(const Context& ctx) {
  return "left Cheban loops of order " + range(ctx.max_order()) + " up to isomorphism, plus fixed models satisfying the law";
}

using ClaimFn = void (*)(Context&, ClaimResult&);

void example_fidelity(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  const auto& e = ctx.example();
  r.scope = "embedded order-8 table";
  rec.expect(e.order() == 8, e, "table is not of order 8");
  rec.expect(is_left_cheban(e), e, "left Cheban law fails");
  if (e.order() > 1) {
    rec.expect(nucleus(e).contains(1), e, "element 1 is not nuclear");
    rec.expect(!center(e).contains(1), e, "element 1 is central");
  }
}

void example_minimality(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  rec.note("interpreted as: least order of a left Cheban loop with a nuclear element that is not central");
  const int below = std::min(7, ctx.max_order());
  for (int n = 1; n <= below; ++n) {
    for (const auto& t : ctx.family("left_cheban", n)) {
      rec.expect(nucleus(t).subset_of(center(t)), t, "nucleus not contained in center below order 8");
    }
  }
  if (ctx.max_order() < 8) {
    r.scope = "left Cheban loops of order " + range(below) + " up to isomorphism; order 8 not reached";
    return;
  }
  r.scope = "left Cheban loops of order 1..8 up to isomorphism";
  const auto target = canonical_form(ctx.example());
  bool found_any = false;
  bool found_example = false;
  for (const auto& t : ctx.family("left_cheban", 8)) {
    if (nucleus(t).subset_of(center(t))) continue;
    found_any = true;
    found_example = found_example || t == target;
  }
  rec.expect(found_any, ctx.example(), "no order-8 left Cheban loop has a nuclear non-central element");
  rec.expect(found_example, ctx.example(), "the embedded example is not among the order-8 witnesses");
}

void left_cheban_iff_lcc_squares(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  for (int n = 1; n <= ctx.unconstrained_max(); ++n) {
    rec.same_set(filter_all(ctx, n, is_left_cheban),
                 filter_all(ctx, n, [](const LoopTable& t) { return is_lcc(t) && squares_translation(t); }),
                 "left Cheban filter", "LCC with R(x)^2 = L(x)^2 filter");
  }
  for (int n = 1; n <= ctx.max_order(); ++n) {
    rec.same_set(ctx.family("left_cheban", n), ctx.family("lcc_squares", n), "left Cheban search",
                 "LCC with R(x)^2 = L(x)^2 search");
  }
  r.scope = "all loops of order " + range(ctx.unconstrained_max()) + " filtered both ways; independent searches for each side at order " +
            range(ctx.max_order());
}

void left_cheban_wippacc_first_axiom(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  const auto& ax = catalog_identity("wippacc_ax1");
  for (const auto& t : ctx.family_with_models("left_cheban", ctx.max_order(), is_left_cheban)) {
    rec.expect(holds(t, ax), t, "first WIP PACC axiom fails");
  }
  r.scope = left_cheban_scope(ctx);
}

void left_cheban_nuclei(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  for (const auto& t : ctx.family_with_models("left_cheban", ctx.max_order(), is_left_cheban)) {
    const auto nl = left_nucleus(t);
    const auto n = nucleus(t);
    const auto z = center(t);
    rec.expect(nl == middle_nucleus(t), t, "left and middle nuclei differ");
    rec.expect(is_normal(t, nl), t, "left nucleus is not normal");
    rec.expect(is_normal(t, n), t, "nucleus is not normal");
    rec.expect(commutant(t).subset_of(n), t, "commutant not contained in nucleus");
    for (Element a : nl.members()) {
      rec.expect(z.contains(square(t, a)), t, "square of left nuclear " + std::to_string(a) + " is not central");
    }
  }
  r.scope = left_cheban_scope(ctx);
}

void left_cheban_wip_squares(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  for (const auto& t : ctx.family_with_models("left_cheban", ctx.max_order(), is_left_cheban)) {
    const auto w = wip_elements(t);
    const auto z = center(t);
    for (Element c : w.members()) {
      rec.expect(z.contains(square(t, c)), t, "square of WIP element " + std::to_string(c) + " is not central");
    }
    for (Element x = 0; x < t.order(); ++x) {
      const Element x2 = square(t, x);
      rec.expect(w.contains(x2), t, "square of " + std::to_string(x) + " is not a WIP element");
      rec.expect(z.contains(square(t, x2)), t, "fourth power of " + std::to_string(x) + " is not central");
    }
  }
  r.scope = left_cheban_scope(ctx);
}

void cheban_iff_left_and_right(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  for (int n = 1; n <= ctx.unconstrained_max(); ++n) {
    for (const auto& t : ctx.family("all", n)) {
      const bool both = is_left_cheban(t) && holds_named(t, "right_cheban");
      rec.expect(is_cheban(t) == both, t, "Cheban flag disagrees with left and right Cheban flags");
    }
  }
  for (int n = 1; n <= ctx.max_order(); ++n) {
    std::vector<LoopTable> both;
    std::set_intersection(ctx.family("left_cheban", n).begin(), ctx.family("left_cheban", n).end(),
                          ctx.family("right_cheban", n).begin(), ctx.family("right_cheban", n).end(),
                          std::back_inserter(both));
    rec.same_set(ctx.family("cheban", n), both, "Cheban search", "left and right Cheban searches");
  }
  r.scope = "all loops of order " + range(ctx.unconstrained_max()) + "; Cheban, left and right Cheban searches at order " +
            range(ctx.max_order());
}

void left_cheban_upgrade_to_cheban(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  for (const auto& t : ctx.family_with_models("left_cheban", ctx.max_order(), is_left_cheban)) {
    const bool wip = wip_elements(t).is_full();
    if (wip || square_central_translation(t)) {
      rec.expect(is_cheban(t), t, wip ? "WIP left Cheban loop is not Cheban" : "left Cheban loop with R(x^2) = L(x^2) is not Cheban");
    }
  }
  r.scope = left_cheban_scope(ctx);
}

void left_cheban_flexible_or_rap_is_extra(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  for (const auto& t : ctx.family_with_models("left_cheban", ctx.max_order(), is_left_cheban)) {
    if (holds_named(t, "flexible") || holds_named(t, "rap")) {
      rec.expect(holds_named(t, "extra"), t, "flexible or RAP left Cheban loop is not extra");
      rec.expect(is_cheban(t), t, "flexible or RAP left Cheban loop is not Cheban");
    }
  }
  r.scope = left_cheban_scope(ctx);
}

void cc_square_conditions_agree(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  auto check = [&](const LoopTable& t) {
    rec.expect(squares_translation(t) == square_central_translation(t), t,
               "R(x)^2 = L(x)^2 and R(x^2) = L(x^2) disagree in a CC loop");
  };
  for (int n = 1; n <= ctx.unconstrained_max(); ++n) {
    for (const auto& t : filter_all(ctx, n, is_cc)) check(t);
  }
  for (const auto& t : ctx.family_with_models("cc", ctx.max_order(), is_cc)) check(t);
  r.scope = "CC loops among all loops of order " + range(ctx.unconstrained_max()) + "; CC search at order " +
            range(ctx.max_order()) + "; fixed models that are CC";
}

void cheban_iff_cc_central_squares(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  for (int n = 1; n <= ctx.unconstrained_max(); ++n) {
    rec.same_set(filter_all(ctx, n, is_cheban),
                 filter_all(ctx, n, [](const LoopTable& t) { return is_cc(t) && square_central_translation(t); }),
                 "Cheban filter", "CC with R(x^2) = L(x^2) filter");
  }
  for (int n = 1; n <= ctx.max_order(); ++n) {
    rec.same_set(ctx.family("cheban", n), ctx.family("cc_central_squares", n), "Cheban search",
                 "CC with R(x^2) = L(x^2) search");
  }
  r.scope = "all loops of order " + range(ctx.unconstrained_max()) + " filtered both ways; independent searches for each side at order " +
            range(ctx.max_order());
}

void cheban_wippacc_class_two(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  for (const auto& t : ctx.family_with_models("cheban", ctx.max_order(), is_cheban)) {
    rec.expect(wip_elements(t).is_full(), t, "not WIP");
    rec.expect(is_power_associative(t), t, "not power associative");
    rec.expect(is_cc(t), t, "not CC");
    const auto cls = nilpotency_class(t);
    rec.expect(cls && *cls <= 2, t, "not nilpotent of class at most 2");
    const auto c = commutant(t);
    for (Element x = 0; x < t.order(); ++x) {
      rec.expect(c.contains(square(t, x)), t, "square of " + std::to_string(x) + " is not in the commutant");
    }
    const auto q = quotient(t, center(t));
    rec.expect(is_associative(q) && is_commutative(q), t, "quotient by the center is not an abelian group");
  }
  r.scope = "Cheban loops of order " + range(ctx.max_order()) + " up to isomorphism, plus fixed models satisfying the law";
}

void odd_class_two_group_not_cheban(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  const auto& h = ctx.heisenberg();
  r.scope = "order-27 group of upper unitriangular 3x3 matrices over GF(3)";
  rec.expect(is_group(h), h, "not a group");
  rec.expect(!is_commutative(h), h, "abelian");
  rec.expect(wip_elements(h).is_full(), h, "not WIP");
  rec.expect(is_power_associative(h), h, "not power associative");
  rec.expect(is_cc(h), h, "not CC");
  rec.expect(nilpotency_class(h) == 2, h, "nilpotency class is not 2");
  rec.expect(!square_central_translation(h), h, "R(x^2) = L(x^2) holds");
  rec.expect(!is_cheban(h), h, "Cheban law holds");
}

bool squares_or_involutions(const LoopTable& t) {
  std::vector<bool> is_square(static_cast<std::size_t>(t.order()), false);
  for (Element y = 0; y < t.order(); ++y) is_square[static_cast<std::size_t>(square(t, y))] = true;
  for (Element x = 0; x < t.order(); ++x) {
    if (!is_square[static_cast<std::size_t>(x)] && square(t, x) != 0) return false;
  }
  return true;
}

void squares_or_involutions_abelian(Context& ctx, ClaimResult& r) {
  Recorder rec(r);
  std::set<LoopTable> seen;
  auto check = [&](const LoopTable& t) {
    if (!squares_or_involutions(t) || !seen.insert(t).second) return;
    rec.expect(is_group(t) && is_commutative(t), t, "every element a square or involution, yet not an abelian group");
  };
  auto any_cheban = [](const LoopTable& t) { return is_left_cheban(t) || holds_named(t, "right_cheban") || is_cheban(t); };
  for (const char* fam : {"left_cheban", "right_cheban", "cheban"}) {
    for (const auto& t : ctx.family_with_models(fam, ctx.max_order(), any_cheban)) check(t);
  }
  for (int n = 1; n <= ctx.unconstrained_max(); ++n) {
    for (const auto& t : filter_all(ctx, n, any_cheban)) check(t);
  }
  rec.note(std::to_string(seen.size()) + " loops met the hypothesis");
  r.scope = "left, right and two-sided Cheban loops of order " + range(ctx.max_order()) +
            " up to isomorphism, plus fixed models satisfying a law";
}

const std::map<std::string_view, ClaimFn>& registry() {
  static const std::map<std::string_view, ClaimFn> fns = {
      {"example_fidelity", example_fidelity},
      {"example_minimality", example_minimality},
      {"left_cheban_iff_lcc_squares", left_cheban_iff_lcc_squares},
      {"left_cheban_wippacc_first_axiom", left_cheban_wippacc_first_axiom},
      {"left_cheban_nuclei", left_cheban_nuclei},
      {"left_cheban_wip_squares", left_cheban_wip_squares},
      {"cheban_iff_left_and_right", cheban_iff_left_and_right},
      {"left_cheban_upgrade_to_cheban", left_cheban_upgrade_to_cheban},
      {"left_cheban_flexible_or_rap_is_extra", left_cheban_flexible_or_rap_is_extra},
      {"cc_square_conditions_agree", cc_square_conditions_agree},
      {"cheban_iff_cc_central_squares", cheban_iff_cc_central_squares},
      {"cheban_wippacc_class_two", cheban_wippacc_class_two},
      {"odd_class_two_group_not_cheban", odd_class_two_group_not_cheban},
      {"squares_or_involutions_abelian", squares_or_involutions_abelian},
  };
  return fns;
}

ClaimResult run_in(Context& ctx, const ClaimInfo& info) {
  ClaimResult r;
  r.claim_id = std::string(info.id);
  r.statement = std::string(info.statement);
  try {
    registry().at(info.id)(ctx, r);
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::skipped;
    r.witnesses.clear();
    r.notes.push_back(e.what());
  }
  return r;
}

const ClaimInfo& info_for(std::string_view id) {
  for (const auto& c : kClaims) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown claim: " + std::string(id));
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "?";
}

std::span<const ClaimInfo> claims() { return kClaims; }

ClaimResult run_claim(std::string_view claim_id, const SuiteConfig& config) {
  const auto& info = info_for(claim_id);
  Context ctx(config);
  return run_in(ctx, info);
}

std::vector<ClaimResult> run_suite(const SuiteConfig& config) {
  Context ctx(config);
  std::vector<ClaimResult> out;
  for (const auto& info : kClaims) out.push_back(run_in(ctx, info));
  return out;
}

bool all_passed(std::span<const ClaimResult> results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.verdict == Verdict::pass; });
}

void save_witnesses(std::vector<ClaimResult>& results, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (auto& r : results) {
    r.witness_files.clear();
    for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
      const auto path = dir / (r.claim_id + "_" + std::to_string(k + 1) + ".tbl");
      std::ofstream out(path);
      if (!out) throw Error("cannot write " + path.string());
      write_table(out, r.witnesses[k]);
      r.witness_files.push_back(path.string());
    }
  }
}

nlohmann::json to_json(const ClaimResult& result) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : result.witnesses) witnesses.push_back(w.rows());
  return {
      {"claim_id", result.claim_id},
      {"statement", result.statement},
      {"scope", result.scope},
      {"verdict", to_string(result.verdict)},
      {"witnesses", witnesses},
      {"witness_files", result.witness_files},
      {"notes", result.notes},
  };
}

nlohmann::json to_json(std::span<const ClaimResult> results) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& r : results) claims.push_back(to_json(r));
  return {{"all_passed", all_passed(results)}, {"claims", claims}};
}

std::string render_text(std::span<const ClaimResult> results) {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.claim_id.size());
  std::ostringstream out;
  for (const auto& r : results) {
    std::string verdict(to_string(r.verdict));
    for (auto& ch : verdict) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << verdict << std::string(8 - verdict.size(), ' ') << r.claim_id << std::string(width - r.claim_id.size() + 2, ' ')
        << r.scope << '\n';
    for (const auto& n : r.notes) out << "        - " << n << '\n';
  }
  for (const auto& r : results) {
    for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
      out << "\nwitness " << k + 1 << " for " << r.claim_id;
      if (k < r.witness_files.size()) out << " (" << r.witness_files[k] << ")";
      out << ":\n" << loopkit::to_string(r.witnesses[k]);
    }
  }
  out << '\n' << (all_passed(results) ? "all claims passed" : "some claims did not pass") << '\n';
  return out.str();
}

}  // namespace loopkit::verify
