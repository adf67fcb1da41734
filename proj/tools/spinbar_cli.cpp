// Command-line front end: decompose, abacus, tau, pairs, blocks, verify.
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spinbar/serialize.hpp"

using namespace spinbar;

namespace {

std::string show_quotient(const std::vector<Partition>& q) {
  std::string s = "(";
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? ", " : "") + display(q[i]);
  return s + ")";
}

std::string show_ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct Options {
  int p = 0;
  int t = 0;
  std::string partition;
  bool json = false;
  bool nonspin = false;
  bool twisted = false;
  int e = 1;
  int s = 1;
  int n = 0;
  std::string group = "stilde";
  std::string suite;
  int max_n = 10;
  int max_w = 3;
  bool expect_violations = false;
  bool full_f = false;
  int threads = 0;
};

int cmd_decompose(const Options& o) {
  if (o.nonspin) {
    const auto dec = ordinary_decompose(parse_partition(o.partition), o.p);
    if (o.json) {
      std::cout << json(dec).dump() << '\n';
      return 0;
    }
    std::cout << "core: " << display(dec.core) << '\n'
              << "quotient: " << show_quotient(dec.quotient) << '\n'
              << "charvec: " << show_ints(dec.charvec) << '\n'
              << "weight: " << dec.weight << '\n'
              << "cocore: " << display(dec.cocore) << '\n'
              << "d: " << (dec.d ? std::to_string(*dec.d) : "undefined") << '\n';
    return 0;
  }
  const auto dec = bar_decompose(parse_bar_partition(o.partition), o.p);
  if (o.json) {
    std::cout << json(dec).dump() << '\n';
    return 0;
  }
  std::cout << "core: " << display(dec.core) << '\n'
            << "quotient: " << show_quotient(dec.quotient) << '\n'
            << "charvec: " << show_ints(dec.charvec) << '\n'
            << "weight: " << dec.weight << '\n'
            << "cocore: " << display(dec.cocore) << '\n'
            << "d: " << dec.d << '\n';
  return 0;
}

int cmd_abacus(const Options& o) {
  const int t = o.t ? o.t : o.p;
  const auto a = bar_abacus(parse_bar_partition(o.partition), t);
  if (o.twisted) {
    const auto tw = twist(a);
    std::cout << (o.json ? json(tw).dump() + "\n" : render(tw));
  } else {
    std::cout << (o.json ? json(a).dump() + "\n" : render(a));
  }
  return 0;
}

int cmd_tau(const Options& o) {
  const GaloisElement f(o.p, o.e, o.s);
  const Partition lambda = parse_partition(o.partition);
  const Sign s = o.nonspin ? tau_selfconjugate(lambda, f) : tau_partition(BarPartition(lambda), f);
  if (o.json)
    std::cout << json{{"partition", lambda}, {"f", f}, {"tau", s.value()}}.dump() << '\n';
  else
    std::cout << to_string(s) << '\n';
  return 0;
}

int cmd_pairs(const Options& o) {
  std::vector<std::pair<int, int>> pairs;
  if (o.nonspin)
    pairs = selfconjugate_paired_hooks(parse_partition(o.partition), o.p);
  else
    pairs = paired_parts(parse_bar_partition(o.partition), o.p);
  if (o.json) {
    std::cout << json(pairs).dump() << '\n';
    return 0;
  }
  for (auto [a, b] : pairs) std::cout << "(" << a << "," << b << ")\n";
  return 0;
}

int cmd_blocks(const Options& o) {
  const Group group = parse_group(o.group);
  json out = json::array();
  for (const auto& kappa : bar_cores_up_to(o.n, o.p)) {
    if ((o.n - kappa.size()) % o.p != 0) continue;
    const int w = (o.n - kappa.size()) / o.p;
    json block{{"kappa", kappa}, {"w", w}, {"group", to_string(group)}};
    json members = json::array();
    if (group == Group::stilde || group == Group::atilde) {
      const auto labels = spin_block_members({kappa, w, group, o.p});
      const auto hd = height_and_defect(labels, o.n, o.p);
      block["defect"] = hd.defect;
      for (std::size_t i = 0; i < labels.size(); ++i) members.push_back({{"label", labels[i]}, {"height", hd.heights[i]}});
    } else {
      // The twisted product attached to n has r = |kappa|, so the block lives in G of that shape.
      const auto labels = block_members({kappa, w, group, o.p});
      const auto hd = g_height_and_defect(labels, o.p);
      block["defect"] = hd.defect;
      for (std::size_t i = 0; i < labels.size(); ++i) members.push_back({{"label", labels[i]}, {"height", hd.heights[i]}});
    }
    block["members"] = members;
    out.push_back(block);
  }
  if (o.json) {
    std::cout << out.dump() << '\n';
    return 0;
  }
  for (const auto& b : out) {
    std::cout << "block kappa=" << display(b["kappa"].get<Partition>()) << " w=" << b["w"] << " defect=" << b["defect"]
              << '\n';
    for (const auto& m : b["members"]) {
      std::string label;
      if (group == Group::stilde || group == Group::atilde)
        label = to_string(m["label"].get<CharLabel>());
      else
        label = to_string(m["label"].get<GCharLabel>());
      std::cout << "  " << label << " height=" << m["height"] << '\n';
    }
  }
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyOptions v;
  v.p = o.p;
  v.bound = o.max_n;
  v.max_w = o.max_w;
  v.full_f = o.full_f;
  v.threads = o.threads;
  const auto report = verify(o.suite, v);
  const bool ok = o.expect_violations ? !report.passed() : report.passed();
  if (o.json) {
    json j = report;
    j["pass"] = ok;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "suite: " << report.suite << '\n'
              << "p: " << report.p << '\n'
              << "bound: " << report.bound << '\n'
              << "cases: " << report.cases << '\n'
              << "violations: " << report.violations.size() << '\n';
    if (!report.violations.empty()) std::cout << "first: " << report.violations.front().dump() << '\n';
    if (!report.notes.empty()) std::cout << "notes: " << report.notes.dump() << '\n';
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bar-partition abaci, Galois signs and spin block maps"};
  app.require_subcommand(1);
  Options o;

  auto add_p = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--p", o.p, "odd prime (or odd modulus for bar abaci)");
    if (required) opt->required();
  };
  auto add_partition = [&](CLI::App* sub) {
    sub->add_option("partition,--partition", o.partition, "parts as a,b,c (empty string for the empty partition)")
        ->required();
  };

  auto* decompose = app.add_subcommand("decompose", "core, quotient, charvec, weight, cocore, d");
  add_p(decompose, true);
  add_partition(decompose);
  decompose->add_flag("--nonspin", o.nonspin, "ordinary p-core decomposition");
  decompose->add_flag("--json", o.json);

  auto* abacus = app.add_subcommand("abacus", "draw the t-bar abacus");
  add_p(abacus, false);
  abacus->add_option("--t", o.t, "odd modulus (defaults to --p)");
  add_partition(abacus);
  abacus->add_flag("--twisted", o.twisted);
  abacus->add_flag("--json", o.json);

  auto* tau = app.add_subcommand("tau", "sign of f on the label of a partition");
  add_p(tau, true);
  add_partition(tau);
  tau->add_option("--e", o.e, "exponent on p'-roots of unity")->check(CLI::NonNegativeNumber);
  tau->add_option("--s", o.s, "action on p-th roots of unity");
  tau->add_flag("--nonspin", o.nonspin, "self-conjugate partition, diagonal hooks");
  tau->add_flag("--json", o.json);

  auto* pairs = app.add_subcommand("pairs", "paired parts of a p-bar cocore");
  add_p(pairs, true);
  add_partition(pairs);
  pairs->add_flag("--nonspin", o.nonspin, "paired diagonal hooks of a self-conjugate p-cocore");
  pairs->add_flag("--json", o.json);

  auto* blocks = app.add_subcommand("blocks", "blocks of weight (n-|kappa|)/p with heights and defect");
  add_p(blocks, true);
  blocks->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  blocks->add_option("--group", o.group)->check(CLI::IsMember({"stilde", "atilde", "g", "gplus"}));
  blocks->add_flag("--json", o.json);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
  add_p(ver, true);
  ver->add_option("--max-n", o.max_n, "size bound (|kappa| bound for block suites, m bound for oracle)")
      ->check(CLI::PositiveNumber);
  ver->add_option("--max-w", o.max_w, "largest weight for block suites")->check(CLI::NonNegativeNumber);
  ver->add_flag("--expect-violations", o.expect_violations, "pass iff violations are found");
  ver->add_flag("--full-f", o.full_f, "use e in {0,1,2} and every s");
  ver->add_option("--threads", o.threads)->check(CLI::NonNegativeNumber);
  ver->add_flag("--json", o.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*decompose) return cmd_decompose(o);
    if (*abacus) return cmd_abacus(o);
    if (*tau) return cmd_tau(o);
    if (*pairs) return cmd_pairs(o);
    if (*blocks) return cmd_blocks(o);
    if (*ver) return cmd_verify(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
