#include "spinbar/blocks.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "spinbar/cyclotomic.hpp"
#include "spinbar/littlewood.hpp"
#include "spinbar/serialize.hpp"

namespace spinbar {

std::vector<BarPartition> bar_cores_up_to(int max_size, int p) {
  std::vector<BarPartition> out;
  for (int n = 0; n <= max_size; ++n)
    for (const auto& k : enumerate_strict(n))
      if (is_bar_core(k, p)) out.push_back(k);
  return out;
}

std::vector<Partition> selfconjugate_cores_up_to(int max_size, int p) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n)
    for (const auto& k : enumerate(n, PartitionKind::self_conjugate))
      if (is_ordinary_core(k, p)) out.push_back(k);
  return out;
}

std::vector<CharLabel> spin_block_members(const SpinBlockId& id) {
  if (!is_bar_core(id.kappa, id.p))
    throw std::invalid_argument(display(id.kappa) + " is not a " + std::to_string(id.p) + "-bar core");
  std::vector<CharLabel> out;
  for (const auto& lambda : enumerate_strict(id.kappa.size() + id.p * id.w))
    if (bar_decompose(lambda, id.p).core == id.kappa)
      for (auto& c : classify(lambda, id.group, Flavor::spin)) out.push_back(std::move(c));
  return out;
}

std::vector<CharLabel> nonspin_block_members(const NonSpinBlockId& id) {
  if (!is_self_conjugate(id.kappa) || !is_ordinary_core(id.kappa, id.p))
    throw std::invalid_argument(display(id.kappa) + " is not a self-conjugate " + std::to_string(id.p) + "-core");
  std::vector<CharLabel> out;
  for (const auto& lambda : enumerate(id.kappa.size() + id.p * id.w, PartitionKind::all)) {
    if (orbit_representative(lambda) != lambda) continue;
    if (ordinary_decompose(lambda, id.p).core == id.kappa)
      for (auto& c : classify(lambda, Group::atilde, Flavor::nonspin)) out.push_back(std::move(c));
  }
  return out;
}

namespace {

Group other(Group g) { return g == Group::stilde ? Group::atilde : Group::stilde; }

void pair_up(PsiMap& m, const std::vector<CharLabel>& src, const std::vector<CharLabel>& dst) {
  if (src.size() != dst.size())
    throw std::logic_error("variant mismatch: " + to_string(src.front()) + " -> " + to_string(dst.front()));
  for (std::size_t i = 0; i < src.size(); ++i) m.pairs.emplace_back(src[i], dst[i]);
}

}  // namespace

PsiMap psi(const SpinBlockId& source, const BarPartition& target_core, bool allow_reversed) {
  const int p = source.p;
  if (source.group != Group::stilde && source.group != Group::atilde)
    throw std::invalid_argument("psi acts on stilde or atilde blocks");
  if (!is_bar_core(source.kappa, p) || !is_bar_core(target_core, p))
    throw std::invalid_argument("psi needs two " + std::to_string(p) + "-bar cores");
  PsiMap m;
  m.source_core = source.kappa;
  m.target_core = target_core;
  m.source_group = source.group;
  m.flavor = Flavor::spin;
  m.w = source.w;
  m.p = p;
  const Sign s = sign(source.kappa), t = sign(target_core);
  if (s == t) {
    m.target_group = source.group;
  } else {
    m.target_group = other(source.group);
    const Sign stilde_side = source.group == Group::stilde ? s : t;
    if (stilde_side.is_plus() && !allow_reversed)
      throw std::invalid_argument("core signs " + to_string(s) + " -> " + to_string(t) +
                                  " give the reversed crossing; pass allow_reversed to build it anyway");
  }
  const GaloisElement sigma = GaloisElement::sigma(p);
  m.hypothesis = tau_partition(source.kappa, sigma) == tau_partition(target_core, sigma);
  for (const auto& lambda : enumerate_strict(source.kappa.size() + p * source.w)) {
    const BarLittlewood dec = bar_decompose(lambda, p);
    if (dec.core != source.kappa) continue;
    const BarPartition image = bar_reconstruct(target_core, dec.quotient, p);
    pair_up(m, classify(lambda, m.source_group, Flavor::spin), classify(image, m.target_group, Flavor::spin));
  }
  return m;
}

PsiMap nonspin_psi(const Partition& kappa, const Partition& target_core, int w, int p) {
  for (const auto* k : {&kappa, &target_core})
    if (!is_self_conjugate(*k) || !is_ordinary_core(*k, p))
      throw std::invalid_argument(display(*k) + " is not a self-conjugate " + std::to_string(p) + "-core");
  PsiMap m;
  m.source_core = kappa;
  m.target_core = target_core;
  m.source_group = m.target_group = Group::atilde;
  m.flavor = Flavor::nonspin;
  m.w = w;
  m.p = p;
  const GaloisElement sigma = GaloisElement::sigma(p);
  m.hypothesis = tau_selfconjugate(kappa, sigma) == tau_selfconjugate(target_core, sigma);
  for (const auto& lambda : enumerate(kappa.size() + p * w, PartitionKind::all)) {
    if (orbit_representative(lambda) != lambda) continue;
    const OrdinaryLittlewood dec = ordinary_decompose(lambda, p);
    if (dec.core != kappa) continue;
    const Partition image = ordinary_reconstruct(target_core, dec.quotient, p);
    pair_up(m, classify(lambda, Group::atilde, Flavor::nonspin), classify(image, Group::atilde, Flavor::nonspin));
  }
  return m;
}

std::vector<GaloisElement> galois_set(int p, bool full) {
  std::vector<GaloisElement> fs;
  if (full) {
    for (int e = 0; e <= 2; ++e)
      for (int s = 1; s < p; ++s) fs.emplace_back(p, e, s);
  } else {
    fs.push_back(GaloisElement::sigma(p));
    for (int s = 1; s < p; ++s) fs.emplace_back(p, 0, s);
  }
  return fs;
}

namespace {

json component_signs(const Partition& core, const Partition& cocore) {
  return json::array({sign(core).value(), sign(cocore).value()});
}

}  // namespace

VerificationReport equivariance_check(const PsiMap& map, const std::vector<GaloisElement>& fs) {
  VerificationReport r;
  r.suite = "equivariance";
  r.p = map.p;
  r.notes["hypothesis"] = map.hypothesis;
  for (const auto& [src, dst] : map.pairs) {
    if ((src.variant == Variant::whole) != (dst.variant == Variant::whole)) {
      r.violations.push_back({{"check", "variant"}, {"source", src}, {"target", dst}});
      continue;
    }
    if (src.variant == Variant::whole) {
      ++r.cases;
      continue;
    }
    for (const auto& f : fs) {
      ++r.cases;
      const Sign a = label_tau(src, f), b = label_tau(dst, f);
      if (a == b) continue;
      json w{{"check", "tau"}, {"source", src}, {"target", dst}, {"f", f},
             {"tau_source", a.value()}, {"tau_target", b.value()}};
      if (map.flavor == Flavor::spin) {
        const BarPartition cocore = bar_cocore(BarPartition(src.partition), map.p);
        w["source_component_signs"] = component_signs(map.source_core, cocore);
        w["target_component_signs"] = component_signs(map.target_core, cocore);
      }
      r.violations.push_back(std::move(w));
    }
  }
  return r;
}

namespace {

struct Partial {
  long long cases = 0;
  json violations = json::array();
  std::map<std::string, long long> counters;

  void fail(json w) { violations.push_back(std::move(w)); }
  void absorb(const VerificationReport& r) {
    cases += r.cases;
    for (const auto& v : r.violations) violations.push_back(v);
  }
};

// Runs fn(0..count-1) on a thread pool and merges in index order.
VerificationReport fan_out(const std::string& suite, const VerifyOptions& o, int count,
                           const std::function<Partial(int)>& fn) {
  std::vector<Partial> parts(count);
  int threads = o.threads > 0 ? o.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, count));
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next++) < count;) {
        try {
          parts[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  VerificationReport r;
  r.suite = suite;
  r.p = o.p;
  r.bound = o.bound;
  std::map<std::string, long long> counters;
  for (auto& part : parts) {
    r.cases += part.cases;
    for (auto& v : part.violations) r.violations.push_back(std::move(v));
    for (const auto& [k, v] : part.counters) counters[k] += v;
  }
  for (const auto& [k, v] : counters) r.notes[k] = v;
  return r;
}

template <class Fn>
VerificationReport over_strict(const std::string& suite, const VerifyOptions& o, Fn check) {
  return fan_out(suite, o, o.bound + 1, [&](int n) {
    Partial part;
    for (const auto& lambda : enumerate_strict(n)) {
      ++part.cases;
      check(lambda, part);
    }
    return part;
  });
}

template <class Fn>
VerificationReport over_selfconjugate(const std::string& suite, const VerifyOptions& o, Fn check) {
  return fan_out(suite, o, o.bound + 1, [&](int n) {
    Partial part;
    for (const auto& lambda : enumerate(n, PartitionKind::self_conjugate)) {
      ++part.cases;
      check(lambda, part);
    }
    return part;
  });
}

void require_prime(int p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("suite needs an odd prime p, got " + std::to_string(p));
}

VerificationReport suite_roundtrip(const VerifyOptions& o) {
  const int t = o.p;
  check_odd_modulus(t);
  auto report = over_strict("roundtrip", o, [t](const BarPartition& lambda, Partial& part) {
    const Partition lp = lambda;
    if (from_frobenius(frobenius(lp)) != lp) part.fail({{"check", "frobenius"}, {"lambda", lambda}});
    const BarAbacus a = bar_abacus(lambda, t);
    if (to_partition(a) != lambda) part.fail({{"check", "abacus"}, {"lambda", lambda}});
    if (!a.runners[0].empty() && a.runners[0].front() == 0) part.fail({{"check", "slot0"}, {"lambda", lambda}});
    const TwistedBarAbacus tw = twist(a);
    if (untwist(tw) != a) part.fail({{"check", "twist"}, {"lambda", lambda}});
    for (const auto& runner : tw.shifted) {
      const auto [pointed, c] = normalize(runner);
      if (!pointed.is_pointed() || shift(pointed, c) != runner || normalize(pointed) != std::pair{pointed, 0})
        part.fail({{"check", "normalize"}, {"lambda", lambda}});
    }
    const BarLittlewood dec = bar_decompose(lambda, t);
    const BarPartition back = bar_reconstruct(dec.core, dec.quotient, t);
    if (back != lambda) part.fail({{"check", "reconstruct"}, {"lambda", lambda}, {"got", back}});
    const BarLittlewood co = bar_decompose(dec.cocore, t);
    if (!co.core.empty() || co.quotient != dec.quotient || bar_cocore(dec.cocore, t) != dec.cocore)
      part.fail({{"check", "cocore"}, {"lambda", lambda}});
  });
  if (is_prime(t)) {
    auto ordinary = fan_out("roundtrip", o, std::min(o.bound, 30) + 1, [t](int n) {
      Partial part;
      for_each_partition(n, PartitionKind::all, [&](const Partition& lambda) {
        ++part.cases;
        const OrdinaryLittlewood dec = ordinary_decompose(lambda, t);
        const Partition back = ordinary_reconstruct(dec.core, dec.quotient, t);
        if (back != lambda) part.fail({{"check", "ordinary_reconstruct"}, {"lambda", lambda}, {"got", back}});
      });
      return part;
    });
    report.notes["ordinary_cases"] = ordinary.cases;
    report.cases += ordinary.cases;
    for (auto& v : ordinary.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

VerificationReport suite_size(const VerifyOptions& o) {
  const int t = o.p;
  return over_strict("size", o, [t](const BarPartition& lambda, Partial& part) {
    const BarLittlewood dec = bar_decompose(lambda, t);
    int total = 0;
    for (const auto& q : dec.quotient) total += q.size();
    if (lambda.size() != dec.core.size() + t * dec.weight || total != dec.weight ||
        dec.cocore.size() != t * dec.weight)
      part.fail({{"lambda", lambda}, {"decomposition", dec}});
  });
}

VerificationReport suite_lengths(const VerifyOptions& o) {
  const int t = o.p;
  return over_strict("lengths", o, [t](const BarPartition& lambda, Partial& part) {
    const BarLittlewood dec = bar_decompose(lambda, t);
    if (dec.d > 0) ++part.counters["d_positive"];
    const int rhs = dec.core.length() + dec.cocore.length() - 2 * dec.d;
    if (lambda.length() != rhs)
      part.fail({{"check", "length"}, {"lambda", lambda}, {"length", lambda.length()}, {"rhs", rhs}, {"decomposition", dec}});
    if (sign(lambda) != sign(dec.core) * sign(dec.cocore))
      part.fail({{"check", "sign"}, {"lambda", lambda}, {"decomposition", dec}});
  });
}

VerificationReport suite_pairing(const VerifyOptions& o) {
  const int p = o.p;
  auto r = over_strict("pairing", o, [p](const BarPartition& lambda, Partial& part) {
    if (!bar_decompose(lambda, p).core.empty()) {
      ++part.counters["skipped_not_cocore"];
      return;
    }
    std::vector<int> expected, seen;
    for (int x : lambda.parts())
      if (x % p != 0) expected.push_back(x);
    for (auto [a, b] : paired_parts(lambda, p)) {
      ++part.counters["pairs"];
      if ((a + b) % p != 0) part.fail({{"check", "sum"}, {"lambda", lambda}, {"pair", {a, b}}});
      seen.push_back(a);
      seen.push_back(b);
    }
    std::sort(expected.begin(), expected.end());
    std::sort(seen.begin(), seen.end());
    if (seen != expected) part.fail({{"check", "cover"}, {"lambda", lambda}, {"paired", seen}, {"parts", expected}});
  });
  r.cases -= r.notes.value("skipped_not_cocore", 0LL);
  return r;
}

VerificationReport suite_oracle(const VerifyOptions& o) {
  require_prime(o.p);
  const auto fs = galois_set(o.p, true);
  return fan_out("oracle", o, o.bound, [&](int i) {
    Partial part;
    const long long m = i + 1;
    for (const auto& f : fs) {
      ++part.cases;
      const Sign a = tau_sqrt(m, f), b = oracle_tau_sqrt(m, f, std::max<long long>(o.bound, 1));
      if (a != b) part.fail({{"m", m}, {"f", f}, {"formula", a.value()}, {"oracle", b.value()}});
    }
    return part;
  });
}

VerificationReport suite_little(const VerifyOptions& o) {
  require_prime(o.p);
  const auto fs = galois_set(o.p, o.full_f);
  auto r = over_strict("little", o, [&](const BarPartition& lambda, Partial& part) {
    const BarLittlewood dec = bar_decompose(lambda, o.p);
    const bool both_negative = sign(dec.core).is_minus() && sign(dec.cocore).is_minus();
    if (both_negative) ++part.counters["case_ii"];
    for (const auto& f : fs) {
      Sign rhs = tau_partition(dec.core, f) * tau_partition(dec.cocore, f);
      if (both_negative) {
        rhs *= tau_i(f);
        if (tau_i(f).is_minus()) ++part.counters["case_ii_extra_sign"];
      }
      const Sign lhs = tau_partition(lambda, f);
      if (lhs != rhs)
        part.fail({{"lambda", lambda}, {"f", f}, {"core", dec.core}, {"cocore", dec.cocore},
                   {"tau", lhs.value()}, {"product", rhs.value()}});
    }
  });
  r.notes["f_count"] = fs.size();
  return r;
}

VerificationReport suite_phi(const VerifyOptions& o) {
  require_prime(o.p);
  const auto fs = galois_set(o.p, o.full_f);
  return over_strict("phi", o, [&](const BarPartition& lambda, Partial& part) {
    for (Group group : {Group::stilde, Group::atilde}) {
      std::vector<std::pair<CharLabel, GCharLabel>> labels;
      try {
        labels = phi(lambda, o.p, group);
      } catch (const std::logic_error& e) {
        part.fail({{"check", "variant"}, {"lambda", lambda}, {"group", to_string(group)}});
        continue;
      }
      for (const auto& [x, z] : labels) {
        if (phi_inverse(z, o.p) != x) part.fail({{"check", "inverse"}, {"source", x}, {"image", z}});
        if (x.variant == Variant::whole) continue;
        for (const auto& f : fs) {
          const Sign a = label_tau(x, f), b = tau_g(z, f);
          if (a != b) part.fail({{"check", "tau"}, {"source", x}, {"image", z}, {"f", f}, {"tau_source", a.value()}, {"tau_image", b.value()}});
        }
      }
    }
  });
}

VerificationReport suite_valuation(const VerifyOptions& o) {
  require_prime(o.p);
  const int p = o.p;
  return over_strict("valuation", o, [p](const BarPartition& lambda, Partial& part) {
    const BarLittlewood dec = bar_decompose(lambda, p);
    auto divisible = [p](const std::vector<int>& hooks) {
      std::vector<int> out;
      for (int h : hooks)
        if (h % p == 0) out.push_back(h);
      return out;
    };
    if (divisible(bar_hook_lengths(lambda)) != divisible(bar_hook_lengths(dec.cocore)))
      part.fail({{"check", "divisible_hooks"}, {"lambda", lambda}});
    if (dec.core.size() >= p) return;
    ++part.counters["equal_valuation_cases"];
    const int a = spin_degree_valuation(lambda, p);
    const int b = g_degree_valuation({dec.core, dec.cocore}, p);
    if (a != b) part.fail({{"check", "valuation"}, {"lambda", lambda}, {"lambda_val", a}, {"g_val", b}});
  });
}

VerificationReport suite_blocks(const VerifyOptions& o) {
  require_prime(o.p);
  const int p = o.p;
  const auto cores = bar_cores_up_to(o.bound, p);
  const int ws = o.max_w + 1;
  // Reference defects of the blocks with empty core.
  std::map<std::pair<int, Group>, std::pair<int, int>> empty_defects;
  for (int w = 0; w < ws; ++w)
    for (Group g : {Group::stilde, Group::atilde}) {
      const auto members = spin_block_members({{}, w, g, p});
      const auto gm = block_members({{}, w, g == Group::stilde ? Group::g : Group::gplus, p});
      empty_defects[{w, g}] = {height_and_defect(members, p * w, p).defect, g_height_and_defect(gm, p).defect};
    }
  auto r = fan_out("blocks", o, static_cast<int>(cores.size()) * ws, [&](int i) {
    Partial part;
    const BarPartition& kappa = cores[i / ws];
    const int w = i % ws;
    const int n = kappa.size() + p * w;
    for (Group group : {Group::stilde, Group::atilde}) {
      ++part.cases;
      const Group target = group == Group::stilde ? Group::g : Group::gplus;
      const auto members = spin_block_members({kappa, w, group, p});
      const auto gm = block_members({kappa, w, target, p});
      const json id{{"kappa", kappa}, {"w", w}, {"group", to_string(group)}};
      std::vector<GCharLabel> images;
      std::set<Partition> done;
      for (const auto& x : members) {
        if (!done.insert(x.partition).second) continue;
        for (const auto& [src, z] : phi(BarPartition(x.partition), p, group)) images.push_back(z);
      }
      auto sorted_gm = gm;
      std::sort(images.begin(), images.end());
      std::sort(sorted_gm.begin(), sorted_gm.end());
      if (images != sorted_gm || std::adjacent_find(images.begin(), images.end()) != images.end()) {
        part.fail({{"check", "bijection"}, {"block", id}});
        continue;
      }
      const auto hs = height_and_defect(members, n, p);
      const auto hg = g_height_and_defect(gm, p);
      if (hs.defect != hg.defect)
        part.fail({{"check", "defect"}, {"block", id}, {"defect", hs.defect}, {"g_defect", hg.defect}});
      const auto [ref_s, ref_g] = empty_defects.at({w, group});
      if (hs.defect != ref_s || hg.defect != ref_g)
        part.fail({{"check", "defect_vs_empty_core"}, {"block", id}, {"defect", hs.defect}, {"empty_core_defect", ref_s},
                   {"g_defect", hg.defect}, {"empty_core_g_defect", ref_g}});
      for (std::size_t k = 0; k < members.size(); ++k) {
        const auto z = phi(BarPartition(members[k].partition), p, group);
        const auto it = std::find_if(z.begin(), z.end(), [&](const auto& pr) { return pr.first == members[k]; });
        const auto pos = std::find(gm.begin(), gm.end(), it->second) - gm.begin();
        if (hs.heights[k] != hg.heights[pos])
          part.fail({{"check", "height"}, {"source", members[k]}, {"image", it->second},
                     {"height", hs.heights[k]}, {"g_height", hg.heights[pos]}});
      }
    }
    return part;
  });
  // Every strict partition lies in exactly one block.
  for (int n = 0; n <= o.bound; ++n) {
    long long covered = 0;
    for (const auto& kappa : cores) {
      if (kappa.size() > n || (n - kappa.size()) % p != 0) continue;
      std::set<Partition> distinct;
      for (const auto& x : spin_block_members({kappa, (n - kappa.size()) / p, Group::stilde, p})) distinct.insert(x.partition);
      covered += static_cast<long long>(distinct.size());
    }
    ++r.cases;
    if (covered != static_cast<long long>(enumerate_strict(n).size()))
      r.violations.push_back({{"check", "partition_of_labels"}, {"n", n}, {"covered", covered}});
  }
  r.notes["cores"] = cores.size();
  r.notes["max_w"] = o.max_w;
  return r;
}

VerificationReport suite_census(const VerifyOptions& o) {
  require_prime(o.p);
  const int p = o.p;
  const auto cores = bar_cores_up_to(o.bound, p);
  auto r = fan_out("census", o, static_cast<int>(cores.size()), [&](int i) {
    Partial part;
    const BarPartition& kappa = cores[i];
    const bool plus = sign(kappa).is_plus();
    const long long big = block_members({kappa, 1, Group::g, p}).size();
    const long long small = block_members({kappa, 1, Group::gplus, p}).size();
    const long long want_big = plus ? p : (p + 3) / 2, want_small = plus ? (p + 3) / 2 : p;
    const long long st = spin_block_members({kappa, 1, Group::stilde, p}).size();
    const long long at = spin_block_members({kappa, 1, Group::atilde, p}).size();
    ++part.cases;
    if (big != want_big || small != want_small || st != big || at != small)
      part.fail({{"kappa", kappa}, {"sign", sign(kappa).value()}, {"g", big}, {"gplus", small},
                 {"stilde", st}, {"atilde", at}, {"expected_g", want_big}, {"expected_gplus", want_small}});
    return part;
  });
  r.notes["cores"] = cores.size();
  return r;
}

// Bijection, heights, defect, inverse and equivariance for one map.
void check_psi(const PsiMap& m, const std::vector<CharLabel>& src, const std::vector<CharLabel>& dst,
               const std::function<PsiMap()>& inverse, const std::vector<GaloisElement>& fs, Partial& part) {
  const json id{{"kappa", m.source_core}, {"kappa_target", m.target_core}, {"w", m.w},
                {"source_group", to_string(m.source_group)}, {"target_group", to_string(m.target_group)}};
  part.absorb(equivariance_check(m, fs));
  std::vector<CharLabel> from, to;
  for (const auto& [a, b] : m.pairs) {
    from.push_back(a);
    to.push_back(b);
  }
  auto sorted = [](std::vector<CharLabel> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto sto = sorted(to);
  if (sorted(from) != sorted(src) || sto != sorted(dst) || std::adjacent_find(sto.begin(), sto.end()) != sto.end()) {
    part.fail({{"check", "bijection"}, {"map", id}});
    return;
  }
  const int n_src = m.source_core.size() + m.p * m.w, n_dst = m.target_core.size() + m.p * m.w;
  const auto hs = height_and_defect(src, n_src, m.p);
  const auto hd = height_and_defect(dst, n_dst, m.p);
  if (hs.defect != hd.defect) part.fail({{"check", "defect"}, {"map", id}, {"source", hs.defect}, {"target", hd.defect}});
  for (const auto& [a, b] : m.pairs) {
    const auto ia = std::find(src.begin(), src.end(), a) - src.begin();
    const auto ib = std::find(dst.begin(), dst.end(), b) - dst.begin();
    if (hs.heights[ia] != hd.heights[ib])
      part.fail({{"check", "height"}, {"source", a}, {"target", b}, {"height_source", hs.heights[ia]},
                 {"height_target", hd.heights[ib]}});
  }
  std::vector<std::pair<CharLabel, CharLabel>> back;
  for (const auto& [a, b] : inverse().pairs) back.emplace_back(b, a);
  std::sort(back.begin(), back.end());
  auto forward = m.pairs;
  std::sort(forward.begin(), forward.end());
  if (back != forward) part.fail({{"check", "inverse"}, {"map", id}});
}

enum class SignPattern { same, crossing, reversed };

VerificationReport suite_psi(const std::string& name, SignPattern pattern, const VerifyOptions& o) {
  require_prime(o.p);
  const int p = o.p;
  const auto cores = bar_cores_up_to(o.bound, p);
  const auto fs = galois_set(p, o.full_f);
  const GaloisElement sigma = GaloisElement::sigma(p);
  struct Job {
    BarPartition kappa, target;
    Group group;
  };
  std::vector<Job> jobs;
  long long skipped = 0;
  for (const auto& a : cores)
    for (const auto& b : cores) {
      const Sign sa = sign(a), sb = sign(b);
      bool keep = false;
      std::vector<Group> groups;
      switch (pattern) {
        case SignPattern::same:
          keep = sa == sb;
          groups = {Group::stilde, Group::atilde};
          break;
        case SignPattern::crossing:
          keep = sa.is_minus() && sb.is_plus();
          groups = {Group::stilde};
          break;
        case SignPattern::reversed:
          keep = sa.is_plus() && sb.is_minus();
          groups = {Group::stilde};
          break;
      }
      if (!keep) continue;
      if (tau_partition(a, sigma) != tau_partition(b, sigma)) {
        ++skipped;
        continue;
      }
      for (Group g : groups) jobs.push_back({a, b, g});
    }
  const int ws = o.max_w + 1;
  auto r = fan_out(name, o, static_cast<int>(jobs.size()) * ws, [&](int i) {
    Partial part;
    const Job& job = jobs[i / ws];
    const int w = i % ws;
    const SpinBlockId src_id{job.kappa, w, job.group, p};
    if (pattern == SignPattern::reversed) {
      const PsiMap m = psi(src_id, job.target, true);
      const auto eq = equivariance_check(m, fs);
      part.absorb(eq);
      for (const auto& v : eq.violations) {
        const auto& signs = v.at("target_component_signs");
        if (signs[0] == -1 && signs[1] == -1) ++part.counters["violations_both_negative"];
      }
      return part;
    }
    const PsiMap m = psi(src_id, job.target);
    const auto src = spin_block_members(src_id);
    const auto dst = spin_block_members({job.target, w, m.target_group, p});
    check_psi(m, src, dst, [&] { return psi({job.target, w, m.target_group, p}, job.kappa); }, fs, part);
    return part;
  });
  r.notes["maps"] = jobs.size() * ws;
  r.notes["skipped_tau_mismatch"] = skipped;
  r.notes["max_w"] = o.max_w;
  return r;
}

VerificationReport suite_nonspin_tau(const VerifyOptions& o) {
  require_prime(o.p);
  const auto fs = galois_set(o.p, o.full_f);
  return over_selfconjugate("nonspin_tau", o, [&](const Partition& lambda, Partial& part) {
    const OrdinaryLittlewood dec = ordinary_decompose(lambda, o.p);
    for (const auto& f : fs) {
      const Sign lhs = tau_selfconjugate(lambda, f);
      const Sign rhs = tau_selfconjugate(dec.core, f) * tau_selfconjugate(dec.cocore, f);
      if (lhs != rhs)
        part.fail({{"lambda", lambda}, {"f", f}, {"core", dec.core}, {"cocore", dec.cocore},
                   {"tau", lhs.value()}, {"product", rhs.value()}});
    }
  });
}

VerificationReport suite_durfee(const VerifyOptions& o) {
  require_prime(o.p);
  const int p = o.p;
  return over_selfconjugate("durfee", o, [p](const Partition& lambda, Partial& part) {
    const OrdinaryLittlewood dec = ordinary_decompose(lambda, p);
    if (!dec.d) {
      part.fail({{"check", "d_missing"}, {"lambda", lambda}});
      return;
    }
    const int rhs = durfee(dec.core) + durfee(dec.cocore) - 2 * *dec.d;
    if (durfee(lambda) != rhs)
      part.fail({{"check", "durfee"}, {"lambda", lambda}, {"durfee", durfee(lambda)}, {"rhs", rhs}, {"decomposition", dec}});
    if (!is_self_conjugate(dec.core) || !is_self_conjugate(dec.cocore))
      part.fail({{"check", "self_conjugate"}, {"lambda", lambda}});
    for (int j = 0; j < p; ++j)
      if (dec.quotient[j] != conjugate(dec.quotient[p - 1 - j])) part.fail({{"check", "quotient_symmetry"}, {"lambda", lambda}});
    if (lambda.size() != dec.core.size() + p * dec.weight) part.fail({{"check", "size"}, {"lambda", lambda}});
    std::vector<int> seen;
    for (auto [a, b] : selfconjugate_paired_hooks(dec.cocore, p)) {
      if ((a + b) % (2 * p) != 0) part.fail({{"check", "hook_pair"}, {"lambda", lambda}, {"pair", {a, b}}});
      seen.push_back(a);
      if (a != b) seen.push_back(b);
    }
    std::sort(seen.begin(), seen.end(), std::greater<>());
    if (seen != diagonal_hooks(dec.cocore)) part.fail({{"check", "hook_cover"}, {"lambda", lambda}});
  });
}

VerificationReport suite_nonspin_psi(const VerifyOptions& o) {
  require_prime(o.p);
  const int p = o.p;
  const auto cores = selfconjugate_cores_up_to(o.bound, p);
  const auto fs = galois_set(p, o.full_f);
  const GaloisElement sigma = GaloisElement::sigma(p);
  std::vector<std::pair<Partition, Partition>> jobs;
  long long skipped = 0;
  for (const auto& a : cores)
    for (const auto& b : cores) {
      if (tau_selfconjugate(a, sigma) != tau_selfconjugate(b, sigma)) {
        ++skipped;
        continue;
      }
      jobs.emplace_back(a, b);
    }
  const int ws = o.max_w + 1;
  auto r = fan_out("nonspin_psi", o, static_cast<int>(jobs.size()) * ws, [&](int i) {
    Partial part;
    const auto& [a, b] = jobs[i / ws];
    const int w = i % ws;
    const PsiMap m = nonspin_psi(a, b, w, p);
    check_psi(m, nonspin_block_members({a, w, p}), nonspin_block_members({b, w, p}),
              [&] { return nonspin_psi(b, a, w, p); }, fs, part);
    return part;
  });
  r.notes["maps"] = jobs.size() * ws;
  r.notes["skipped_tau_mismatch"] = skipped;
  r.notes["max_w"] = o.max_w;
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"roundtrip", "size",      "lengths",     "pairing",        "oracle",
                                              "little",    "phi",       "valuation",   "blocks",         "census",
                                              "psi_same",  "psi_crossing", "crossing_fails", "nonspin_tau", "durfee",
                                              "nonspin_psi"};
  return names;
}

VerificationReport verify(const std::string& suite, const VerifyOptions& o) {
  if (o.bound < 1) throw std::invalid_argument("bound must be at least 1");
  if (o.max_w < 0) throw std::invalid_argument("max_w must be non-negative");
  if (suite == "roundtrip") return suite_roundtrip(o);
  if (suite == "size") return suite_size(o);
  if (suite == "lengths") return suite_lengths(o);
  if (suite == "pairing") return suite_pairing(o);
  if (suite == "oracle") return suite_oracle(o);
  if (suite == "little") return suite_little(o);
  if (suite == "phi") return suite_phi(o);
  if (suite == "valuation") return suite_valuation(o);
  if (suite == "blocks") return suite_blocks(o);
  if (suite == "census") return suite_census(o);
  if (suite == "psi_same") return suite_psi("psi_same", SignPattern::same, o);
  if (suite == "psi_crossing") return suite_psi("psi_crossing", SignPattern::crossing, o);
  if (suite == "crossing_fails") return suite_psi("crossing_fails", SignPattern::reversed, o);
  if (suite == "nonspin_tau") return suite_nonspin_tau(o);
  if (suite == "durfee") return suite_durfee(o);
  if (suite == "nonspin_psi") return suite_nonspin_psi(o);
  throw std::invalid_argument("unknown suite \"" + suite + "\"");
}

}  // namespace spinbar
