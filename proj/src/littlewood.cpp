#include "spinbar/littlewood.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinbar {

namespace {

std::vector<int> ascending(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

int count_below(const std::vector<int>& slots, int bound) {
  return static_cast<int>(std::count_if(slots.begin(), slots.end(), [&](int x) { return x < bound; }));
}

// Beads of the pointed runner that the shift by c pushes across the fence.
int window_count(const PointedRunner& pointed, int c) {
  if (c > 0) return count_below(pointed.white_below, c);
  if (c < 0) return count_below(pointed.black_above, -c);
  return 0;
}

PointedRunner pointed_from(const Partition& q) {
  const auto f = frobenius(q);
  return {ascending(f.arms), ascending(f.legs)};
}

Partition read_pointed(const PointedRunner& r) { return from_frobenius(r.white_below, r.black_above); }

void check_prime_modulus(int p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
}

}  // namespace

BarPartition core_from_charvec(const std::vector<int>& charvec, int t) {
  std::vector<int> parts;
  for (int r = 1; r <= static_cast<int>(charvec.size()); ++r) {
    const int c = charvec[r - 1];
    for (int k = 0; k < c; ++k) parts.push_back(r + t * k);
    for (int k = 0; k < -c; ++k) parts.push_back(t - r + t * k);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return BarPartition(std::move(parts));
}

BarLittlewood bar_decompose(const BarPartition& lambda, int t) {
  const TwistedBarAbacus tw = twist(bar_abacus(lambda, t));
  BarLittlewood out;
  out.t = t;
  out.quotient.emplace_back(BarPartition(std::vector<int>(tw.runner0.rbegin(), tw.runner0.rend())));
  TwistedBarAbacus normalized{t, tw.runner0, {}};
  for (const auto& runner : tw.shifted) {
    auto [pointed, c] = normalize(runner);
    out.charvec.push_back(c);
    out.quotient.push_back(read_pointed(pointed));
    out.d += window_count(pointed, c);
    normalized.shifted.push_back(std::move(pointed));
  }
  for (const auto& q : out.quotient) out.weight += q.size();
  out.core = core_from_charvec(out.charvec, t);
  out.cocore = to_partition(untwist(normalized));
  return out;
}

bool is_bar_core(const BarPartition& lambda, int t) { return bar_decompose(lambda, t).weight == 0; }

BarPartition bar_reconstruct(const BarPartition& core, const std::vector<Partition>& quotient, int t) {
  const BarLittlewood k = bar_decompose(core, t);
  if (k.weight != 0) throw std::invalid_argument(display(core) + " is not a " + std::to_string(t) + "-bar core");
  if (static_cast<int>(quotient.size()) != (t + 1) / 2)
    throw std::invalid_argument("quotient must have (t+1)/2 components");
  if (!quotient[0].is_strict()) throw std::invalid_argument("quotient component 0 must have distinct parts");
  TwistedBarAbacus tw{t, ascending(quotient[0].parts()), {}};
  for (int r = 1; r <= (t - 1) / 2; ++r) tw.shifted.push_back(shift(pointed_from(quotient[r]), k.charvec[r - 1]));
  return to_partition(untwist(tw));
}

BarPartition bar_cocore(const BarPartition& lambda, int t) { return bar_decompose(lambda, t).cocore; }

std::vector<std::pair<int, int>> paired_parts(const BarPartition& lambda, int t) {
  const BarLittlewood dec = bar_decompose(lambda, t);
  if (!dec.core.empty()) throw std::invalid_argument(display(lambda) + " is not a " + std::to_string(t) + "-cocore");
  std::vector<std::pair<int, int>> pairs;
  for (int r = 1; r <= (t - 1) / 2; ++r) {
    const auto f = frobenius(dec.quotient[r]);
    for (std::size_t j = 0; j < f.arms.size(); ++j) pairs.emplace_back(t * f.arms[j] + r, t * f.legs[j] + t - r);
  }
  return pairs;
}

namespace {

std::vector<PointedRunner> ordinary_runners(const Partition& lambda, int p) {
  std::vector<PointedRunner> runners(p);
  const auto f = frobenius(lambda);
  for (int a : f.arms) runners[a % p].black_above.push_back(a / p);
  for (int l : f.legs) runners[p - 1 - l % p].white_below.push_back(l / p);
  for (auto& r : runners) {
    std::sort(r.black_above.begin(), r.black_above.end());
    std::sort(r.white_below.begin(), r.white_below.end());
  }
  return runners;
}

Partition read_runners(const std::vector<PointedRunner>& runners, int p) {
  std::vector<int> arms, legs;
  for (int i = 0; i < p; ++i) {
    for (int x : runners[i].black_above) arms.push_back(p * x + i);
    for (int y : runners[i].white_below) legs.push_back(p * y + (p - 1 - i));
  }
  return from_frobenius(std::move(legs), std::move(arms));
}

}  // namespace

OrdinaryLittlewood ordinary_decompose(const Partition& lambda, int p) {
  check_prime_modulus(p);
  OrdinaryLittlewood out;
  out.p = p;
  std::vector<PointedRunner> pointed, reference;
  std::vector<int> windows;
  for (const auto& runner : ordinary_runners(lambda, p)) {
    auto [s, c] = normalize(runner);
    out.charvec.push_back(c);
    out.quotient.push_back(read_pointed(s));
    windows.push_back(window_count(s, c));
    reference.push_back(reference_runner(c));
    pointed.push_back(std::move(s));
  }
  for (const auto& q : out.quotient) out.weight += q.size();
  out.core = read_runners(reference, p);
  out.cocore = read_runners(pointed, p);
  if (is_self_conjugate(lambda)) {
    int d = 0;
    for (int i = 0; i < (p - 1) / 2; ++i) d += windows[i];
    out.d = d;
  }
  return out;
}

bool is_ordinary_core(const Partition& lambda, int p) { return ordinary_decompose(lambda, p).weight == 0; }

Partition ordinary_reconstruct(const Partition& core, const std::vector<Partition>& quotient, int p) {
  const OrdinaryLittlewood k = ordinary_decompose(core, p);
  if (k.weight != 0) throw std::invalid_argument(display(core) + " is not a " + std::to_string(p) + "-core");
  if (static_cast<int>(quotient.size()) != p) throw std::invalid_argument("quotient must have p components");
  std::vector<PointedRunner> runners;
  for (int i = 0; i < p; ++i) runners.push_back(shift(pointed_from(quotient[i]), k.charvec[i]));
  return read_runners(runners, p);
}

Partition ordinary_cocore(const Partition& lambda, int p) { return ordinary_decompose(lambda, p).cocore; }

std::vector<std::pair<int, int>> selfconjugate_paired_hooks(const Partition& lambda, int p) {
  if (!is_self_conjugate(lambda)) throw std::invalid_argument(display(lambda) + " is not self-conjugate");
  const OrdinaryLittlewood dec = ordinary_decompose(lambda, p);
  if (!dec.core.empty()) throw std::invalid_argument(display(lambda) + " is not a " + std::to_string(p) + "-cocore");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i <= (p - 1) / 2; ++i) {
    const auto f = frobenius(dec.quotient[i]);
    for (std::size_t j = 0; j < f.arms.size(); ++j)
      pairs.emplace_back(2 * (p * f.arms[j] + i) + 1, 2 * (p * f.legs[j] + p - 1 - i) + 1);
  }
  return pairs;
}

}  // namespace spinbar
