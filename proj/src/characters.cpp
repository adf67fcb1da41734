#include "spinbar/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinbar {

std::string to_string(Group g) {
  switch (g) {
    case Group::stilde: return "stilde";
    case Group::atilde: return "atilde";
    case Group::g: return "g";
    case Group::gplus: return "gplus";
  }
  return "?";
}

std::string to_string(Flavor f) { return f == Flavor::spin ? "spin" : "nonspin"; }

std::string to_string(Variant v) {
  switch (v) {
    case Variant::whole: return "whole";
    case Variant::plus: return "plus";
    case Variant::minus: return "minus";
  }
  return "?";
}

Group parse_group(std::string_view s) {
  if (s == "stilde") return Group::stilde;
  if (s == "atilde") return Group::atilde;
  if (s == "g") return Group::g;
  if (s == "gplus") return Group::gplus;
  throw std::invalid_argument("unknown group \"" + std::string(s) + "\"");
}

Flavor parse_flavor(std::string_view s) {
  if (s == "spin") return Flavor::spin;
  if (s == "nonspin") return Flavor::nonspin;
  throw std::invalid_argument("unknown flavor \"" + std::string(s) + "\"");
}

Variant parse_variant(std::string_view s) {
  if (s == "whole") return Variant::whole;
  if (s == "plus") return Variant::plus;
  if (s == "minus") return Variant::minus;
  throw std::invalid_argument("unknown variant \"" + std::string(s) + "\"");
}

std::string to_string(const CharLabel& c) {
  std::string s = display(c.partition);
  if (c.variant == Variant::plus) s += "+";
  if (c.variant == Variant::minus) s += "-";
  return s;
}

Partition orbit_representative(const Partition& lambda) { return std::max(lambda, conjugate(lambda)); }

std::vector<CharLabel> classify(const Partition& lambda, Group group, Flavor flavor) {
  if (group != Group::stilde && group != Group::atilde)
    throw std::invalid_argument("classify handles stilde and atilde only");
  bool whole = false;
  Partition label = lambda;
  if (flavor == Flavor::spin) {
    if (!lambda.is_strict()) throw std::invalid_argument("spin labels need distinct parts: " + display(lambda));
    whole = (sign(lambda).is_plus() == (group == Group::stilde));
  } else {
    const bool sc = is_self_conjugate(lambda);
    whole = (group == Group::stilde) ? sc : !sc;
    if (group == Group::atilde) label = orbit_representative(lambda);
  }
  if (whole) return {{label, group, flavor, Variant::whole}};
  return {{label, group, flavor, Variant::plus}, {label, group, flavor, Variant::minus}};
}

bool is_split(const ClassLabel& c) {
  const auto& parts = c.cycle_type.parts();
  if (std::all_of(parts.begin(), parts.end(), [](int x) { return x % 2 == 1; })) return true;
  if (!c.cycle_type.is_strict()) return false;
  const Sign s = sign(c.cycle_type);
  return c.group == Group::stilde ? s.is_minus() : s.is_plus();
}

std::vector<int> bar_hook_lengths(const BarPartition& lambda) {
  std::vector<int> hooks;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<int> gaps;
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      hooks.push_back(parts[i] + parts[j]);
      gaps.push_back(parts[i] - parts[j]);
    }
    for (int h = 1; h <= parts[i]; ++h)
      if (std::find(gaps.begin(), gaps.end(), h) == gaps.end()) hooks.push_back(h);
  }
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  return hooks;
}

std::vector<int> hook_lengths(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<int> hooks;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks.push_back((lambda[i] - j - 1) + (conj[j] - i - 1) + 1);
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  return hooks;
}

namespace {

int valuation_sum(const std::vector<int>& xs, int p) {
  int v = 0;
  for (int x : xs) v += valuation(x, p);
  return v;
}

}  // namespace

int spin_degree_valuation(const BarPartition& lambda, int p) {
  return factorial_valuation(lambda.size(), p) - valuation_sum(bar_hook_lengths(lambda), p);
}

int ordinary_degree_valuation(const Partition& lambda, int p) {
  return factorial_valuation(lambda.size(), p) - valuation_sum(hook_lengths(lambda), p);
}

int degree_valuation(const CharLabel& label, int p) {
  if (label.flavor == Flavor::spin) return spin_degree_valuation(BarPartition(label.partition), p);
  return ordinary_degree_valuation(label.partition, p);
}

HeightsAndDefect heights_from_valuations(const std::vector<int>& valuations, int order_valuation) {
  if (valuations.empty()) throw std::invalid_argument("block has no characters");
  const int lo = *std::min_element(valuations.begin(), valuations.end());
  HeightsAndDefect out;
  out.defect = order_valuation - lo;
  for (int v : valuations) out.heights.push_back(v - lo);
  return out;
}

HeightsAndDefect height_and_defect(const std::vector<CharLabel>& members, int n, int p) {
  std::vector<int> vals;
  for (const auto& m : members) vals.push_back(degree_valuation(m, p));
  return heights_from_valuations(vals, factorial_valuation(n, p));
}

Sign label_tau(const CharLabel& label, const GaloisElement& f) {
  if (label.variant == Variant::whole) return Sign::plus();
  if (label.flavor == Flavor::spin) return tau_partition(BarPartition(label.partition), f);
  if (label.group == Group::atilde) return tau_selfconjugate(label.partition, f);
  return Sign::plus();
}

}  // namespace spinbar
