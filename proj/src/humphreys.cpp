#include "spinbar/humphreys.hpp"

#include <stdexcept>

#include "spinbar/littlewood.hpp"

namespace spinbar {

std::string to_string(const GCharLabel& z) {
  std::string s = "zeta[" + display(z.mu) + ", " + display(z.nu) + "]";
  if (z.variant == Variant::plus) s += "+";
  if (z.variant == Variant::minus) s += "-";
  return s;
}

std::vector<GCharLabel> classify_g(const BarPartition& mu, const BarPartition& nu, Group group) {
  if (group != Group::g && group != Group::gplus) throw std::invalid_argument("classify_g handles g and gplus only");
  const bool same = sign(mu) == sign(nu);
  const bool whole = (group == Group::g) ? same : !same;
  if (whole) return {{mu, nu, group, Variant::whole}};
  return {{mu, nu, group, Variant::plus}, {mu, nu, group, Variant::minus}};
}

Sign tau_g(const GCharLabel& label, const GaloisElement& f) {
  if (label.variant == Variant::whole) return Sign::plus();
  Sign t = tau_partition(label.mu, f) * tau_partition(label.nu, f);
  if (sign(label.mu).is_minus() && sign(label.nu).is_minus()) t *= tau_i(f);
  return t;
}

std::vector<BarPartition> cocores_of_weight(int w, int p) {
  std::vector<BarPartition> out;
  for (const auto& nu : enumerate_strict(p * w))
    if (bar_decompose(nu, p).core.empty()) out.push_back(nu);
  return out;
}

std::vector<GCharLabel> block_members(const GBlockId& id) {
  if (!is_bar_core(id.kappa, id.p))
    throw std::invalid_argument(display(id.kappa) + " is not a " + std::to_string(id.p) + "-bar core");
  std::vector<GCharLabel> out;
  for (const auto& nu : cocores_of_weight(id.w, id.p))
    for (auto& z : classify_g(id.kappa, nu, id.group)) out.push_back(std::move(z));
  return out;
}

std::vector<std::pair<CharLabel, GCharLabel>> phi(const BarPartition& lambda, int p, Group group) {
  const Group target = group == Group::stilde ? Group::g : group == Group::atilde ? Group::gplus : throw std::invalid_argument("phi starts from stilde or atilde");
  const BarLittlewood dec = bar_decompose(lambda, p);
  const auto source = classify(lambda, group, Flavor::spin);
  const auto image = classify_g(dec.core, dec.cocore, target);
  if (source.size() != image.size())
    throw std::logic_error("variant mismatch under phi at " + display(lambda));
  std::vector<std::pair<CharLabel, GCharLabel>> out;
  for (std::size_t i = 0; i < source.size(); ++i) out.emplace_back(source[i], image[i]);
  return out;
}

CharLabel phi_inverse(const GCharLabel& label, int p) {
  const Group group = label.group == Group::g ? Group::stilde : Group::atilde;
  const auto quotient = bar_decompose(label.nu, p).quotient;
  const BarPartition lambda = bar_reconstruct(label.mu, quotient, p);
  return {lambda, group, Flavor::spin, label.variant};
}

int g_degree_valuation(const GCharLabel& label, int p) {
  return spin_degree_valuation(label.mu, p) + spin_degree_valuation(label.nu, p);
}

HeightsAndDefect g_height_and_defect(const std::vector<GCharLabel>& members, int p) {
  if (members.empty()) throw std::invalid_argument("block has no characters");
  std::vector<int> vals;
  for (const auto& m : members) vals.push_back(g_degree_valuation(m, p));
  const int order = factorial_valuation(members[0].mu.size(), p) + factorial_valuation(members[0].nu.size(), p);
  return heights_from_valuations(vals, order);
}

}  // namespace spinbar
