#pragma once

#include <utility>
#include <vector>

#include "spinbar/characters.hpp"
#include "spinbar/galois.hpp"
#include "spinbar/partition.hpp"

namespace spinbar {

/// Spin character zeta_{mu,nu} of the twisted product of the double covers of
/// S_r and S_pw (group g) or of its index-two subgroup (gplus).
struct GCharLabel {
  BarPartition mu;
  BarPartition nu;
  Group group = Group::g;
  Variant variant = Variant::whole;

  friend auto operator<=>(const GCharLabel&, const GCharLabel&) = default;
  friend bool operator==(const GCharLabel&, const GCharLabel&) = default;
};

std::string to_string(const GCharLabel& z);

struct GBlockId {
  BarPartition kappa;
  int w = 0;
  Group group = Group::g;
  int p = 3;
};

/// On g the label is whole iff mu and nu have the same sign; gplus is the reverse.
std::vector<GCharLabel> classify_g(const BarPartition& mu, const BarPartition& nu, Group group);

/// +1 on whole labels. Otherwise tau(mu) tau(nu), times tau_i when both
/// signs are -1.
Sign tau_g(const GCharLabel& label, const GaloisElement& f);

/// Strict partitions of p*w with empty p-bar core.
std::vector<BarPartition> cocores_of_weight(int w, int p);

/// One whole label or a pair for each cocore nu of weight w, with mu = kappa.
/// Throws unless kappa is a p-bar core.
std::vector<GCharLabel> block_members(const GBlockId& id);

/// Labels of xi_lambda on stilde (resp. atilde) paired with the labels of
/// zeta_{core, cocore} on g (resp. gplus), variant by variant.
std::vector<std::pair<CharLabel, GCharLabel>> phi(const BarPartition& lambda, int p, Group group);
CharLabel phi_inverse(const GCharLabel& label, int p);

int g_degree_valuation(const GCharLabel& label, int p);
/// Order valuation of the twisted product is that of r! (pw)!.
HeightsAndDefect g_height_and_defect(const std::vector<GCharLabel>& members, int p);

}  // namespace spinbar
