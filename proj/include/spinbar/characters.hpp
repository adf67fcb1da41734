#pragma once

#include <string>
#include <vector>

#include "spinbar/galois.hpp"
#include "spinbar/partition.hpp"

namespace spinbar {

enum class Group { stilde, atilde, g, gplus };
enum class Flavor { spin, nonspin };
enum class Variant { whole, plus, minus };

std::string to_string(Group g);
std::string to_string(Flavor f);
std::string to_string(Variant v);
Group parse_group(std::string_view s);
Flavor parse_flavor(std::string_view s);
Variant parse_variant(std::string_view s);

/// Irreducible character of the double cover of S_n (stilde) or A_n (atilde).
/// For non-spin labels on atilde the partition is the larger of lambda and
/// its conjugate.
struct CharLabel {
  Partition partition;
  Group group = Group::stilde;
  Flavor flavor = Flavor::spin;
  Variant variant = Variant::whole;

  friend auto operator<=>(const CharLabel&, const CharLabel&) = default;
  friend bool operator==(const CharLabel&, const CharLabel&) = default;
};

std::string to_string(const CharLabel& c);

/// One whole label or a plus/minus pair. Throws for a non-strict spin label or
/// a group other than stilde/atilde.
std::vector<CharLabel> classify(const Partition& lambda, Group group, Flavor flavor);

/// Representative of the conjugation orbit used for non-spin atilde labels.
Partition orbit_representative(const Partition& lambda);

struct ClassLabel {
  Partition cycle_type;
  Group group = Group::stilde;
};

bool is_split(const ClassLabel& c);

/// Bar hook lengths: for each row i, lambda_i + lambda_j (j > i) together with
/// 1..lambda_i minus the differences lambda_i - lambda_j (j > i).
std::vector<int> bar_hook_lengths(const BarPartition& lambda);
std::vector<int> hook_lengths(const Partition& lambda);

/// p-adic valuation of the degree, ignoring powers of 2.
int degree_valuation(const CharLabel& label, int p);
int spin_degree_valuation(const BarPartition& lambda, int p);
int ordinary_degree_valuation(const Partition& lambda, int p);

struct HeightsAndDefect {
  int defect = 0;
  std::vector<int> heights;  // aligned with the input
};

/// defect = order_valuation - min(valuations); height = valuation - min.
HeightsAndDefect heights_from_valuations(const std::vector<int>& valuations, int order_valuation);
/// Block of a double cover of S_n or A_n; throws on an empty member set.
HeightsAndDefect height_and_defect(const std::vector<CharLabel>& members, int n, int p);

/// Sign by which f moves the label inside its associate pair; +1 on whole
/// labels and on non-spin stilde labels.
Sign label_tau(const CharLabel& label, const GaloisElement& f);

}  // namespace spinbar
