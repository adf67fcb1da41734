#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spinbar/abacus.hpp"
#include "spinbar/partition.hpp"

namespace spinbar {

/// t-bar core, quotient, characteristic vector and cocore of a bar-partition.
/// quotient[0] is strict (read off runner 0); quotient[r] for r >= 1 comes
/// from the pointed form of twisted runner r.
struct BarLittlewood {
  int t = 3;
  BarPartition core;
  std::vector<Partition> quotient;
  std::vector<int> charvec;
  int weight = 0;
  BarPartition cocore;
  int d = 0;  // pairs of parts lost between lambda and core + cocore

  friend bool operator==(const BarLittlewood&, const BarLittlewood&) = default;
};

BarLittlewood bar_decompose(const BarPartition& lambda, int t);

/// Throws unless core has empty t-bar quotient and quotient has (t+1)/2
/// components with a strict first component.
BarPartition bar_reconstruct(const BarPartition& core, const std::vector<Partition>& quotient, int t);

BarPartition bar_cocore(const BarPartition& lambda, int t);
bool is_bar_core(const BarPartition& lambda, int t);

/// The bar-partition whose twisted abacus is the reference family for the
/// given characteristic vector.
BarPartition core_from_charvec(const std::vector<int>& charvec, int t);

/// Pairs (t*x + r, t*x' + t - r) of a cocore, one per diagonal hook of the
/// quotient components 1..(t-1)/2. Throws unless lambda has empty core.
std::vector<std::pair<int, int>> paired_parts(const BarPartition& lambda, int t);

/// Same construction for ordinary partitions: arm a goes above runner a mod p,
/// leg l goes below runner p-1-(l mod p).
struct OrdinaryLittlewood {
  int p = 3;
  Partition core;
  std::vector<Partition> quotient;  // p components
  std::vector<int> charvec;         // p charges, summing to 0
  int weight = 0;
  Partition cocore;
  std::optional<int> d;  // only for self-conjugate input

  friend bool operator==(const OrdinaryLittlewood&, const OrdinaryLittlewood&) = default;
};

OrdinaryLittlewood ordinary_decompose(const Partition& lambda, int p);
Partition ordinary_reconstruct(const Partition& core, const std::vector<Partition>& quotient, int p);
Partition ordinary_cocore(const Partition& lambda, int p);
bool is_ordinary_core(const Partition& lambda, int p);

/// Diagonal hooks of a self-conjugate p-cocore grouped in pairs whose sum is
/// divisible by 2p. Hooks on the middle runner are paired with themselves.
std::vector<std::pair<int, int>> selfconjugate_paired_hooks(const Partition& lambda, int p);

}  // namespace spinbar
