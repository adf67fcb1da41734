#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spinbar/partition.hpp"

namespace spinbar {

/// One runner with a fence. Only the beads that differ from the default
/// state are stored: black beads above the fence and white beads below it.
/// Slots are numbered from the fence outward, both sets sorted ascending.
struct PointedRunner {
  std::vector<int> black_above;
  std::vector<int> white_below;

  bool is_pointed() const { return black_above.size() == white_below.size(); }
  int charge() const {
    return static_cast<int>(black_above.size()) - static_cast<int>(white_below.size());
  }
  friend bool operator==(const PointedRunner&, const PointedRunner&) = default;
};

struct BarAbacus {
  int t = 3;
  std::vector<std::vector<int>> runners;  // t entries, black slots ascending

  friend bool operator==(const BarAbacus&, const BarAbacus&) = default;
};

struct TwistedBarAbacus {
  int t = 3;
  std::vector<int> runner0;
  std::vector<PointedRunner> shifted;  // index r-1 holds runner r, r = 1..(t-1)/2

  friend bool operator==(const TwistedBarAbacus&, const TwistedBarAbacus&) = default;
};

/// Throws std::invalid_argument unless t is odd and at least 3.
void check_odd_modulus(int t);

BarAbacus bar_abacus(const BarPartition& lambda, int t);
BarPartition to_partition(const BarAbacus& a);

TwistedBarAbacus twist(const BarAbacus& a);
BarAbacus untwist(const TwistedBarAbacus& a);

/// Default runner pushed by m: m black beads above (m > 0) or |m| white
/// beads below (m < 0).
PointedRunner reference_runner(int m);

/// Moves every bead delta positions upward across the fence. Position q >= 0
/// is above-slot q, position q < 0 is below-slot -1-q. Charge grows by delta.
PointedRunner shift(const PointedRunner& r, int delta);

/// The unique pointed shift of r together with the charge that was removed;
/// shift(result.first, result.second) == r.
std::pair<PointedRunner, int> normalize(const PointedRunner& r);

std::string render(const BarAbacus& a);
std::string render(const TwistedBarAbacus& a);

}  // namespace spinbar
