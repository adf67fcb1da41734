#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spinbar/characters.hpp"
#include "spinbar/galois.hpp"
#include "spinbar/humphreys.hpp"
#include "spinbar/partition.hpp"

namespace spinbar {

struct SpinBlockId {
  BarPartition kappa;
  int w = 0;
  Group group = Group::stilde;
  int p = 3;
};

struct NonSpinBlockId {
  Partition kappa;  // self-conjugate p-core
  int w = 0;
  int p = 3;
};

/// Labels of strict partitions of |kappa| + p*w with p-bar core kappa.
std::vector<CharLabel> spin_block_members(const SpinBlockId& id);
/// Non-spin atilde labels of partitions with p-core kappa and weight w.
std::vector<CharLabel> nonspin_block_members(const NonSpinBlockId& id);

/// p-bar cores, resp. self-conjugate p-cores, of size at most max_size.
std::vector<BarPartition> bar_cores_up_to(int max_size, int p);
std::vector<Partition> selfconjugate_cores_up_to(int max_size, int p);

/// Label map between two blocks of equal weight obtained by swapping the core.
struct PsiMap {
  Partition source_core;
  Partition target_core;
  Group source_group = Group::stilde;
  Group target_group = Group::stilde;
  Flavor flavor = Flavor::spin;
  int w = 0;
  int p = 3;
  std::vector<std::pair<CharLabel, CharLabel>> pairs;
  bool hypothesis = false;  // tau(kappa, sigma_p) == tau(kappa', sigma_p)
};

/// Same sign: stays in source.group. Opposite signs: switches between stilde
/// and atilde, allowed when the stilde-side core has sign -1 and the
/// atilde-side core sign +1; the other orientation needs allow_reversed.
PsiMap psi(const SpinBlockId& source, const BarPartition& target_core, bool allow_reversed = false);
/// Throws unless both cores are self-conjugate p-cores.
PsiMap nonspin_psi(const Partition& kappa, const Partition& target_core, int w, int p);

struct VerificationReport {
  std::string suite;
  int p = 3;
  int bound = 0;
  long long cases = 0;
  nlohmann::json violations = nlohmann::json::array();
  nlohmann::json notes = nlohmann::json::object();

  bool passed() const { return violations.empty(); }
};

/// sigma_p together with every (e=0, s); with full set, all e in {0,1,2}.
std::vector<GaloisElement> galois_set(int p, bool full);

/// tau on every plus/minus source label against its image, for each f.
VerificationReport equivariance_check(const PsiMap& map, const std::vector<GaloisElement>& fs);

struct VerifyOptions {
  int p = 3;
  int bound = 10;
  int max_w = 3;
  bool full_f = false;
  int threads = 0;  // 0 = hardware concurrency
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
VerificationReport verify(const std::string& suite, const VerifyOptions& options);

}  // namespace spinbar
