#pragma once

#include "spinbar/partition.hpp"

namespace spinbar {

/// Automorphism acting by zeta -> zeta^(p^e) on roots of unity of order prime
/// to p and by zeta_p -> zeta_p^s on p-th roots. s is kept reduced mod p.
struct GaloisElement {
  int p = 3;
  int e = 1;
  int s = 1;

  /// Throws unless p is an odd prime, e >= 0 and s is a unit mod p.
  GaloisElement(int p, int e, int s);
  static GaloisElement sigma(int p) { return {p, 1, 1}; }
  static GaloisElement identity(int p) { return {p, 0, 1}; }

  GaloisElement compose(const GaloisElement& other) const;
  friend bool operator==(const GaloisElement&, const GaloisElement&) = default;
};

/// Jacobi symbol (a/n); throws for even or non-positive n.
int jacobi(long long a, long long n);

/// Sign taken by i and by sqrt(2) under f.
Sign tau_i(const GaloisElement& f);
Sign tau_sqrt2(const GaloisElement& f);

/// f(sqrt(m)) = tau_sqrt(m, f) * sqrt(m) for m >= 1, including p | m.
Sign tau_sqrt(long long m, const GaloisElement& f);

/// sqrt(2)^two_exp * i^i_exp * sqrt(radicand), radicand squarefree.
struct SurdValue {
  int two_exp = 0;
  int i_exp = 0;
  long long radicand = 1;

  friend bool operator==(const SurdValue&, const SurdValue&) = default;
};

/// Squarefree kernel of a product, computed factor by factor.
long long squarefree_product(const std::vector<int>& factors);

/// Value of the difference character on its distinguished class. The empty
/// partition gives the rational unit.
SurdValue diff_value(const BarPartition& lambda);
/// Same with diagonal hook lengths in place of parts; throws unless lambda is
/// self-conjugate.
SurdValue selfconjugate_diff_value(const Partition& lambda);

Sign tau_surd(const SurdValue& v, const GaloisElement& f);
Sign tau_partition(const BarPartition& lambda, const GaloisElement& f);
Sign tau_selfconjugate(const Partition& lambda, const GaloisElement& f);

}  // namespace spinbar
