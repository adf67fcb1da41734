#pragma once

#include "spinbar/galois.hpp"

namespace spinbar {

/// Sign of f(sqrt(m)) / sqrt(m) computed by writing sqrt(m) as an exact
/// integer combination of N-th roots of unity (Gauss sums and
/// zeta_8 + zeta_8^-1), applying f to exponents and comparing in Z[zeta_N].
/// Throws std::out_of_range when m exceeds bound.
Sign oracle_tau_sqrt(long long m, const GaloisElement& f, long long bound = 10000);

}  // namespace spinbar
