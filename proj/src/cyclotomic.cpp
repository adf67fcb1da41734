#include "spinbar/cyclotomic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spinbar {

namespace {

using Dense = std::vector<long long>;
using Sparse = std::vector<std::pair<int, long long>>;

Dense multiply(const Dense& x, const Sparse& y, int n) {
  Dense out(n, 0);
  for (int k = 0; k < n; ++k) {
    if (x[k] == 0) continue;
    for (auto [j, c] : y) out[(k + j) % n] += x[k] * c;
  }
  return out;
}

// Legendre symbol by listing squares; deliberately avoids the reciprocity code.
std::vector<int> legendre_table(int q) {
  std::vector<int> table(q, -1);
  table[0] = 0;
  for (int a = 1; a < q; ++a) table[static_cast<long long>(a) * a % q] = 1;
  return table;
}

// Z[zeta_N] as the tensor product of Z[zeta_8] and Z[zeta_q]; each axis is
// reduced to the basis zeta_8^0..3, resp. zeta_q^1..q-1.
struct Ring {
  int n;
  std::vector<int> moduli;  // 8 first, then the odd primes

  std::vector<long long> canonical(const Dense& x) const {
    std::vector<int> stride(moduli.size());
    int size = 1;
    for (std::size_t a = 0; a < moduli.size(); ++a) {
      stride[a] = size;
      size *= moduli[a];
    }
    std::vector<long long> t(size, 0);
    for (int k = 0; k < n; ++k) {
      if (x[k] == 0) continue;
      int idx = 0;
      for (std::size_t a = 0; a < moduli.size(); ++a) idx += (k % moduli[a]) * stride[a];
      t[idx] += x[k];
    }
    for (std::size_t a = 0; a < moduli.size(); ++a) {
      const int m = moduli[a];
      for (int idx = 0; idx < size; ++idx) {
        const int digit = (idx / stride[a]) % m;
        if (digit != 0) continue;
        if (m == 8) {
          for (int k = 4; k < 8; ++k) {
            t[idx + (k - 4) * stride[a]] -= t[idx + k * stride[a]];
            t[idx + k * stride[a]] = 0;
          }
        } else {
          const long long c0 = t[idx];
          if (c0 == 0) continue;
          for (int k = 1; k < m; ++k) t[idx + k * stride[a]] -= c0;
          t[idx] = 0;
        }
      }
    }
    return t;
  }
};

}  // namespace

Sign oracle_tau_sqrt(long long m, const GaloisElement& f, long long bound) {
  if (m < 1) throw std::invalid_argument("oracle needs a positive integer");
  if (m > bound) throw std::out_of_range("oracle bound exceeded: " + std::to_string(m));

  // Odd primes occurring to an odd power, and whether 2 does.
  std::vector<int> odd;
  bool two = false;
  long long rest = m;
  for (long long q = 2; rest > 1; ++q) {
    if (q * q > rest) q = rest;
    int e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    if (e % 2 == 1) {
      if (q == 2)
        two = true;
      else
        odd.push_back(static_cast<int>(q));
    }
  }

  std::set<int> primes(odd.begin(), odd.end());
  primes.insert(f.p);
  Ring ring{8, {8}};
  for (int q : primes) {
    ring.n *= q;
    ring.moduli.push_back(q);
  }
  const int n = ring.n;

  Dense x(n, 0);
  x[0] = 1;
  if (two) x = multiply(x, {{n / 8, 1}, {n - n / 8, 1}}, n);
  for (int q : odd) {
    const auto leg = legendre_table(q);
    Sparse g;
    for (int a = 1; a < q; ++a) g.emplace_back(a * (n / q), leg[a]);
    x = multiply(x, g, n);
    if (q % 4 == 3) x = multiply(x, {{3 * (n / 4), 1}}, n);  // times -i
  }

  // u = s mod p and u = p^e mod N/p.
  const int cofactor = n / f.p;
  long long pe = 1;
  for (int k = 0; k < f.e; ++k) pe = pe * f.p % cofactor;
  long long u = -1;
  for (int k = 0; k < f.p; ++k) {
    const long long cand = pe + static_cast<long long>(k) * cofactor;
    if (cand % f.p == f.s) {
      u = cand;
      break;
    }
  }
  if (u < 0) throw std::logic_error("no CRT lift for the Galois element");

  Dense y(n, 0);
  for (int k = 0; k < n; ++k) y[(u * k) % n] += x[k];

  const auto cx = ring.canonical(x);
  const auto cy = ring.canonical(y);
  if (cx == cy) return Sign::plus();
  auto neg = cx;
  for (auto& c : neg) c = -c;
  if (neg == cy) return Sign::minus();
  throw std::logic_error("image of a square root is not +/- itself");
}

}  // namespace spinbar
