#pragma once
// Independent reference implementations used only by the tests. None of these
// go through abaci, Frobenius symbols or Jacobi reciprocity.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

// p-bar core by repeated removal: subtract p from a part (dropping it if it
// becomes 0, refusing if the result collides), or delete two parts summing to p.
inline std::vector<int> bar_core(std::vector<int> parts, int p) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<int> s(parts.begin(), parts.end());
    for (int x : parts) {
      if (x == p) {
        s.erase(x);
        changed = true;
        break;
      }
      if (x > p && !s.count(x - p)) {
        s.erase(x);
        s.insert(x - p);
        changed = true;
        break;
      }
      if (x < p && s.count(p - x) && p - x != x) {
        s.erase(x);
        s.erase(p - x);
        changed = true;
        break;
      }
    }
    parts.assign(s.rbegin(), s.rend());
  }
  return parts;
}

// p-core by removing p-hooks on a beta-set (first column hook lengths).
inline std::vector<int> ordinary_core(const std::vector<int>& parts, int p) {
  const int len = static_cast<int>(parts.size());
  std::set<int> beta;
  for (int i = 0; i < len; ++i) beta.insert(parts[i] + (len - 1 - i));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int b : beta)
      if (b >= p && !beta.count(b - p)) {
        beta.erase(b);
        beta.insert(b - p);
        changed = true;
        break;
      }
  }
  std::vector<int> out;
  int i = static_cast<int>(beta.size()) - 1;
  for (auto it = beta.rbegin(); it != beta.rend(); ++it, --i)
    if (*it - i > 0) out.push_back(*it - i);
  return out;
}

// Number of partitions of n into odd parts, by the usual coin-change table.
inline long long odd_part_count(int n) {
  std::vector<long long> ways(n + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; part += 2)
    for (int k = part; k <= n; ++k) ways[k] += ways[k - part];
  return ways[n];
}

inline std::vector<int> conjugate_by_columns(const std::vector<int>& parts) {
  std::vector<int> out;
  for (int j = 1; !parts.empty() && j <= parts.front(); ++j)
    out.push_back(static_cast<int>(std::count_if(parts.begin(), parts.end(), [j](int x) { return x >= j; })));
  return out;
}

// Legendre symbol of a modulo an odd prime q from the list of squares.
inline int legendre(long long a, int q) {
  a %= q;
  if (a < 0) a += q;
  if (a == 0) return 0;
  for (long long x = 1; x < q; ++x)
    if (x * x % q == a) return 1;
  return -1;
}

inline std::vector<std::vector<int>> all_partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (auto rest : all_partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  return out;
}

}  // namespace oracle
