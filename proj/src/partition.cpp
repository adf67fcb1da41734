#include "spinbar/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace spinbar {

Sign Sign::from_int(int v) {
  if (v == 1) return plus();
  if (v == -1) return minus();
  throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(v));
}

std::string to_string(Sign s) { return s.is_plus() ? "+1" : "-1"; }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_strict() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

BarPartition::BarPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("bar-partition parts must be positive");
    if (i > 0 && parts_[i] >= parts_[i - 1])
      throw std::invalid_argument("bar-partition parts must be strictly decreasing");
  }
}

int BarPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Sign sign(const Partition& lambda) { return Sign::from_parity(lambda.size() - lambda.length()); }

FrobeniusSymbol frobenius(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  FrobeniusSymbol f;
  for (int i = 0; i < lambda.length() && lambda[i] > i; ++i) {
    f.arms.push_back(lambda[i] - i - 1);
    f.legs.push_back(conj[i] - i - 1);
  }
  return f;
}

Partition from_frobenius(std::vector<int> legs, std::vector<int> arms) {
  if (legs.size() != arms.size())
    throw std::invalid_argument("Frobenius symbol needs as many legs as arms");
  auto canon = [](std::vector<int>& v, const char* what) {
    std::sort(v.begin(), v.end(), std::greater<>());
    if (!v.empty() && v.back() < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      throw std::invalid_argument(std::string(what) + " must be distinct");
  };
  canon(legs, "legs");
  canon(arms, "arms");
  const int d = static_cast<int>(arms.size());
  if (d == 0) return {};
  // Column lengths of the first d columns, then rows below the Durfee square.
  std::vector<int> cols(d);
  for (int j = 0; j < d; ++j) cols[j] = legs[j] + j + 1;
  std::vector<int> parts;
  for (int i = 0; i < d; ++i) parts.push_back(arms[i] + i + 1);
  for (int row = d + 1; row <= cols[0]; ++row) {
    int len = 0;
    while (len < d && cols[len] >= row) ++len;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

std::vector<int> diagonal_hooks(const Partition& lambda) {
  const auto f = frobenius(lambda);
  std::vector<int> hooks;
  for (std::size_t i = 0; i < f.arms.size(); ++i) hooks.push_back(f.arms[i] + f.legs[i] + 1);
  return hooks;
}

int durfee(const Partition& lambda) {
  int d = 0;
  while (d < lambda.length() && lambda[d] > d) ++d;
  return d;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> cols(lambda[0], 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++cols[j];
  return Partition(std::move(cols));
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

namespace {

void generate(int remaining, int max_part, bool strict, std::vector<int>& prefix,
              const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(prefix));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, strict ? part - 1 : part, strict, prefix, fn);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, PartitionKind kind, const std::function<void(const Partition&)>& fn) {
  if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
  std::vector<int> prefix;
  if (kind == PartitionKind::self_conjugate) {
    generate(n, n, false, prefix, [&](const Partition& p) {
      if (is_self_conjugate(p)) fn(p);
    });
  } else {
    generate(n, n, kind == PartitionKind::strict, prefix, fn);
  }
}

std::vector<Partition> enumerate(int n, PartitionKind kind) {
  std::vector<Partition> out;
  for_each_partition(n, kind, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<BarPartition> enumerate_strict(int n) {
  std::vector<BarPartition> out;
  for_each_partition(n, PartitionKind::strict, [&](const Partition& p) { out.emplace_back(p); });
  return out;
}

std::string format(const Partition& lambda) {
  std::string s;
  for (int i = 0; i < lambda.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(lambda[i]);
  }
  return s;
}

std::string display(const Partition& lambda) {
  if (lambda.empty()) return "∅";
  return "(" + format(lambda) + ")";
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return {};
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const auto token = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed partition literal: \"" + std::string(text) + "\"");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

BarPartition parse_bar_partition(std::string_view text) { return BarPartition(parse_partition(text)); }

int valuation(long long n, int p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int factorial_valuation(int n, int p) {
  int v = 0;
  for (long long q = p; q <= n; q *= p) v += static_cast<int>(n / q);
  return v;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace spinbar
