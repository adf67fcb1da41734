#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace spinbar {

/// +1 or -1, closed under multiplication.
class Sign {
 public:
  constexpr Sign() = default;

  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }
  /// (-1)^k
  static constexpr Sign from_parity(long long k) { return (k % 2 == 0) ? plus() : minus(); }
  static Sign from_int(int v);

  constexpr int value() const { return value_; }
  constexpr bool is_plus() const { return value_ == 1; }
  constexpr bool is_minus() const { return value_ == -1; }

  constexpr Sign operator-() const { return Sign(-value_); }
  constexpr Sign& operator*=(Sign o) {
    value_ *= o.value_;
    return *this;
  }
  friend constexpr Sign operator*(Sign a, Sign b) { return a *= b; }
  friend constexpr bool operator==(Sign, Sign) = default;

  /// Power of a sign; negative exponents are fine since s^-1 = s.
  constexpr Sign pow(long long k) const { return is_plus() ? plus() : from_parity(k); }

 private:
  explicit constexpr Sign(int v) : value_(v) {}
  int value_ = 1;
};

std::string to_string(Sign s);

/// Weakly decreasing sequence of positive integers. The empty partition is a
/// valid value.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Distinct parts.
  bool is_strict() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Strictly decreasing sequence of positive integers (a bar-partition).
class BarPartition {
 public:
  BarPartition() = default;
  /// Throws std::invalid_argument unless parts are positive and strictly decreasing.
  explicit BarPartition(std::vector<int> parts);
  BarPartition(std::initializer_list<int> parts) : BarPartition(std::vector<int>(parts)) {}
  /// Throws if `p` has a repeated part.
  explicit BarPartition(const Partition& p) : BarPartition(p.parts()) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  Partition as_partition() const { return Partition(parts_); }
  operator Partition() const { return as_partition(); }  // NOLINT: lossless

  friend auto operator<=>(const BarPartition&, const BarPartition&) = default;
  friend bool operator==(const BarPartition&, const BarPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// Frobenius coordinates (legs | arms). Both sets are kept sorted descending;
/// the i-th leg and i-th arm belong to the same diagonal hook.
struct FrobeniusSymbol {
  std::vector<int> legs;
  std::vector<int> arms;

  friend bool operator==(const FrobeniusSymbol&, const FrobeniusSymbol&) = default;
};

/// (-1)^(|lambda| - l(lambda)).
Sign sign(const Partition& lambda);
inline Sign sign(const BarPartition& lambda) { return sign(lambda.as_partition()); }

FrobeniusSymbol frobenius(const Partition& lambda);
/// Inverse of frobenius. Input sets may be in any order but must hold distinct
/// non-negative entries; throws std::invalid_argument if |legs| != |arms|.
Partition from_frobenius(std::vector<int> legs, std::vector<int> arms);
inline Partition from_frobenius(const FrobeniusSymbol& f) { return from_frobenius(f.legs, f.arms); }

/// Diagonal hook lengths a_i + l_i + 1, descending. Their count is the Durfee number.
std::vector<int> diagonal_hooks(const Partition& lambda);
int durfee(const Partition& lambda);

Partition conjugate(const Partition& lambda);
bool is_self_conjugate(const Partition& lambda);

enum class PartitionKind { all, strict, self_conjugate };

/// Every qualifying partition of n exactly once, lexicographically descending.
std::vector<Partition> enumerate(int n, PartitionKind kind);
std::vector<BarPartition> enumerate_strict(int n);
/// Streaming form; the callback sees partitions in the same order as enumerate.
void for_each_partition(int n, PartitionKind kind, const std::function<void(const Partition&)>& fn);

/// "a,b,c"; the empty string is the empty partition.
std::string format(const Partition& lambda);
inline std::string format(const BarPartition& lambda) { return format(lambda.as_partition()); }
/// Human display: "(a,b,c)" or "∅".
std::string display(const Partition& lambda);
inline std::string display(const BarPartition& lambda) { return display(lambda.as_partition()); }

Partition parse_partition(std::string_view text);
BarPartition parse_bar_partition(std::string_view text);

/// p-adic valuation of n != 0.
int valuation(long long n, int p);
/// p-adic valuation of n! (Legendre).
int factorial_valuation(int n, int p);
bool is_prime(long long n);

}  // namespace spinbar
