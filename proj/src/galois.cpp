#include "spinbar/galois.hpp"

#include <map>
#include <stdexcept>

namespace spinbar {

GaloisElement::GaloisElement(int p_, int e_, int s_) : p(p_), e(e_), s(0) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  if (e < 0) throw std::invalid_argument("e must be non-negative");
  s = ((s_ % p) + p) % p;
  if (s == 0) throw std::invalid_argument("s must be a unit mod p");
}

GaloisElement GaloisElement::compose(const GaloisElement& other) const {
  if (other.p != p) throw std::invalid_argument("cannot compose elements for different primes");
  return {p, e + other.e, static_cast<int>(static_cast<long long>(s) * other.s % p)};
}

int jacobi(long long a, long long n) {
  if (n <= 0 || n % 2 == 0) throw std::invalid_argument("Jacobi symbol needs a positive odd modulus");
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

Sign tau_i(const GaloisElement& f) { return Sign::from_parity((f.p - 1) / 2).pow(f.e); }

Sign tau_sqrt2(const GaloisElement& f) { return Sign::from_int(jacobi(2, f.p)).pow(f.e); }

Sign tau_sqrt(long long m, const GaloisElement& f) {
  if (m < 1) throw std::invalid_argument("tau_sqrt needs a positive integer");
  int a = 0;
  while (m % f.p == 0) {
    m /= f.p;
    ++a;
  }
  Sign result = Sign::from_int(jacobi(m, f.p)).pow(f.e);
  if (a % 2 == 1) {
    result *= Sign::from_int(jacobi(f.s, f.p));
    if (f.p % 4 == 3) result *= tau_i(f);
  }
  return result;
}

long long squarefree_product(const std::vector<int>& factors) {
  std::map<long long, int> parity;
  for (long long n : factors) {
    if (n < 1) throw std::invalid_argument("factors must be positive");
    for (long long q = 2; q * q <= n; ++q)
      while (n % q == 0) {
        parity[q] ^= 1;
        n /= q;
      }
    if (n > 1) parity[n] ^= 1;
  }
  long long out = 1;
  for (auto [q, odd] : parity)
    if (odd) out *= q;
  return out;
}

namespace {

SurdValue surd_from(int n, int k, Sign sgn, const std::vector<int>& lengths) {
  SurdValue v;
  if (sgn.is_minus()) {
    v.two_exp = 1;
    v.i_exp = ((n - k + 1) / 2) % 4;
  } else {
    v.i_exp = ((n - k) / 2) % 4;
  }
  v.radicand = squarefree_product(lengths);
  return v;
}

}  // namespace

SurdValue diff_value(const BarPartition& lambda) {
  if (lambda.empty()) return {};
  return surd_from(lambda.size(), lambda.length(), sign(lambda), lambda.parts());
}

SurdValue selfconjugate_diff_value(const Partition& lambda) {
  if (!is_self_conjugate(lambda)) throw std::invalid_argument(display(lambda) + " is not self-conjugate");
  if (lambda.empty()) return {};
  const auto hooks = diagonal_hooks(lambda);
  // n - c is even for self-conjugate partitions, so only the b-form occurs.
  return surd_from(lambda.size(), static_cast<int>(hooks.size()), Sign::plus(), hooks);
}

Sign tau_surd(const SurdValue& v, const GaloisElement& f) {
  return tau_sqrt2(f).pow(v.two_exp) * tau_i(f).pow(v.i_exp) * tau_sqrt(v.radicand, f);
}

Sign tau_partition(const BarPartition& lambda, const GaloisElement& f) { return tau_surd(diff_value(lambda), f); }

Sign tau_selfconjugate(const Partition& lambda, const GaloisElement& f) {
  return tau_surd(selfconjugate_diff_value(lambda), f);
}

}  // namespace spinbar
