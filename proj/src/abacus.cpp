#include "spinbar/abacus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spinbar {

void check_odd_modulus(int t) {
  if (t < 3 || t % 2 == 0)
    throw std::invalid_argument("modulus must be odd and >= 3, got " + std::to_string(t));
}

BarAbacus bar_abacus(const BarPartition& lambda, int t) {
  check_odd_modulus(t);
  BarAbacus a{t, std::vector<std::vector<int>>(t)};
  for (int part : lambda.parts()) a.runners[part % t].push_back(part / t);
  for (auto& r : a.runners) std::sort(r.begin(), r.end());
  return a;
}

BarPartition to_partition(const BarAbacus& a) {
  check_odd_modulus(a.t);
  if (static_cast<int>(a.runners.size()) != a.t)
    throw std::invalid_argument("bar abacus must have t runners");
  std::vector<int> parts;
  for (int r = 0; r < a.t; ++r)
    for (int x : a.runners[r]) parts.push_back(a.t * x + r);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return BarPartition(std::move(parts));
}

TwistedBarAbacus twist(const BarAbacus& a) {
  TwistedBarAbacus tw{a.t, a.runners.at(0), {}};
  for (int r = 1; r <= (a.t - 1) / 2; ++r) tw.shifted.push_back({a.runners.at(r), a.runners.at(a.t - r)});
  return tw;
}

BarAbacus untwist(const TwistedBarAbacus& tw) {
  check_odd_modulus(tw.t);
  if (static_cast<int>(tw.shifted.size()) != (tw.t - 1) / 2)
    throw std::invalid_argument("twisted abacus must have (t-1)/2 shifted runners");
  BarAbacus a{tw.t, std::vector<std::vector<int>>(tw.t)};
  a.runners[0] = tw.runner0;
  for (int r = 1; r <= (tw.t - 1) / 2; ++r) {
    a.runners[r] = tw.shifted[r - 1].black_above;
    a.runners[tw.t - r] = tw.shifted[r - 1].white_below;
  }
  return a;
}

PointedRunner reference_runner(int m) {
  PointedRunner r;
  for (int j = 0; j < m; ++j) r.black_above.push_back(j);
  for (int j = 0; j < -m; ++j) r.white_below.push_back(j);
  return r;
}

PointedRunner shift(const PointedRunner& r, int delta) {
  // Positions below -depth are black before and after the move.
  int depth = std::abs(delta) + 1;
  if (!r.white_below.empty()) depth += r.white_below.back() + 1;
  std::vector<int> black;
  for (int x : r.black_above) black.push_back(x);
  for (int q = -depth; q < 0; ++q)
    if (!std::binary_search(r.white_below.begin(), r.white_below.end(), -1 - q)) black.push_back(q);
  PointedRunner out;
  for (int q : black) {
    const int moved = q + delta;
    if (moved >= 0) out.black_above.push_back(moved);
  }
  // Every negative position not hit by a moved black bead is white.
  std::vector<int> shifted_black;
  for (int q : black) shifted_black.push_back(q + delta);
  std::sort(shifted_black.begin(), shifted_black.end());
  for (int q = -depth + delta; q < 0; ++q)
    if (!std::binary_search(shifted_black.begin(), shifted_black.end(), q)) out.white_below.push_back(-1 - q);
  std::sort(out.black_above.begin(), out.black_above.end());
  std::sort(out.white_below.begin(), out.white_below.end());
  return out;
}

std::pair<PointedRunner, int> normalize(const PointedRunner& r) {
  const int c = r.charge();
  return {shift(r, -c), c};
}

namespace {

constexpr const char* kBlack = "●";
constexpr const char* kWhite = "○";

bool has(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

int top_slot(const std::vector<int>& v) { return v.empty() ? -1 : *std::max_element(v.begin(), v.end()); }

}  // namespace

std::string render(const BarAbacus& a) {
  int top = 0;
  for (const auto& r : a.runners) top = std::max(top, top_slot(r));
  std::ostringstream out;
  for (int slot = top; slot >= 0; --slot) {
    for (int r = 0; r < a.t; ++r) out << (r ? " " : "") << (has(a.runners[r], slot) ? kBlack : kWhite);
    out << '\n';
  }
  for (int r = 0; r < a.t; ++r) out << (r ? " " : "") << r;
  out << '\n';
  return out.str();
}

std::string render(const TwistedBarAbacus& a) {
  int above = std::max(0, top_slot(a.runner0));
  int below = 0;
  for (const auto& r : a.shifted) {
    above = std::max(above, top_slot(r.black_above));
    below = std::max(below, top_slot(r.white_below));
  }
  const int cols = static_cast<int>(a.shifted.size()) + 1;
  std::ostringstream out;
  for (int slot = above; slot >= 0; --slot) {
    out << (has(a.runner0, slot) ? kBlack : kWhite);
    for (const auto& r : a.shifted) out << ' ' << (has(r.black_above, slot) ? kBlack : kWhite);
    out << '\n';
  }
  out << ' ';
  for (int c = 1; c < cols; ++c) out << " -";
  out << '\n';
  for (int slot = 0; slot <= below; ++slot) {
    out << ' ';
    for (const auto& r : a.shifted) out << ' ' << (has(r.white_below, slot) ? kWhite : kBlack);
    out << '\n';
  }
  for (int c = 0; c < cols; ++c) out << (c ? " " : "") << c;
  out << '\n';
  return out.str();
}

}  // namespace spinbar
