#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <vector>

namespace vknot::test_support {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
  int classes() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) n += find(i) == i;
    return n;
  }
};

// Angle in degrees of a half-edge: over strand runs along +x, the under strand
// crosses it so that (over, under) is positively oriented for a '+' crossing.
int angle(bool over, bool outgoing, Sign sign) {
  if (over) return outgoing ? 0 : 180;
  const bool up = (sign == Sign::Positive) == outgoing;
  return up ? 90 : 270;
}

// Counterclockwise rank 0..3 of a half-edge around its crossing.
int rank(bool over, bool outgoing, Sign sign) { return angle(over, outgoing, sign) / 90; }

}  // namespace

OracleSurface oracle_surface(const Diagram& d) {
  OracleSurface out;
  std::map<CrossingId, int> index;
  for (const auto& c : d.components())
    for (const auto& occ : c) index.emplace(occ.id, 0);
  int next = 0;
  for (auto& [id, v] : index) v = next++;
  out.vertices = next;
  if (out.vertices == 0) {
    out.edges = 0;
    out.faces = 2;
    out.pieces = 1;
    out.genus = 0;
    return out;
  }

  // Corner k of vertex v sits between ranks k and k+1.
  UnionFind corners(4 * out.vertices);
  UnionFind pieces(out.vertices);
  auto corner = [](int v, int k) { return 4 * v + ((k % 4) + 4) % 4; };
  for (const auto& c : d.components()) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Occurrence& a = c[k];
      const Occurrence& b = c[(k + 1) % c.size()];
      const int va = index[a.id];
      const int vb = index[b.id];
      const int i = rank(a.passage == Passage::Over, true, a.sign);
      const int j = rank(b.passage == Passage::Over, false, b.sign);
      corners.join(corner(va, i), corner(vb, j - 1));  // left side
      corners.join(corner(va, i - 1), corner(vb, j));  // right side
      pieces.join(va, vb);
      ++out.edges;
    }
  }
  out.faces = corners.classes();
  out.pieces = pieces.classes();
  const int chi = out.vertices - out.edges + out.faces;
  out.genus = (2 * out.pieces - chi) / 2;
  return out;
}

long double lobachevsky_tet_volume(long terms) {
  // Lobachevsky(x) = 1/2 sum sin(2 n x) / n^2; at x = pi/3 the sine only
  // takes the values sin(2 pi/3), sin(4 pi/3) and 0.
  const long double x = std::numbers::pi_v<long double> / 3;
  const long double s[3] = {0, std::sin(2 * x), std::sin(4 * x)};
  long double sum = 0;
  for (long n = terms; n >= 1; --n) {
    const long double nn = static_cast<long double>(n);
    sum += s[n % 3] / (nn * nn);
  }
  return 3 * sum / 2;
}

Diagram random_code(std::mt19937_64& rng, int max_crossings) {
  const int n = std::uniform_int_distribution<int>(1, max_crossings)(rng);
  std::vector<CrossingId> ids;
  for (int i = 1; i <= n; ++i) ids.insert(ids.end(), 2, static_cast<CrossingId>(i));
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<Sign> signs(n + 1);
  std::vector<bool> first_over(n + 1);
  for (int i = 1; i <= n; ++i) {
    signs[i] = rng() % 2 ? Sign::Positive : Sign::Negative;
    first_over[i] = rng() % 2;
  }
  std::vector<bool> seen(n + 1, false);
  Component c;
  for (CrossingId id : ids) {
    const bool over = seen[id] ? !first_over[id] : first_over[id];
    seen[id] = true;
    c.push_back({id, over ? Passage::Over : Passage::Under, signs[id]});
  }
  return Diagram::from_components({std::move(c)});
}

Diagram random_alternating(std::mt19937_64& rng, int crossings) {
  std::vector<int> slot(crossings);
  std::iota(slot.begin(), slot.end(), 0);
  std::shuffle(slot.begin(), slot.end(), rng);
  Component c(2 * static_cast<std::size_t>(crossings));
  for (int i = 0; i < crossings; ++i) {
    const Sign s = rng() % 2 ? Sign::Positive : Sign::Negative;
    const auto id = static_cast<CrossingId>(i + 1);
    c[2 * static_cast<std::size_t>(i)] = {id, Passage::Over, s};
    c[2 * static_cast<std::size_t>(slot[i]) + 1] = {id, Passage::Under, s};
  }
  return Diagram::from_components({std::move(c)});
}

}  // namespace vknot::test_support
