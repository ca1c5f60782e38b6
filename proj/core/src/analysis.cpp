#include "vknot/analysis.hpp"

#include <algorithm>
#include <map>

namespace vknot {

namespace {

void require_knot(const Diagram& d, const char* what) {
  if (d.component_count() != 1)
    throw MultiComponentUnsupported(std::string(what) + " is defined for knots only");
}

// Index of the corner of `vertex` that belongs to `face`, or npos.
std::size_t corner_of(const CarterSurface& s, std::size_t vertex, std::size_t face) {
  for (std::size_t j = 0; j < 4; ++j)
    if (s.corner_faces[vertex][j] == face) return j;
  return npos;
}

}  // namespace

bool is_alternating(const Diagram& d) {
  for (const auto& c : d.components()) {
    if (c.empty()) continue;
    if (c.size() % 2 != 0) return false;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k].passage == c[(k + 1) % c.size()].passage) return false;
  }
  return true;
}

bool is_reduced(const Diagram& d) { return is_reduced(trace_faces(d)); }

bool is_reduced(const CarterSurface& s) {
  for (const auto& corners : s.corner_faces)
    if (corners[0] == corners[2] || corners[1] == corners[3]) return false;
  return true;
}

std::vector<ClosedInterval> closed_intervals(const Diagram& d) {
  require_knot(d, "closed interval detection");
  const Component& code = d.components().front();
  const std::size_t n = code.size();
  std::vector<ClosedInterval> out;
  for (std::size_t start = 0; start < n; ++start) {
    std::map<CrossingId, int> seen;
    int unmatched = 0;
    for (std::size_t len = 1; len < n; ++len) {
      const CrossingId id = code[(start + len - 1) % n].id;
      if (++seen[id] == 1) {
        ++unmatched;
      } else {
        --unmatched;
      }
      if (unmatched != 0) continue;
      Component run;
      run.reserve(len);
      for (std::size_t k = 0; k < len; ++k) run.push_back(code[(start + k) % n]);
      out.push_back(ClosedInterval{start, len, carter_genus(Diagram::from_components({std::move(run)}))});
    }
  }
  return out;
}

bool is_weakly_prime(const Diagram& d) {
  require_knot(d, "weak primality");
  const auto intervals = closed_intervals(d);
  return std::none_of(intervals.begin(), intervals.end(), [](const ClosedInterval& c) { return c.genus == 0; });
}

CyclicBigonChain::CyclicBigonChain(std::vector<TwistRegion> regions, std::vector<TwistRegion> cycles)
    : Error("CyclicBigonChain", ErrorCategory::Validation,
            std::to_string(cycles.size()) + " chain(s) of end-to-end bigons close into a cycle"),
      regions_(std::move(regions)),
      cycles_(std::move(cycles)) {}

std::vector<TwistRegion> twist_regions(const Diagram& d) {
  if (d.crossing_count() == 0) return {};
  return twist_regions(d, trace_faces(d));
}

std::vector<TwistRegion> twist_regions(const Diagram&, const CarterSurface& s) {
  const std::size_t nv = s.vertex_count;
  if (nv == 0) return {};

  struct BigonEnd {
    std::size_t face;
    std::size_t other;
    std::size_t corner;
  };
  std::vector<std::vector<BigonEnd>> ends(nv);
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    const Face& face = s.faces[f];
    if (!face.is_bigon() || face.corners[0] == face.corners[1]) continue;
    const std::size_t u = face.corners[0];
    const std::size_t v = face.corners[1];
    ends[u].push_back({f, v, corner_of(s, u, f)});
    ends[v].push_back({f, u, corner_of(s, v, f)});
  }

  // Bigons chain end to end through opposite corners. A crossing with bigons
  // in both opposite pairs keeps the pair holding more of them (even pair on
  // ties).
  std::vector<std::size_t> parity(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    std::size_t even = 0, odd = 0;
    for (const auto& e : ends[v]) (e.corner % 2 == 0 ? even : odd) += 1;
    parity[v] = odd > even ? 1 : 0;
  }
  std::vector<std::vector<BigonEnd>> links(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    for (const auto& e : ends[v]) {
      if (e.corner % 2 != parity[v]) continue;
      const std::size_t back = corner_of(s, e.other, e.face);
      if (back % 2 != parity[e.other]) continue;
      links[v].push_back(e);
    }
  }

  std::vector<TwistRegion> regions;
  std::vector<TwistRegion> cycles;
  std::vector<bool> visited(nv, false);

  auto walk = [&](std::size_t start) {
    TwistRegion region;
    std::size_t prev_face = npos;
    std::size_t v = start;
    for (;;) {
      visited[v] = true;
      region.crossings.push_back(s.crossing_ids[v]);
      const BigonEnd* next = nullptr;
      for (const auto& e : links[v]) {
        if (e.face == prev_face) continue;
        next = &e;
        break;
      }
      if (next == nullptr) break;
      if (visited[next->other]) {
        region.bigons.push_back(next->face);
        break;
      }
      region.bigons.push_back(next->face);
      prev_face = next->face;
      v = next->other;
    }
    return region;
  };

  // Open chains start from an end; iterate vertices in crossing-id order.
  for (std::size_t v = 0; v < nv; ++v) {
    if (visited[v] || links[v].size() > 1) continue;
    regions.push_back(walk(v));
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (visited[v]) continue;
    cycles.push_back(walk(v));
  }

  auto by_min = [](const TwistRegion& a, const TwistRegion& b) {
    return *std::min_element(a.crossings.begin(), a.crossings.end()) <
           *std::min_element(b.crossings.begin(), b.crossings.end());
  };
  std::sort(regions.begin(), regions.end(), by_min);
  if (!cycles.empty()) throw CyclicBigonChain(std::move(regions), std::move(cycles));
  return regions;
}

std::vector<Cork> alternating_corks(const Diagram& d) {
  if (!is_alternating(d) || !is_reduced(d))
    throw NotAlternatingReduced("alternating corks need a reduced alternating diagram");
  std::vector<Cork> out;
  for (const auto& a : arcs(d)) out.push_back(Cork{a});
  return out;
}

Certificate tg_certificate(const Diagram& d) {
  require_knot(d, "the tg-hyperbolicity certificate");
  const CarterSurface s = trace_faces(d);
  Certificate cert;
  cert.genus = s.genus;
  cert.reasons = {
      {"alternating", is_alternating(d)},
      {"weakly_prime", is_weakly_prime(d)},
      {"reduced", is_reduced(s)},
      {"positive_genus", s.genus >= 1},
  };
  const bool all = std::all_of(cert.reasons.begin(), cert.reasons.end(), [](const auto& r) { return r.holds; });
  cert.verdict = all ? Verdict::CertifiedTgHyperbolic : Verdict::Unknown;
  return cert;
}

const char* to_string(Verdict v) noexcept {
  return v == Verdict::CertifiedTgHyperbolic ? "CertifiedTgHyperbolic" : "Unknown";
}

}  // namespace vknot
