#pragma once

#include <string>
#include <vector>

#include "vknot/errors.hpp"
#include "vknot/gauss.hpp"
#include "vknot/surface.hpp"

namespace vknot {

/// True iff passages strictly alternate O,U,O,U,... around every component.
bool is_alternating(const Diagram& d);

/// No crossing has two opposite corners on one face (no nugatory crossing).
bool is_reduced(const Diagram& d);
bool is_reduced(const CarterSurface& s);

/// A cyclic run of occurrences in which every crossing appearing has both of
/// its occurrences. Such a run is the Gauss code of one side of a separating
/// curve that meets the knot twice.
struct ClosedInterval {
  std::size_t start = 0;   ///< index of first occurrence
  std::size_t length = 0;  ///< number of occurrences, 0 < length < total
  int genus = 0;           ///< Carter genus of the run read as its own code
};

/// Every proper closed cyclic interval of a knot code. Throws
/// MultiComponentUnsupported for links.
std::vector<ClosedInterval> closed_intervals(const Diagram& d);

/// No disk on the Carter surface contains crossings while its boundary meets
/// the projection exactly twice. A closed interval bounds such a disk exactly
/// when its own code is classical (genus 0). Knots only.
bool is_weakly_prime(const Diagram& d);

struct TwistRegion {
  std::vector<CrossingId> crossings;
  std::vector<std::size_t> bigons;  ///< face indices, bigons[k] joins crossings[k] and crossings[k+1]

  friend bool operator==(const TwistRegion&, const TwistRegion&) = default;
};

/// Raised when chains of end-to-end bigons close up on themselves. The
/// regions that do form open chains are still reported.
class CyclicBigonChain : public Error {
 public:
  CyclicBigonChain(std::vector<TwistRegion> regions, std::vector<TwistRegion> cycles);

  const std::vector<TwistRegion>& regions() const noexcept { return regions_; }
  const std::vector<TwistRegion>& cycles() const noexcept { return cycles_; }

 private:
  std::vector<TwistRegion> regions_;
  std::vector<TwistRegion> cycles_;
};

/// Maximal chains of end-to-end bigons; crossings touching no usable bigon
/// form regions of length one. Regions are ordered by their smallest crossing.
std::vector<TwistRegion> twist_regions(const Diagram& d);
std::vector<TwistRegion> twist_regions(const Diagram& d, const CarterSurface& s);

/// Every arc of a reduced alternating diagram. Throws NotAlternatingReduced.
std::vector<Cork> alternating_corks(const Diagram& d);

enum class Verdict : std::uint8_t { CertifiedTgHyperbolic, Unknown };

struct PredicateResult {
  std::string name;
  bool holds = false;
};

struct Certificate {
  Verdict verdict = Verdict::Unknown;
  std::vector<PredicateResult> reasons;
  int genus = 0;

  bool certified() const noexcept { return verdict == Verdict::CertifiedTgHyperbolic; }
};

/// Alternating, weakly prime, reduced and of positive Carter genus. A
/// certified knot is tg-hyperbolic and its Carter genus is its genus.
Certificate tg_certificate(const Diagram& d);

const char* to_string(Verdict v) noexcept;

}  // namespace vknot
