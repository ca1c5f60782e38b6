#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vknot/analysis.hpp"
#include "vknot/gauss.hpp"
#include "vknot/surface.hpp"

namespace vknot {

/// A knot or link in a thickened surface together with a cork on one arc.
class Triple {
 public:
  /// The crossingless unknot with its only arc as cork.
  Triple();
  /// Declared genus defaults to the Carter genus of the diagram.
  Triple(Diagram diagram, Cork cork);
  /// Throws InvalidTriple when declared_genus exceeds the Carter genus.
  Triple(Diagram diagram, Cork cork, int declared_genus);

  const Diagram& diagram() const noexcept { return diagram_; }
  const Cork& cork() const noexcept { return cork_; }
  int declared_genus() const noexcept { return declared_genus_; }

 private:
  Diagram diagram_;
  Cork cork_;
  int declared_genus_;
};

enum class CompositionKind : std::uint8_t { Nonsingular, Singular };

const char* to_string(CompositionKind kind) noexcept;

struct CompositionResult {
  Diagram diagram;
  CompositionKind kind = CompositionKind::Nonsingular;
  int declared_genus = 0;
  std::pair<Triple, Triple> factors;
  bool orientation_matched = true;
  /// Arc of `diagram` where the two factors were joined (end of factor one).
  Arc seam;
  std::vector<std::string> warnings;
};

/// Cuts both diagrams open at the given arcs and joins the two strands into
/// one component. Crossing ids of `d2` are shifted past those of `d1`.
/// The joined component keeps the position of `a1`'s component; the other
/// components of `d1` keep theirs and those of `d2` follow.
Diagram splice(const Diagram& d1, const Arc& a1, const Diagram& d2, const Arc& a2);

/// Same as splice, also reporting the arc that closes factor one into factor two.
std::pair<Diagram, Arc> splice_with_seam(const Diagram& d1, const Arc& a1, const Diagram& d2, const Arc& a2);

/// Composition through the two corks. When both corks are singular the result
/// is still returned, annotated with a BothCorksSingular warning.
CompositionResult compose_nonsingular(const Triple& t1, const Triple& t2, bool orientation_matched = true);

/// Composition along singular curves through two singular corks; the declared
/// genus drops by one. Throws CorkNotSingular.
CompositionResult compose_singular(const Triple& t1, const Triple& t2);

/// Composition chosen by cork kinds: singular iff both corks are singular.
CompositionResult compose_auto(const Triple& t1, const Triple& t2, bool orientation_matched = true);

/// The triple reflected across a plane perpendicular to the projection plane.
Triple reflected(const Triple& t);

/// Nonsingular cork double. Throws CorkSingular.
CompositionResult double_nonsingular(const Triple& t);

/// Singular cork double. Throws CorkNotSingular.
CompositionResult double_singular(const Triple& t);

/// Result of inserting Reidemeister II pairs.
struct TwistInsertion {
  Diagram diagram;
  std::vector<CrossingId> inserted;  ///< in order along the host arc
  Arc partner;                       ///< arc of the input that the finger crossed
  Arc host_before;                   ///< arc of the output ending at the first inserted crossing
  Arc host_after;                    ///< arc of the output leaving the last inserted crossing
};

enum class FaceSide : std::uint8_t { Left, Right, Any };

/// Pushes a finger of the arc across a neighbouring strand of one of its
/// faces `n` times, alternating which strand is on top. The 2n new crossings
/// form a single twist region; the Carter surface and the knot type are
/// unchanged. `host_over_first` picks which strand crosses over in the first
/// pair. The finger never crosses an edge joining two crossings listed in
/// `avoid`. Throws InvalidArc and InvalidArgument (n == 0).
TwistInsertion add_twists(const Diagram& d, const Arc& arc, int n, bool host_over_first = true,
                          FaceSide side = FaceSide::Any, const std::vector<CrossingId>& avoid = {});

struct AugmentedLink {
  Diagram diagram;
  std::vector<std::size_t> augmenting_components;
  std::vector<int> half_twist_flags;  ///< one per augmenting component, 0 or 1
};

/// Adds a crossing circle around one crossing of the region, puncturing the
/// projection surface in the two corners not occupied by the region's bigons.
/// The circle reads Over, Over, Under, Under along its own occurrences.
AugmentedLink augment_twist_region(const Diagram& d, const TwistRegion& region, int half_twist_flag = 0);
AugmentedLink augment_twist_region(const AugmentedLink& link, const TwistRegion& region, int half_twist_flag = 0);

struct SequenceTerm {
  AugmentedLink augmented;          ///< base projection with every new region augmented
  CompositionResult composition;    ///< augmented link composed with the second factor
  std::vector<TwistRegion> regions; ///< the 2i regions that were augmented
  std::vector<int> region_crossings;  ///< crossing count of each region as drawn
  int twists_per_region = 0;          ///< 2j - 1 once one half twist is taken out
};

/// Member (i, j) of a family of tg-hyperbolic compositions whose volumes grow
/// without bound: 2i twist regions are grown on the first factor's cork arc
/// with j Reidemeister II pairs each, every region is augmented once with a
/// half-twist flag, and the result is composed with the second factor.
/// Throws NotCertifiedAlternating.
SequenceTerm infinite_volume_sequence(const Triple& t1, const Triple& t2, int i, int j);

}  // namespace vknot
