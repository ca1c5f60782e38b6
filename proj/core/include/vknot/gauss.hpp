#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vknot {

using CrossingId = std::uint32_t;

enum class Sign : std::int8_t { Positive = 1, Negative = -1 };
enum class Passage : std::uint8_t { Over = 0, Under = 1 };

constexpr Sign flip(Sign s) noexcept { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
constexpr Passage flip(Passage p) noexcept { return p == Passage::Over ? Passage::Under : Passage::Over; }

/// One passage of the curve through a classical crossing.
struct Occurrence {
  CrossingId id = 0;
  Passage passage = Passage::Over;
  Sign sign = Sign::Positive;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Canonical token order: passage (O before U), then id, then sign ('+' before '-').
std::strong_ordering compare_tokens(const Occurrence& a, const Occurrence& b) noexcept;

using Component = std::vector<Occurrence>;

/// Gap following occurrence `position` of `component`. A zero-crossing
/// component has a single arc at position 0.
struct Arc {
  std::size_t component = 0;
  std::size_t position = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A virtual link diagram recorded as a multi-component signed Gauss code.
/// Virtual crossings are implicit. Every instance satisfies the pairing and
/// sign invariants; construction through `from_components` validates them.
class Diagram {
 public:
  /// The zero-crossing unknot (one empty component).
  Diagram();

  static Diagram from_components(std::vector<Component> components);

  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t component_count() const noexcept { return components_.size(); }
  std::size_t crossing_count() const noexcept;
  std::size_t occurrence_count() const noexcept { return 2 * crossing_count(); }
  CrossingId max_id() const noexcept;
  bool has_empty_component() const noexcept;

  /// Every component started at its lexicographically minimal rotation.
  Diagram canonical() const;

  /// Equality up to cyclic rotation of each component (component order matters).
  friend bool operator==(const Diagram& a, const Diagram& b);

 private:
  explicit Diagram(std::vector<Component> components) : components_(std::move(components)) {}

  std::vector<Component> components_;
};

/// Throws SyntaxError, PairingError or SignError.
Diagram parse(std::string_view text);

/// Canonical text form: components joined by '/', each at its minimal rotation.
std::string serialize(const Diagram& d);

/// Text of a single component exactly as stored (no rotation).
std::string format_component(const Component& c);

/// Reflection across a plane perpendicular to the projection plane:
/// all signs flip; passages and cyclic order are kept.
Diagram mirror_reflect(const Diagram& d);

/// Reverses the traversal direction of one component. Crossings shared with
/// a different component change sign; self-crossings keep theirs.
Diagram reverse_orientation(const Diagram& d, std::size_t component);

/// Position of `arc` after reversing its component.
Arc reversed_arc(const Diagram& d, const Arc& arc);

/// All arcs in component order; a component with k occurrences gives max(k, 1).
std::vector<Arc> arcs(const Diagram& d);

bool is_valid_arc(const Diagram& d, const Arc& arc) noexcept;

/// Throws InvalidArc when `arc` does not address a gap of `d`.
void require_arc(const Diagram& d, const Arc& arc);

/// "component:position"
std::string format_arc(const Arc& arc);

/// Accepts "component:position" or a bare position (component 0).
Arc parse_arc(std::string_view text);

/// Index of the rotation that makes `c` lexicographically minimal.
std::size_t minimal_rotation(const Component& c);

}  // namespace vknot
