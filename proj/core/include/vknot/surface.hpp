#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// The four half-edges of a crossing.
enum class Slot : std::uint8_t { OverIn, OverOut, UnderIn, UnderOut };

/// Counterclockwise order of the half-edges at a crossing of the given sign.
///
/// A positive crossing has the over strand running SW to NE and the under
/// strand SE to NW, so counterclockwise from NE the half-edges are
/// OverOut, UnderOut, OverIn, UnderIn. A negative crossing swaps the two
/// under half-edges.
std::array<Slot, 4> ccw_rotation(Sign sign) noexcept;

/// A directed side of an edge. The face it belongs to lies on its left.
struct Dart {
  std::size_t edge = 0;
  bool forward = true;

  friend bool operator==(const Dart&, const Dart&) = default;
};

struct Face {
  std::vector<Dart> boundary;
  /// Crossing index at the corner entered after each boundary dart.
  std::vector<std::size_t> corners;

  std::size_t length() const noexcept { return boundary.size(); }
  bool is_bigon() const noexcept { return boundary.size() == 2; }
};

/// An edge of the diagram graph: the arc following an occurrence.
struct Edge {
  Arc arc;
  std::size_t tail = npos;  ///< crossing index, npos for a crossing-free circle
  std::size_t head = npos;
  Slot tail_slot = Slot::OverOut;
  Slot head_slot = Slot::OverIn;
};

/// The closed orientable surface obtained by gluing a disk to every boundary
/// cycle of the diagram's ribbon graph.
struct CarterSurface {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<Face> faces;
  int euler_characteristic = 2;
  int genus = 0;
  /// Connected pieces of the diagram graph; the surface has one per piece.
  std::size_t piece_count = 1;

  std::vector<CrossingId> crossing_ids;          ///< vertex index -> crossing id
  std::vector<std::array<Slot, 4>> rotations;    ///< vertex index -> ccw half-edge order
  std::vector<std::array<std::size_t, 4>> corner_faces;  ///< corner j lies between ccw slots j and j+1
  std::vector<Edge> edges;
  std::vector<std::size_t> dart_faces;           ///< 2*edge + (forward ? 0 : 1) -> face

  std::size_t face_of(const Dart& d) const { return dart_faces[2 * d.edge + (d.forward ? 0 : 1)]; }
  std::size_t left_face(std::size_t edge) const { return dart_faces[2 * edge]; }
  std::size_t right_face(std::size_t edge) const { return dart_faces[2 * edge + 1]; }
  std::size_t edge_of(const Arc& arc) const;
  std::size_t vertex_of(CrossingId id) const;
  /// Position (0..3) of a half-edge in the ccw rotation of a vertex.
  std::size_t slot_index(std::size_t vertex, Slot slot) const;
};

/// Throws DegenerateDiagram when empty components are mixed with others.
CarterSurface trace_faces(const Diagram& d);

int carter_genus(const Diagram& d);

enum class FaceColor : std::uint8_t { Black, White };

struct Coloring {
  std::vector<FaceColor> assignment;
};

/// Faces forming an odd closed walk in the face adjacency graph.
struct NotColorable {
  std::vector<std::size_t> odd_cycle;
};

std::variant<Coloring, NotColorable> checkerboard_coloring(const Diagram& d);
std::variant<Coloring, NotColorable> checkerboard_coloring(const CarterSurface& s);

/// An edge whose two sides lie on the same face. The dual loop through that
/// face meets the diagram once.
struct SingularWitness {
  std::size_t edge = 0;
  Arc arc;
  std::size_t face = 0;
};

std::vector<SingularWitness> find_singular_witnesses(const Diagram& d);
std::vector<SingularWitness> find_singular_witnesses(const CarterSurface& s);

struct Cork {
  Arc arc;

  friend bool operator==(const Cork&, const Cork&) = default;
};

enum class CorkKind : std::uint8_t { Singular, NonsingularAtDiagram };

struct CorkClassification {
  CorkKind kind = CorkKind::NonsingularAtDiagram;
  std::optional<SingularWitness> witness;

  bool singular() const noexcept { return kind == CorkKind::Singular; }
};

/// Diagram-level verdict: Singular iff the cork's arc is a singular witness.
CorkClassification classify_cork(const Diagram& d, const Cork& cork);
CorkClassification classify_cork(const Diagram& d, const CarterSurface& s, const Cork& cork);

const char* to_string(CorkKind kind) noexcept;

}  // namespace vknot
