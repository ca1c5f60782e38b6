#include "vknot/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "vknot/errors.hpp"

namespace vknot {

namespace {

struct HalfEdge {
  std::size_t edge = npos;
  bool is_tail = false;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

CarterSurface unknot_surface() {
  // A crossing-free circle on the sphere: two disks, one on each side.
  CarterSurface s;
  s.edges.push_back(Edge{Arc{0, 0}});
  s.faces.push_back(Face{{Dart{0, true}}, {}});
  s.faces.push_back(Face{{Dart{0, false}}, {}});
  s.dart_faces = {0, 1};
  s.euler_characteristic = 2;
  s.genus = 0;
  s.piece_count = 1;
  return s;
}

}  // namespace

std::array<Slot, 4> ccw_rotation(Sign sign) noexcept {
  if (sign == Sign::Positive) return {Slot::OverOut, Slot::UnderOut, Slot::OverIn, Slot::UnderIn};
  return {Slot::OverOut, Slot::UnderIn, Slot::OverIn, Slot::UnderOut};
}

std::size_t CarterSurface::edge_of(const Arc& arc) const {
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges[e].arc == arc) return e;
  throw InvalidArc("arc " + format_arc(arc) + " is not in the diagram");
}

std::size_t CarterSurface::vertex_of(CrossingId id) const {
  auto it = std::lower_bound(crossing_ids.begin(), crossing_ids.end(), id);
  if (it == crossing_ids.end() || *it != id) throw InvalidArgument("no crossing " + std::to_string(id));
  return static_cast<std::size_t>(it - crossing_ids.begin());
}

std::size_t CarterSurface::slot_index(std::size_t vertex, Slot slot) const {
  const auto& rot = rotations[vertex];
  return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), slot) - rot.begin());
}

CarterSurface trace_faces(const Diagram& d) {
  const auto& comps = d.components();
  if (d.has_empty_component()) {
    if (comps.size() == 1) return unknot_surface();
    throw DegenerateDiagram("a zero-crossing component cannot be placed alongside other components");
  }

  CarterSurface s;
  std::map<CrossingId, Sign> signs;
  for (const auto& c : comps)
    for (const auto& occ : c) signs[occ.id] = occ.sign;
  for (const auto& [id, sign] : signs) {
    s.crossing_ids.push_back(id);
    s.rotations.push_back(ccw_rotation(sign));
  }
  const std::size_t nv = s.crossing_ids.size();
  s.vertex_count = nv;

  std::vector<std::array<HalfEdge, 4>> half_edges(nv);  // indexed by Slot value
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& c = comps[ci];
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto& from = c[k];
      const auto& to = c[(k + 1) % c.size()];
      Edge e;
      e.arc = Arc{ci, k};
      e.tail = s.vertex_of(from.id);
      e.head = s.vertex_of(to.id);
      e.tail_slot = from.passage == Passage::Over ? Slot::OverOut : Slot::UnderOut;
      e.head_slot = to.passage == Passage::Over ? Slot::OverIn : Slot::UnderIn;
      const std::size_t idx = s.edges.size();
      half_edges[e.tail][static_cast<std::size_t>(e.tail_slot)] = HalfEdge{idx, true};
      half_edges[e.head][static_cast<std::size_t>(e.head_slot)] = HalfEdge{idx, false};
      s.edges.push_back(e);
    }
  }
  s.edge_count = s.edges.size();

  auto leaving = [&](std::size_t v, Slot slot) {
    const HalfEdge& h = half_edges[v][static_cast<std::size_t>(slot)];
    return Dart{h.edge, h.is_tail};
  };

  s.dart_faces.assign(2 * s.edge_count, npos);
  s.corner_faces.assign(nv, {npos, npos, npos, npos});
  for (std::size_t start = 0; start < 2 * s.edge_count; ++start) {
    if (s.dart_faces[start] != npos) continue;
    const std::size_t face_index = s.faces.size();
    Face face;
    Dart dart{start / 2, start % 2 == 0};
    for (;;) {
      const std::size_t key = 2 * dart.edge + (dart.forward ? 0 : 1);
      if (s.dart_faces[key] != npos) break;
      s.dart_faces[key] = face_index;
      face.boundary.push_back(dart);
      const Edge& e = s.edges[dart.edge];
      const std::size_t v = dart.forward ? e.head : e.tail;
      const Slot arrival = dart.forward ? e.head_slot : e.tail_slot;
      const std::size_t idx = s.slot_index(v, arrival);
      // Keep the face on the left: leave through the clockwise neighbour.
      const std::size_t corner = (idx + 3) % 4;
      s.corner_faces[v][corner] = face_index;
      face.corners.push_back(v);
      dart = leaving(v, s.rotations[v][corner]);
    }
    s.faces.push_back(std::move(face));
  }

  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& e : s.edges) parent[find_root(parent, e.tail)] = find_root(parent, e.head);
  std::size_t pieces = 0;
  for (std::size_t v = 0; v < nv; ++v)
    if (find_root(parent, v) == v) ++pieces;
  s.piece_count = pieces;

  s.euler_characteristic = static_cast<int>(nv) - static_cast<int>(s.edge_count) + static_cast<int>(s.faces.size());
  s.genus = (2 * static_cast<int>(pieces) - s.euler_characteristic) / 2;
  return s;
}

int carter_genus(const Diagram& d) { return trace_faces(d).genus; }

std::variant<Coloring, NotColorable> checkerboard_coloring(const Diagram& d) {
  return checkerboard_coloring(trace_faces(d));
}

std::variant<Coloring, NotColorable> checkerboard_coloring(const CarterSurface& s) {
  const std::size_t nf = s.faces.size();
  std::vector<std::vector<std::size_t>> adjacent(nf);
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    const std::size_t l = s.left_face(e);
    const std::size_t r = s.right_face(e);
    if (l == r) return NotColorable{{l}};
    adjacent[l].push_back(r);
    adjacent[r].push_back(l);
  }

  std::vector<int> color(nf, -1);
  std::vector<std::size_t> parent(nf, npos);
  std::vector<std::size_t> depth(nf, 0);
  for (std::size_t root = 0; root < nf; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t f = queue.front();
      queue.pop();
      for (std::size_t g : adjacent[f]) {
        if (color[g] == -1) {
          color[g] = 1 - color[f];
          parent[g] = f;
          depth[g] = depth[f] + 1;
          queue.push(g);
        } else if (color[g] == color[f]) {
          // Walk both tree paths up to their meeting point.
          std::vector<std::size_t> left{f}, right{g};
          std::size_t a = f, b = g;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          return NotColorable{std::move(left)};
        }
      }
    }
  }
  Coloring out;
  out.assignment.reserve(nf);
  for (int c : color) out.assignment.push_back(c == 0 ? FaceColor::Black : FaceColor::White);
  return out;
}

std::vector<SingularWitness> find_singular_witnesses(const Diagram& d) {
  return find_singular_witnesses(trace_faces(d));
}

std::vector<SingularWitness> find_singular_witnesses(const CarterSurface& s) {
  std::vector<SingularWitness> out;
  if (s.vertex_count == 0) return out;
  for (std::size_t e = 0; e < s.edges.size(); ++e)
    if (s.left_face(e) == s.right_face(e)) out.push_back(SingularWitness{e, s.edges[e].arc, s.left_face(e)});
  return out;
}

CorkClassification classify_cork(const Diagram& d, const Cork& cork) {
  require_arc(d, cork.arc);
  return classify_cork(d, trace_faces(d), cork);
}

CorkClassification classify_cork(const Diagram& d, const CarterSurface& s, const Cork& cork) {
  require_arc(d, cork.arc);
  if (s.vertex_count == 0) return {};
  const std::size_t e = s.edge_of(cork.arc);
  if (s.left_face(e) != s.right_face(e)) return {};
  return CorkClassification{CorkKind::Singular, SingularWitness{e, cork.arc, s.left_face(e)}};
}

const char* to_string(CorkKind kind) noexcept {
  return kind == CorkKind::Singular ? "Singular" : "NonsingularAtDiagram";
}

}  // namespace vknot
