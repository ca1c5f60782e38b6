#include "vknot/composition.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace vknot {

namespace {

// The component read from the occurrence after the gap round to the one before it.
Component cut_open(const Component& c, std::size_t gap) {
  Component out;
  out.reserve(c.size());
  for (std::size_t k = 1; k <= c.size(); ++k) out.push_back(c[(gap + k) % c.size()]);
  return out;
}

Diagram shift_ids(const Diagram& d, CrossingId offset) {
  auto comps = d.components();
  for (auto& c : comps)
    for (auto& occ : c) occ.id += offset;
  return Diagram::from_components(std::move(comps));
}

bool traceable(const Diagram& d) { return d.component_count() == 1 || !d.has_empty_component(); }

void note_genus_mismatch(CompositionResult& r) {
  if (!traceable(r.diagram)) return;
  const int g = carter_genus(r.diagram);
  if (g != r.declared_genus)
    r.warnings.push_back("CarterGenusDiffers: diagram supports genus " + std::to_string(g) + ", declared " +
                         std::to_string(r.declared_genus));
}

// Corner parity (0 for corners 0/2, 1 for corners 1/3) of bigons joining
// vertices v and w, or npos when there is none.
std::size_t bigon_parity(const CarterSurface& s, std::size_t v, std::size_t w) {
  for (std::size_t j = 0; j < 4; ++j) {
    const Face& f = s.faces[s.corner_faces[v][j]];
    if (!f.is_bigon()) continue;
    if ((f.corners[0] == v && f.corners[1] == w) || (f.corners[0] == w && f.corners[1] == v)) return j % 2;
  }
  return npos;
}

}  // namespace

Triple::Triple() : Triple(Diagram{}, Cork{}) {}

Triple::Triple(Diagram diagram, Cork cork) : diagram_(std::move(diagram)), cork_(cork) {
  require_arc(diagram_, cork_.arc);
  declared_genus_ = carter_genus(diagram_);
}

Triple::Triple(Diagram diagram, Cork cork, int declared_genus)
    : diagram_(std::move(diagram)), cork_(cork), declared_genus_(declared_genus) {
  require_arc(diagram_, cork_.arc);
  if (declared_genus_ < 0) throw InvalidTriple("declared genus must be nonnegative");
  if (traceable(diagram_) && declared_genus_ > carter_genus(diagram_))
    throw InvalidTriple("declared genus exceeds the Carter genus of the diagram");
}

const char* to_string(CompositionKind kind) noexcept {
  return kind == CompositionKind::Singular ? "Singular" : "Nonsingular";
}

std::pair<Diagram, Arc> splice_with_seam(const Diagram& d1, const Arc& a1, const Diagram& d2, const Arc& a2) {
  require_arc(d1, a1);
  require_arc(d2, a2);
  const Diagram shifted = shift_ids(d2, d1.max_id());

  Component joined = cut_open(d1.components()[a1.component], a1.position);
  const std::size_t first_len = joined.size();
  const Component second = cut_open(shifted.components()[a2.component], a2.position);
  joined.insert(joined.end(), second.begin(), second.end());

  std::vector<Component> comps = d1.components();
  comps[a1.component] = joined;
  for (std::size_t c = 0; c < shifted.component_count(); ++c)
    if (c != a2.component) comps.push_back(shifted.components()[c]);

  const std::size_t seam = first_len == 0 ? (joined.empty() ? 0 : joined.size() - 1) : first_len - 1;
  return {Diagram::from_components(std::move(comps)), Arc{a1.component, seam}};
}

Diagram splice(const Diagram& d1, const Arc& a1, const Diagram& d2, const Arc& a2) {
  return splice_with_seam(d1, a1, d2, a2).first;
}

CompositionResult compose_nonsingular(const Triple& t1, const Triple& t2, bool orientation_matched) {
  const auto k1 = classify_cork(t1.diagram(), t1.cork());
  const auto k2 = classify_cork(t2.diagram(), t2.cork());

  Diagram d2 = t2.diagram();
  Arc a2 = t2.cork().arc;
  if (!orientation_matched) {
    a2 = reversed_arc(d2, a2);
    d2 = reverse_orientation(d2, t2.cork().arc.component);
  }
  auto [diagram, seam] = splice_with_seam(t1.diagram(), t1.cork().arc, d2, a2);
  CompositionResult r{std::move(diagram), CompositionKind::Nonsingular,
                      t1.declared_genus() + t2.declared_genus(), {t1, t2}, orientation_matched, seam, {}};
  if (k1.singular() && k2.singular())
    r.warnings.push_back("BothCorksSingular: both corks are singular; composing nonsingularly on request");
  note_genus_mismatch(r);
  return r;
}

CompositionResult compose_singular(const Triple& t1, const Triple& t2) {
  if (!classify_cork(t1.diagram(), t1.cork()).singular())
    throw CorkNotSingular("cork of the first factor is not singular");
  if (!classify_cork(t2.diagram(), t2.cork()).singular())
    throw CorkNotSingular("cork of the second factor is not singular");
  auto [diagram, seam] = splice_with_seam(t1.diagram(), t1.cork().arc, t2.diagram(), t2.cork().arc);
  CompositionResult r{std::move(diagram), CompositionKind::Singular,
                      t1.declared_genus() + t2.declared_genus() - 1, {t1, t2}, true, seam, {}};
  note_genus_mismatch(r);
  return r;
}

CompositionResult compose_auto(const Triple& t1, const Triple& t2, bool orientation_matched) {
  const bool both = classify_cork(t1.diagram(), t1.cork()).singular() &&
                    classify_cork(t2.diagram(), t2.cork()).singular();
  if (both && orientation_matched) return compose_singular(t1, t2);
  if (both) {
    // Reversal preserves the ribbon structure, so the reversed cork stays singular.
    const Arc a2 = reversed_arc(t2.diagram(), t2.cork().arc);
    Triple flipped(reverse_orientation(t2.diagram(), t2.cork().arc.component), Cork{a2}, t2.declared_genus());
    auto r = compose_singular(t1, flipped);
    r.factors.second = t2;
    r.orientation_matched = false;
    return r;
  }
  return compose_nonsingular(t1, t2, orientation_matched);
}

Triple reflected(const Triple& t) { return Triple(mirror_reflect(t.diagram()), t.cork(), t.declared_genus()); }

CompositionResult double_nonsingular(const Triple& t) {
  if (classify_cork(t.diagram(), t.cork()).singular()) throw CorkSingular("cork is singular");
  return compose_nonsingular(t, reflected(t), true);
}

CompositionResult double_singular(const Triple& t) {
  if (!classify_cork(t.diagram(), t.cork()).singular()) throw CorkNotSingular("cork is not singular");
  return compose_singular(t, reflected(t));
}

TwistInsertion add_twists(const Diagram& d, const Arc& arc, int n, bool host_over_first, FaceSide side,
                          const std::vector<CrossingId>& avoid) {
  require_arc(d, arc);
  if (n <= 0) throw InvalidArgument("number of Reidemeister II pairs must be positive");
  const std::size_t count = 2 * static_cast<std::size_t>(n);
  const CrossingId base = d.max_id();

  auto host_over = [&](std::size_t i) {  // i is 0-based along the finger
    return ((i / 2) % 2 == 0) == host_over_first;
  };
  // Local frame: host dart runs along +x with the face above it, partner dart
  // runs along -x above the face. At the (i+1)-th crossing the host climbs
  // when i is even. The sign is the orientation of (over, under).
  auto sign_at = [&](std::size_t i, int host_dir, int partner_dir) {
    const int climb = i % 2 == 0 ? 1 : -1;
    const int s = (host_over(i) ? 1 : -1) * host_dir * partner_dir * climb;
    return s > 0 ? Sign::Positive : Sign::Negative;
  };
  auto blocks = [&](int host_dir, int partner_dir) {
    Component host, partner;
    for (std::size_t i = 0; i < count; ++i) {
      const Sign sg = sign_at(i, host_dir, partner_dir);
      const bool over = host_over(i);
      host.push_back({base + static_cast<CrossingId>(i + 1), over ? Passage::Over : Passage::Under, sg});
      partner.push_back({base + static_cast<CrossingId>(i + 1), over ? Passage::Under : Passage::Over, sg});
    }
    // host dart order is x1..x2n, partner dart order is x2n..x1
    std::reverse(partner.begin(), partner.end());
    if (host_dir < 0) std::reverse(host.begin(), host.end());
    if (partner_dir < 0) std::reverse(partner.begin(), partner.end());
    return std::pair{host, partner};
  };
  auto inserted_ids = [&](const Component& host) {
    std::vector<CrossingId> ids;
    for (const auto& occ : host) ids.push_back(occ.id);
    return ids;
  };

  TwistInsertion out;
  const Component& host_comp = d.components()[arc.component];
  if (host_comp.empty()) {
    if (d.component_count() != 1)
      throw DegenerateDiagram("a zero-crossing component cannot be placed alongside other components");
    // The circle folds over itself inside the disk it bounds.
    auto [host, partner] = blocks(1, 1);
    Component joined = host;
    joined.insert(joined.end(), partner.begin(), partner.end());
    out.inserted = inserted_ids(host);
    out.partner = arc;
    out.host_before = Arc{0, joined.size() - 1};
    out.host_after = Arc{0, host.size() - 1};
    out.diagram = Diagram::from_components({std::move(joined)});
    return out;
  }

  const CarterSurface s = trace_faces(d);
  const std::size_t edge = s.edge_of(arc);

  // Pick the neighbouring strand: prefer a different edge that does not share
  // a corner with the host on the face, then an adjacent edge, then the other
  // side of the host edge itself.
  struct Choice {
    int tier;
    int face_rank;
    std::size_t offset;
    Dart host;
    Dart partner;
  };
  std::optional<Choice> best;
  auto avoided = [&](std::size_t v) {
    return std::find(avoid.begin(), avoid.end(), s.crossing_ids[v]) != avoid.end();
  };
  const std::vector<std::pair<Dart, int>> candidates = [&] {
    std::vector<std::pair<Dart, int>> c;
    if (side != FaceSide::Right) c.push_back({Dart{edge, true}, 0});
    if (side != FaceSide::Left) c.push_back({Dart{edge, false}, side == FaceSide::Any ? 1 : 0});
    return c;
  }();
  for (const auto& [host, rank] : candidates) {
    const Face& face = s.faces[s.face_of(host)];
    const std::size_t len = face.length();
    const auto it = std::find(face.boundary.begin(), face.boundary.end(), host);
    const std::size_t ih = static_cast<std::size_t>(it - face.boundary.begin());
    for (std::size_t o = 1; o < len; ++o) {
      const Dart partner = face.boundary[(ih + o) % len];
      const Edge& pe = s.edges[partner.edge];
      if (avoided(pe.tail) && avoided(pe.head)) continue;
      int tier = 1;
      if (partner.edge == edge) {
        tier = 3;
      } else if (o == 1 || o == len - 1) {
        tier = 2;
      }
      Choice c{tier, rank, o, host, partner};
      if (!best || std::tie(c.tier, c.face_rank, c.offset) < std::tie(best->tier, best->face_rank, best->offset))
        best = c;
    }
  }
  if (!best) throw InvalidArc("arc " + format_arc(arc) + " has no neighbouring strand to twist with");

  const int host_dir = best->host.forward ? 1 : -1;
  const int partner_dir = best->partner.forward ? 1 : -1;
  auto [host, partner] = blocks(host_dir, partner_dir);
  out.inserted = inserted_ids(host);
  out.partner = s.edges[best->partner.edge].arc;

  // Collect insertions per gap; on a shared gap the host block comes first.
  std::map<std::pair<std::size_t, std::size_t>, Component> pending;
  auto key = [](const Arc& a) { return std::pair{a.component, a.position}; };
  pending[key(arc)] = host;
  auto& tail = pending[key(out.partner)];
  tail.insert(tail.end(), partner.begin(), partner.end());

  std::vector<Component> comps;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    const Component& src = d.components()[c];
    Component dst;
    for (std::size_t k = 0; k < src.size(); ++k) {
      dst.push_back(src[k]);
      if (c == arc.component && k == arc.position) {
        out.host_before = Arc{c, dst.size() - 1};
        out.host_after = Arc{c, dst.size() - 1 + host.size()};
      }
      if (auto it = pending.find({c, k}); it != pending.end()) dst.insert(dst.end(), it->second.begin(), it->second.end());
    }
    comps.push_back(std::move(dst));
  }
  out.diagram = Diagram::from_components(std::move(comps));
  return out;
}

AugmentedLink augment_twist_region(const Diagram& d, const TwistRegion& region, int half_twist_flag) {
  return augment_twist_region(AugmentedLink{d, {}, {}}, region, half_twist_flag);
}

AugmentedLink augment_twist_region(const AugmentedLink& link, const TwistRegion& region, int half_twist_flag) {
  if (region.crossings.empty()) throw InvalidRegion("twist region has no crossings");
  if (half_twist_flag != 0 && half_twist_flag != 1) throw InvalidArgument("half-twist flag must be 0 or 1");
  const Diagram& d = link.diagram;
  if (d.has_empty_component()) throw InvalidRegion("diagram has a zero-crossing component");
  const CarterSurface s = trace_faces(d);
  std::size_t v = npos;
  try {
    v = s.vertex_of(region.crossings.front());
  } catch (const InvalidArgument&) {
    throw InvalidRegion("twist region crossing " + std::to_string(region.crossings.front()) + " is not in the diagram");
  }

  // Puncture the corner pair not used by the region's bigons at v. For a lone
  // crossing take the pair with fewer bigons, odd corners on ties.
  std::size_t punctured = 1;
  if (region.crossings.size() > 1) {
    std::size_t w = npos;
    try {
      w = s.vertex_of(region.crossings[1]);
    } catch (const InvalidArgument&) {
      throw InvalidRegion("twist region crossing " + std::to_string(region.crossings[1]) + " is not in the diagram");
    }
    const std::size_t p = bigon_parity(s, v, w);
    if (p == npos) throw InvalidRegion("twist region crossings are not joined by a bigon");
    punctured = 1 - p;
  } else {
    std::size_t bigons[2] = {0, 0};
    for (std::size_t j = 0; j < 4; ++j) {
      const Face& f = s.faces[s.corner_faces[v][j]];
      if (f.is_bigon() && f.corners[0] != f.corners[1]) ++bigons[j % 2];
    }
    punctured = bigons[0] < bigons[1] ? 0 : 1;
  }
  // Circle crosses slots j, j+1 over and j+2, j+3 under, so it meets the
  // surface in corners j+1 and j+3.
  const std::size_t first = punctured == 1 ? 0 : 3;

  const CrossingId base = d.max_id();
  Component circle;
  // gap -> (insertions at its start, insertions at its end)
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Component, Component>> pending;
  for (std::size_t k = 0; k < 4; ++k) {
    const Slot slot = s.rotations[v][(first + k) % 4];
    const bool circle_over = k < 2;
    const Edge* edge = nullptr;
    bool outgoing = false;
    for (const auto& e : s.edges) {
      if (e.tail == v && e.tail_slot == slot) {
        edge = &e;
        outgoing = true;
        break;
      }
      if (e.head == v && e.head_slot == slot) {
        edge = &e;
        break;
      }
    }
    // Circle runs counterclockwise around the crossing.
    const bool positive = circle_over ? !outgoing : outgoing;
    const Sign sign = positive ? Sign::Positive : Sign::Negative;
    const CrossingId id = base + static_cast<CrossingId>(k + 1);
    circle.push_back({id, circle_over ? Passage::Over : Passage::Under, sign});
    const Occurrence strand{id, circle_over ? Passage::Under : Passage::Over, sign};
    auto& slot_lists = pending[{edge->arc.component, edge->arc.position}];
    (outgoing ? slot_lists.first : slot_lists.second).push_back(strand);
  }

  std::vector<Component> comps;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    const Component& src = d.components()[c];
    Component dst;
    for (std::size_t k = 0; k < src.size(); ++k) {
      dst.push_back(src[k]);
      if (auto it = pending.find({c, k}); it != pending.end()) {
        dst.insert(dst.end(), it->second.first.begin(), it->second.first.end());
        dst.insert(dst.end(), it->second.second.begin(), it->second.second.end());
      }
    }
    comps.push_back(std::move(dst));
  }
  comps.push_back(std::move(circle));

  AugmentedLink out{Diagram::from_components(std::move(comps)), link.augmenting_components, link.half_twist_flags};
  out.augmenting_components.push_back(out.diagram.component_count() - 1);
  out.half_twist_flags.push_back(half_twist_flag);
  return out;
}

SequenceTerm infinite_volume_sequence(const Triple& t1, const Triple& t2, int i, int j) {
  if (i <= 0 || j <= 0) throw InvalidArgument("sequence indices must be positive");
  if (!tg_certificate(t1.diagram()).certified())
    throw NotCertifiedAlternating("first factor is not a certified alternating diagram");
  if (!tg_certificate(t2.diagram()).certified())
    throw NotCertifiedAlternating("second factor is not a certified alternating diagram");

  const Arc cork = t1.cork().arc;
  const Component& code = t1.diagram().components()[cork.component];
  const Occurrence cork_head = code[(cork.position + 1) % code.size()];

  // Grow the regions one after another along the cork arc. No finger crosses
  // an earlier region.
  Diagram current = t1.diagram();
  Arc along = cork;
  std::vector<std::vector<CrossingId>> grown;
  std::vector<CrossingId> taken;
  for (int r = 0; r < 2 * i; ++r) {
    auto ins = add_twists(current, along, j, true, FaceSide::Any, taken);
    taken.insert(taken.end(), ins.inserted.begin(), ins.inserted.end());
    current = std::move(ins.diagram);
    along = ins.host_after;
    grown.push_back(std::move(ins.inserted));
  }

  std::vector<TwistRegion> found;
  try {
    found = twist_regions(current);
  } catch (const CyclicBigonChain& e) {
    found = e.regions();
  }

  SequenceTerm term;
  term.twists_per_region = 2 * j - 1;
  AugmentedLink link{current, {}, {}};
  for (const auto& ids : grown) {
    auto it = std::find_if(found.begin(), found.end(), [&](const TwistRegion& reg) {
      return std::find(reg.crossings.begin(), reg.crossings.end(), ids.front()) != reg.crossings.end();
    });
    if (it == found.end()) throw InvalidRegion("grown twist region was absorbed into a bigon cycle");
    term.regions.push_back(*it);
    term.region_crossings.push_back(static_cast<int>(it->crossings.size()));
    link = augment_twist_region(link, *it, 1);
  }

  // The cork is the piece of the original cork arc that ends at its head crossing.
  const Component& grown_code = link.diagram.components()[cork.component];
  const auto head = std::find(grown_code.begin(), grown_code.end(), cork_head);
  const std::size_t head_index = static_cast<std::size_t>(head - grown_code.begin());
  const Arc new_cork{cork.component, (head_index + grown_code.size() - 1) % grown_code.size()};

  term.composition = compose_nonsingular(Triple(link.diagram, Cork{new_cork}), t2, true);
  term.augmented = std::move(link);
  return term;
}

}  // namespace vknot
