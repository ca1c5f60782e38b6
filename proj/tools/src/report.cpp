#include "vknot_tools/report.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vknot/catalog.hpp"

namespace vknot::tools {

namespace {

Json arc_list(const std::vector<Arc>& arcs) {
  Json out = Json::array();
  for (const auto& a : arcs) out.push_back(format_arc(a));
  return out;
}

Json regions_json(const std::vector<TwistRegion>& regions) {
  Json out = Json::array();
  for (const auto& r : regions) out.push_back(r.crossings);
  return out;
}

Json bound_json(const BoundReport& b) {
  Json out;
  out["theorem"] = to_string(b.theorem);
  out["lower_bound"] = real_json(b.lower_bound);
  out["exact"] = b.exact;
  out["hypotheses"] = b.hypotheses;
  out["inputs"] = b.inputs;
  return out;
}

Json composition_json(const CompositionResult& r) {
  Json out;
  out["kind"] = to_string(r.kind);
  out["diagram"] = serialize(r.diagram);
  out["crossings"] = r.diagram.crossing_count();
  out["components"] = r.diagram.component_count();
  out["declared_genus"] = r.declared_genus;
  out["carter_genus"] = carter_genus(r.diagram);
  out["orientation_matched"] = r.orientation_matched;
  out["seam"] = format_arc(r.seam);
  return out;
}

// Catalog name whose code has the same canonical form, if any.
std::optional<std::string> catalog_name(const Diagram& d) {
  const std::string code = serialize(d);
  for (const auto& k : catalog())
    if (serialize(parse(k.code)) == code) return k.name;
  return std::nullopt;
}

const VolumeEntry* table_entry(const std::vector<VolumeEntry>& table, const Triple& t, int which,
                               std::vector<std::string>& warnings) {
  const auto name = catalog_name(t.diagram());
  const bool singular = classify_cork(t.diagram(), t.cork()).singular();
  const std::string id = name ? *name + (singular ? "-singular" : "-nonsingular") : std::string();
  const VolumeEntry* e = name ? find_entry(table, id) : nullptr;
  if (e == nullptr)
    warnings.push_back("TableMiss: no volume entry for factor " + std::to_string(which) +
                       (name ? " (looked for " + id + ")" : ""));
  return e;
}

void add_bound(Report& r, const std::vector<VolumeEntry>& table, const Triple& t1, const Triple& t2) {
  const VolumeEntry* e1 = table_entry(table, t1, 1, r.warnings);
  const VolumeEntry* e2 = table_entry(table, t2, 2, r.warnings);
  r.results["bound"] = (e1 && e2) ? bound_json(bound_report(t1, *e1, t2, *e2)) : Json(nullptr);
}

void render_value(std::ostringstream& out, const Json& v, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const std::string key = v.is_object() ? it.key() : "-";
    const Json& x = *it;
    const bool nested = (x.is_object() && !x.empty()) ||
                        (x.is_array() && !x.empty() && (x.front().is_object() || x.front().is_array()));
    if (nested) {
      out << pad << key << ":\n";
      render_value(out, x, depth + 1);
    } else if (x.is_string()) {
      out << pad << key << ": " << x.get<std::string>() << "\n";
    } else {
      out << pad << key << ": " << x.dump() << "\n";
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

Json real_json(Real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", x);
  return std::strtod(buf, nullptr);
}

std::string render_json(const Report& r) {
  Json doc;
  doc["command"] = r.command;
  doc["inputs"] = r.inputs;
  doc["results"] = r.results;
  doc["warnings"] = r.warnings;
  return doc.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  render_value(out, r.results, 0);
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

Diagram resolve_diagram(const std::string& input) {
  if (!input.empty() && input.front() == '@') return parse(read_file(input.substr(1))).canonical();
  if (!input.empty() && std::isdigit(static_cast<unsigned char>(input.front()))) {
    auto d = catalog_diagram(input);
    if (!d) throw InvalidArgument("no catalog knot named " + input);
    return d->canonical();
  }
  return parse(input).canonical();
}

std::vector<VolumeEntry> resolve_table(const std::optional<std::string>& path) {
  return path ? load_table_file(*path) : builtin_table();
}

Report cmd_analyze(const std::string& input) {
  Report r;
  r.command = "analyze";
  r.inputs["diagram"] = input;
  const Diagram d = resolve_diagram(input);
  const CarterSurface s = trace_faces(d);
  const bool knot = d.component_count() == 1;

  Json& out = r.results;
  out["diagram"] = serialize(d);
  out["components"] = d.component_count();
  out["crossings"] = d.crossing_count();
  out["genus"] = s.genus;
  out["euler_characteristic"] = s.euler_characteristic;
  Json lengths = Json::array();
  for (const auto& f : s.faces) lengths.push_back(f.length());
  out["face_lengths"] = lengths;
  out["alternating"] = is_alternating(d);
  out["reduced"] = is_reduced(s);
  out["weakly_prime"] = knot ? Json(is_weakly_prime(d)) : Json(nullptr);
  out["checkerboard_colorable"] = std::holds_alternative<Coloring>(checkerboard_coloring(s));
  try {
    out["twist_regions"] = regions_json(twist_regions(d, s));
  } catch (const CyclicBigonChain& e) {
    out["twist_regions"] = regions_json(e.regions());
    out["bigon_cycles"] = regions_json(e.cycles());
    r.warnings.push_back(std::string(e.name()) + ": " + e.what());
  }
  std::vector<Arc> witnesses;
  for (const auto& w : find_singular_witnesses(s)) witnesses.push_back(w.arc);
  out["singular_witnesses"] = arc_list(witnesses);
  Json corks = Json::array();
  for (const auto& a : arcs(d)) {
    Json c;
    c["arc"] = format_arc(a);
    c["kind"] = to_string(classify_cork(d, s, Cork{a}).kind);
    corks.push_back(std::move(c));
  }
  out["corks"] = corks;
  if (knot) {
    const Certificate cert = tg_certificate(d);
    Json c;
    c["verdict"] = to_string(cert.verdict);
    for (const auto& p : cert.reasons) c["reasons"][p.name] = p.holds;
    out["certificate"] = c;
  } else {
    out["certificate"] = nullptr;
  }
  return r;
}

Report cmd_compose(const ComposeArgs& a) {
  Report r;
  r.command = "compose";
  r.inputs["diagram1"] = a.code1;
  r.inputs["arc1"] = a.arc1;
  r.inputs["diagram2"] = a.code2;
  r.inputs["arc2"] = a.arc2;
  r.inputs["kind"] = a.kind == KindChoice::Auto ? "auto" : a.kind == KindChoice::Singular ? "singular" : "nonsingular";
  r.inputs["orientation"] = a.orientation_matched ? "match" : "reverse";
  const Triple t1(resolve_diagram(a.code1), Cork{parse_arc(a.arc1)});
  const Triple t2(resolve_diagram(a.code2), Cork{parse_arc(a.arc2)});
  const auto table = resolve_table(a.table);

  CompositionResult c;
  switch (a.kind) {
    case KindChoice::Auto: c = compose_auto(t1, t2, a.orientation_matched); break;
    case KindChoice::Nonsingular: c = compose_nonsingular(t1, t2, a.orientation_matched); break;
    case KindChoice::Singular:
      if (a.orientation_matched) {
        c = compose_singular(t1, t2);
      } else {
        const Triple flipped(reverse_orientation(t2.diagram(), t2.cork().arc.component),
                             Cork{reversed_arc(t2.diagram(), t2.cork().arc)}, t2.declared_genus());
        c = compose_singular(t1, flipped);
        c.orientation_matched = false;
      }
      break;
  }
  r.results["corks"] = {to_string(classify_cork(t1.diagram(), t1.cork()).kind),
                        to_string(classify_cork(t2.diagram(), t2.cork()).kind)};
  r.results["composition"] = composition_json(c);
  r.warnings = c.warnings;
  add_bound(r, table, t1, t2);
  return r;
}

Report cmd_double(const std::string& code, const std::string& arc, const std::optional<std::string>& table_path) {
  Report r;
  r.command = "double";
  r.inputs["diagram"] = code;
  r.inputs["arc"] = arc;
  const Triple t(resolve_diagram(code), Cork{parse_arc(arc)});
  const auto table = resolve_table(table_path);
  const bool singular = classify_cork(t.diagram(), t.cork()).singular();
  const CompositionResult c = singular ? double_singular(t) : double_nonsingular(t);
  r.results["cork"] = to_string(classify_cork(t.diagram(), t.cork()).kind);
  r.results["composition"] = composition_json(c);
  r.results["alternating"] = is_alternating(c.diagram);
  r.results["weakly_prime"] = is_weakly_prime(c.diagram);
  r.warnings = c.warnings;
  add_bound(r, table, t, reflected(t));
  return r;
}

Report cmd_sequence(const SequenceArgs& a) {
  Report r;
  r.command = "sequence";
  r.inputs["diagram1"] = a.code1;
  r.inputs["arc1"] = a.arc1;
  r.inputs["diagram2"] = a.code2;
  r.inputs["arc2"] = a.arc2;
  r.inputs["i"] = a.i;
  r.inputs["j"] = a.j;
  const Triple t1(resolve_diagram(a.code1), Cork{parse_arc(a.arc1)});
  const Triple t2(resolve_diagram(a.code2), Cork{parse_arc(a.arc2)});
  const SequenceTerm term = infinite_volume_sequence(t1, t2, a.i, a.j);

  Json& out = r.results;
  out["augmented_link"] = serialize(term.augmented.diagram);
  out["augmenting_components"] = term.augmented.augmenting_components.size();
  out["half_twist_flags"] = term.augmented.half_twist_flags;
  Json regions = Json::array();
  for (std::size_t k = 0; k < term.regions.size(); ++k) {
    Json reg;
    reg["crossings"] = term.regions[k].crossings;
    reg["crossings_drawn"] = term.region_crossings[k];
    reg["twists"] = term.twists_per_region;
    regions.push_back(std::move(reg));
  }
  out["regions"] = regions;
  out["composition"] = composition_json(term.composition);
  const auto cusps = static_cast<unsigned>(term.augmented.augmenting_components.size());
  const auto all = static_cast<unsigned>(term.composition.diagram.component_count());
  out["cusp_bound"] = {{"theorem", to_string(Theorem::CuspBound)},
                       {"cusps", cusps},
                       {"lower_bound", real_json(cusp_lower_bound(cusps))}};
  out["cusp_bound_all_components"] = {{"theorem", to_string(Theorem::CuspBound)},
                                      {"cusps", all},
                                      {"lower_bound", real_json(cusp_lower_bound(all))}};
  r.warnings = term.composition.warnings;
  return r;
}

Report cmd_table(const std::optional<std::string>& load) {
  Report r;
  r.command = "table";
  r.inputs["source"] = load ? *load : "builtin";
  const auto table = resolve_table(load);
  r.results["count"] = table.size();
  r.results["entries"] = Json::parse(dump_table(table));
  return r;
}

Report cmd_bound(const std::string& id1, const std::string& id2, const std::optional<std::string>& table_path) {
  Report r;
  r.command = "bound";
  r.inputs["entry1"] = id1;
  r.inputs["entry2"] = id2;
  const auto table = resolve_table(table_path);
  const VolumeEntry* e1 = find_entry(table, id1);
  const VolumeEntry* e2 = find_entry(table, id2);
  if (!e1) throw InvalidArgument("no table entry " + id1);
  if (!e2) throw InvalidArgument("no table entry " + id2);
  const bool s1 = e1->cork_kind == EntryCorkKind::Singular;
  const bool s2 = e2->cork_kind == EntryCorkKind::Singular;
  BoundReport b;
  if (s1 && s2) {
    b = bound_singular(*e1, *e2);
  } else if (s1) {
    b = bound_mixed(*e1, *e2);
  } else if (s2) {
    b = bound_mixed(*e2, *e1);
  } else {
    b = bound_nonsingular(*e1, *e2);
  }
  r.results["bound"] = bound_json(b);
  return r;
}

Report cmd_bound_cusps(int n) {
  Report r;
  r.command = "bound";
  r.inputs["cusps"] = n;
  if (n <= 0) throw InvalidArgument("cusp count must be positive");
  BoundReport b;
  b.theorem = Theorem::CuspBound;
  b.lower_bound = cusp_lower_bound(static_cast<unsigned>(n));
  b.hypotheses = {"finite-volume hyperbolic manifold with " + std::to_string(n) + " cusps"};
  r.results["bound"] = bound_json(b);
  return r;
}

}  // namespace vknot::tools
