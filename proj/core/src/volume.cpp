#include "vknot/volume.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>

#include <boost/math/special_functions/trigamma.hpp>
#include <json.hpp>

#include "vknot/errors.hpp"

namespace vknot {

namespace {

using Json = nlohmann::ordered_json;

Real parse_decimal(const std::string& text, const std::string& where) {
  char* end = nullptr;
  const Real x = std::strtold(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(x))
    throw FormatError(where + ": \"" + text + "\" is not a decimal number");
  return x;
}

std::optional<Real> read_real(const Json& obj, const char* key, const std::string& id) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  const std::string where = "entry " + id + " field " + key;
  Real x = 0;
  if (it->is_string()) {
    x = parse_decimal(it->get<std::string>(), where);
  } else if (it->is_number()) {
    // Numbers pass through a double; strings keep full precision.
    x = static_cast<Real>(it->get<double>());
  } else {
    throw FormatError(where + " must be a number or decimal string");
  }
  if (!(x > 0)) throw NegativeVolume(where + " must be positive");
  return x;
}

VolumeEntry entry(std::string id, const char* vol, const char* vol_ns, const char* vol_s, const char* quarter,
                  EntryCorkKind kind, std::optional<int> genus) {
  auto opt = [](const char* s) -> std::optional<Real> {
    if (s == nullptr) return std::nullopt;
    return std::strtold(s, nullptr);
  };
  return VolumeEntry{std::move(id), opt(vol), opt(vol_ns), opt(vol_s), opt(quarter), kind, genus};
}

Real require(const std::optional<Real>& x, const VolumeEntry& e, const char* field) {
  if (!x) throw MissingField("entry " + e.id + " has no " + field);
  return *x;
}

}  // namespace

const char* to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::Thm4_1: return "Thm4_1";
    case Theorem::Thm4_2: return "Thm4_2";
    case Theorem::Cor4_3: return "Cor4_3";
    case Theorem::Thm4_4: return "Thm4_4";
    case Theorem::CuspBound: return "CuspBound";
  }
  return "";
}

const char* to_string(EntryCorkKind k) noexcept { return k == EntryCorkKind::Singular ? "Singular" : "Nonsingular"; }

Real tet_volume_constant() {
  using boost::math::trigamma;
  const Real third = 1.0L / 3.0L;
  return (trigamma(third) - trigamma(2.0L * third)) / (4.0L * std::sqrt(3.0L));
}

std::vector<VolumeEntry> builtin_table() {
  using K = EntryCorkKind;
  return {
      entry("2.1-singular", "5.3334895", nullptr, "5.33348956690", "10.149416064", K::Singular, 1),
      entry("2.1-nonsingular", "5.3334895", "9.4158416835", nullptr, nullptr, K::Nonsingular, 1),
      entry("3.2-singular", "7.7069118", nullptr, "7.70691180281", "12.8448530045", K::Singular, 1),
      entry("3.2-nonsingular", "7.7069118", "13.5043855968", nullptr, nullptr, K::Nonsingular, 1),
      entry("table1-row5", nullptr, "12.9446980685", nullptr, nullptr, K::Nonsingular, std::nullopt),
      entry("table1-row6", nullptr, "15.8327412531", nullptr, nullptr, K::Nonsingular, std::nullopt),
  };
}

std::vector<VolumeEntry> load_table(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("volume table is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw FormatError("volume table must be a JSON array");
  std::vector<VolumeEntry> out;
  for (const auto& obj : doc) {
    if (!obj.is_object()) throw FormatError("volume table rows must be objects");
    const auto id = obj.find("id");
    if (id == obj.end() || !id->is_string()) throw FormatError("volume table row without a string id");
    VolumeEntry e;
    e.id = id->get<std::string>();
    e.vol = read_real(obj, "vol", e.id);
    e.vol_ns = read_real(obj, "vol_ns", e.id);
    e.vol_s = read_real(obj, "vol_s", e.id);
    e.quarter_double_vol = read_real(obj, "quarter_double_vol", e.id);
    if (const auto k = obj.find("cork_kind"); k != obj.end() && !k->is_null()) {
      if (*k == "Singular") {
        e.cork_kind = EntryCorkKind::Singular;
      } else if (*k == "Nonsingular") {
        e.cork_kind = EntryCorkKind::Nonsingular;
      } else {
        throw FormatError("entry " + e.id + ": cork_kind must be Singular or Nonsingular");
      }
    }
    if (const auto g = obj.find("genus"); g != obj.end() && !g->is_null()) {
      if (!g->is_number_integer() || g->get<long long>() < 0)
        throw FormatError("entry " + e.id + ": genus must be a nonnegative integer");
      e.genus = g->get<int>();
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<VolumeEntry> load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open volume table " + path);
  return load_table(in);
}

std::string format_real(Real x) {
  char buf[64];
  for (int digits = 1; digits <= 21; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
    if (std::strtold(buf, nullptr) == x) break;
  }
  return buf;
}

std::string dump_table(const std::vector<VolumeEntry>& table) {
  Json doc = Json::array();
  for (const auto& e : table) {
    Json obj;
    obj["id"] = e.id;
    auto put = [&](const char* key, const std::optional<Real>& x) {
      if (x) obj[key] = format_real(*x);
    };
    put("vol", e.vol);
    put("vol_ns", e.vol_ns);
    put("vol_s", e.vol_s);
    put("quarter_double_vol", e.quarter_double_vol);
    obj["cork_kind"] = to_string(e.cork_kind);
    if (e.genus) obj["genus"] = *e.genus;
    doc.push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

const VolumeEntry* find_entry(const std::vector<VolumeEntry>& table, const std::string& id) {
  const auto it = std::find_if(table.begin(), table.end(), [&](const VolumeEntry& e) { return e.id == id; });
  return it == table.end() ? nullptr : &*it;
}

BoundReport bound_nonsingular(const VolumeEntry& e1, const VolumeEntry& e2) {
  BoundReport r;
  r.theorem = Theorem::Thm4_1;
  r.lower_bound = require(e1.vol_ns, e1, "vol_ns") + require(e2.vol_ns, e2, "vol_ns");
  r.hypotheses = {"hyperbolically composable (assumed)"};
  r.inputs = {e1.id, e2.id};
  return r;
}

BoundReport bound_singular(const VolumeEntry& e1, const VolumeEntry& e2) {
  if (!e1.genus) throw MissingField("entry " + e1.id + " has no genus");
  if (!e2.genus) throw MissingField("entry " + e2.id + " has no genus");
  const int g1 = *e1.genus;
  const int g2 = *e2.genus;
  if ((g1 == 1) != (g2 == 1) || g1 < 1 || g2 < 1)
    throw MixedGenusUnsupported("genera " + std::to_string(g1) + " and " + std::to_string(g2) +
                                " are not both one or both at least two");
  BoundReport r;
  r.inputs = {e1.id, e2.id};
  if (g1 == 1) {
    r.theorem = Theorem::Cor4_3;
    r.exact = true;
    r.lower_bound = require(e1.vol, e1, "vol") + require(e2.vol, e2, "vol");
    r.hypotheses = {"both genus 1", "both corks singular"};
  } else {
    r.theorem = Theorem::Thm4_2;
    r.lower_bound = require(e1.vol_s, e1, "vol_s") + require(e2.vol_s, e2, "vol_s");
    r.hypotheses = {"both genus at least 2", "both corks singular"};
  }
  return r;
}

BoundReport bound_mixed(const VolumeEntry& singular_entry, const VolumeEntry& nonsingular_entry) {
  BoundReport r;
  r.theorem = Theorem::Thm4_4;
  r.lower_bound = require(singular_entry.quarter_double_vol, singular_entry, "quarter_double_vol") +
                  require(nonsingular_entry.vol_ns, nonsingular_entry, "vol_ns");
  r.hypotheses = {"first cork singular", "second factor hyperbolically composable (assumed)"};
  r.inputs = {singular_entry.id, nonsingular_entry.id};
  return r;
}

Real cusp_lower_bound(unsigned n) {
  if (n == 0) throw InvalidArgument("cusp bound needs at least one cusp");
  return static_cast<Real>(n) * tet_volume_constant();
}

BoundReport bound_report(const Triple& t1, const VolumeEntry& e1, const Triple& t2, const VolumeEntry& e2) {
  const auto k1 = classify_cork(t1.diagram(), t1.cork());
  const auto k2 = classify_cork(t2.diagram(), t2.cork());
  auto describe = [](int which, const Triple& t, const CorkClassification& k) {
    return "cork " + std::to_string(which) + " at " + format_arc(t.cork().arc) + ": " + to_string(k.kind);
  };
  // Composability holds automatically for certified diagrams with alternating corks.
  auto composable = [](int which, const Triple& t) {
    const std::string prefix = "factor " + std::to_string(which) + " hyperbolically composable";
    if (t.diagram().component_count() == 1 && tg_certificate(t.diagram()).certified())
      return prefix + " (tg certificate, alternating cork)";
    return prefix + " (assumed)";
  };

  BoundReport r;
  if (k1.singular() && k2.singular()) {
    r = bound_singular(e1, e2);
  } else if (k1.singular()) {
    r = bound_mixed(e1, e2);
    r.hypotheses = {composable(2, t2)};
  } else if (k2.singular()) {
    r = bound_mixed(e2, e1);
    r.hypotheses = {composable(1, t1)};
  } else {
    r = bound_nonsingular(e1, e2);
    r.hypotheses = {composable(1, t1), composable(2, t2)};
  }
  r.hypotheses.insert(r.hypotheses.begin(), {describe(1, t1, k1), describe(2, t2, k2)});
  if (k1.singular() && k2.singular())
    r.hypotheses.push_back("declared genera " + std::to_string(t1.declared_genus()) + " and " +
                           std::to_string(t2.declared_genus()));
  return r;
}

}  // namespace vknot
