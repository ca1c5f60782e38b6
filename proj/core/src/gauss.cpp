#include "vknot/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "vknot/errors.hpp"

namespace vknot {

namespace {

struct PairState {
  int over = 0;
  int under = 0;
  Sign sign = Sign::Positive;
};

void validate(const std::vector<Component>& components) {
  std::map<CrossingId, PairState> seen;
  for (const auto& comp : components) {
    for (const auto& occ : comp) {
      if (occ.id == 0) throw SyntaxError("crossing ids must be positive");
      auto [it, inserted] = seen.try_emplace(occ.id);
      auto& state = it->second;
      if (inserted) {
        state.sign = occ.sign;
      } else if (state.sign != occ.sign) {
        throw SignError("crossing " + std::to_string(occ.id) + " carries both signs");
      }
      (occ.passage == Passage::Over ? state.over : state.under) += 1;
    }
  }
  std::string problems;
  for (const auto& [id, state] : seen) {
    if (state.over == 1 && state.under == 1) continue;
    if (!problems.empty()) problems += "; ";
    problems += "crossing " + std::to_string(id) + " has " + std::to_string(state.over) +
                " over and " + std::to_string(state.under) + " under occurrences";
  }
  if (!problems.empty()) throw PairingError(problems);
}

bool rotation_less(const Component& c, std::size_t a, std::size_t b) {
  const std::size_t n = c.size();
  for (std::size_t k = 0; k < n; ++k) {
    auto order = compare_tokens(c[(a + k) % n], c[(b + k) % n]);
    if (order != 0) return order < 0;
  }
  return false;
}

Component rotated(const Component& c, std::size_t start) {
  Component out;
  out.reserve(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out.push_back(c[(start + k) % c.size()]);
  return out;
}

}  // namespace

std::strong_ordering compare_tokens(const Occurrence& a, const Occurrence& b) noexcept {
  if (auto c = static_cast<int>(a.passage) <=> static_cast<int>(b.passage); c != 0) return c;
  if (auto c = a.id <=> b.id; c != 0) return c;
  // '+' sorts before '-'
  return static_cast<int>(b.sign) <=> static_cast<int>(a.sign);
}

Diagram::Diagram() : components_(1) {}

Diagram Diagram::from_components(std::vector<Component> components) {
  if (components.empty()) components.emplace_back();
  validate(components);
  return Diagram(std::move(components));
}

std::size_t Diagram::crossing_count() const noexcept {
  std::size_t total = 0;
  for (const auto& c : components_) total += c.size();
  return total / 2;
}

CrossingId Diagram::max_id() const noexcept {
  CrossingId m = 0;
  for (const auto& c : components_)
    for (const auto& occ : c) m = std::max(m, occ.id);
  return m;
}

bool Diagram::has_empty_component() const noexcept {
  return std::any_of(components_.begin(), components_.end(), [](const auto& c) { return c.empty(); });
}

std::size_t minimal_rotation(const Component& c) {
  std::size_t best = 0;
  for (std::size_t s = 1; s < c.size(); ++s)
    if (rotation_less(c, s, best)) best = s;
  return best;
}

Diagram Diagram::canonical() const {
  std::vector<Component> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(rotated(c, minimal_rotation(c)));
  return Diagram(std::move(out));
}

bool operator==(const Diagram& a, const Diagram& b) {
  return a.canonical().components_ == b.canonical().components_;
}

Diagram parse(std::string_view text) {
  std::vector<Component> components(1);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  for (;;) {
    skip_ws();
    if (i >= text.size()) break;
    const char c = text[i];
    if (c == '/') {
      components.emplace_back();
      ++i;
      continue;
    }
    if (c != 'O' && c != 'U') {
      throw SyntaxError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i));
    }
    Occurrence occ;
    occ.passage = c == 'O' ? Passage::Over : Passage::Under;
    ++i;
    skip_ws();
    const std::size_t digits_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (digits_begin == i) throw SyntaxError("expected crossing id at offset " + std::to_string(digits_begin));
    auto [ptr, ec] = std::from_chars(text.data() + digits_begin, text.data() + i, occ.id);
    if (ec != std::errc{}) throw SyntaxError("crossing id out of range at offset " + std::to_string(digits_begin));
    if (occ.id == 0) throw SyntaxError("crossing ids must be positive");
    skip_ws();
    if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
      throw SyntaxError("expected sign after crossing " + std::to_string(occ.id));
    occ.sign = text[i] == '+' ? Sign::Positive : Sign::Negative;
    ++i;
    components.back().push_back(occ);
  }
  return Diagram::from_components(std::move(components));
}

std::string format_component(const Component& c) {
  std::string out;
  for (const auto& occ : c) {
    out += occ.passage == Passage::Over ? 'O' : 'U';
    out += std::to_string(occ.id);
    out += occ.sign == Sign::Positive ? '+' : '-';
  }
  return out;
}

std::string serialize(const Diagram& d) {
  const Diagram canon = d.canonical();
  std::string out;
  bool first = true;
  for (const auto& c : canon.components()) {
    if (!first) out += '/';
    first = false;
    out += format_component(c);
  }
  return out;
}

Diagram mirror_reflect(const Diagram& d) {
  auto comps = d.components();
  for (auto& c : comps)
    for (auto& occ : c) occ.sign = flip(occ.sign);
  return Diagram::from_components(std::move(comps));
}

Diagram reverse_orientation(const Diagram& d, std::size_t component) {
  if (component >= d.component_count())
    throw IndexError("component " + std::to_string(component) + " out of range");
  auto comps = d.components();
  std::set<CrossingId> own;
  for (const auto& occ : comps[component]) own.insert(occ.id);
  std::set<CrossingId> self;
  {
    std::map<CrossingId, int> count;
    for (const auto& occ : comps[component]) ++count[occ.id];
    for (const auto& [id, n] : count)
      if (n == 2) self.insert(id);
  }
  std::reverse(comps[component].begin(), comps[component].end());
  for (auto& c : comps)
    for (auto& occ : c)
      if (own.count(occ.id) && !self.count(occ.id)) occ.sign = flip(occ.sign);
  return Diagram::from_components(std::move(comps));
}

Arc reversed_arc(const Diagram& d, const Arc& arc) {
  require_arc(d, arc);
  const std::size_t n = d.components()[arc.component].size();
  if (n == 0) return arc;
  // gap (k, k+1) becomes gap (n-2-k, n-1-k) after reversal
  return Arc{arc.component, (2 * n - 2 - arc.position) % n};
}

std::vector<Arc> arcs(const Diagram& d) {
  std::vector<Arc> out;
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    const std::size_t n = std::max<std::size_t>(d.components()[c].size(), 1);
    for (std::size_t p = 0; p < n; ++p) out.push_back(Arc{c, p});
  }
  return out;
}

bool is_valid_arc(const Diagram& d, const Arc& arc) noexcept {
  if (arc.component >= d.component_count()) return false;
  const std::size_t n = d.components()[arc.component].size();
  return n == 0 ? arc.position == 0 : arc.position < n;
}

void require_arc(const Diagram& d, const Arc& arc) {
  if (!is_valid_arc(d, arc)) throw InvalidArc("arc " + format_arc(arc) + " is not in the diagram");
}

std::string format_arc(const Arc& arc) {
  return std::to_string(arc.component) + ":" + std::to_string(arc.position);
}

Arc parse_arc(std::string_view text) {
  auto parse_index = [&](std::string_view s) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw SyntaxError("bad arc '" + std::string(text) + "'");
    return value;
  };
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return Arc{0, parse_index(text)};
  return Arc{parse_index(text.substr(0, colon)), parse_index(text.substr(colon + 1))};
}

}  // namespace vknot
