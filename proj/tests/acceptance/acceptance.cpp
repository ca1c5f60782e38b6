// One line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracle.hpp"
#include "vknot/composition.hpp"
#include "vknot/volume.hpp"

using namespace vknot;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("[%s] #%d %s: %s (%.3fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL", number, title.c_str(),
              o.detail.c_str(), secs, limit_seconds, in_time ? "" : ", TOO SLOW");
  std::fflush(stdout);
}

std::string fmt(long double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lf", digits, x);
  return buf;
}

const VolumeEntry& entry(const std::vector<VolumeEntry>& t, const char* id) {
  const VolumeEntry* e = find_entry(t, id);
  if (e == nullptr) throw std::runtime_error(std::string("missing table entry ") + id);
  return *e;
}

// Shared random sample for criteria 5-7, 9 and 10.
std::vector<Diagram> sample(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Diagram> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(test_support::random_code(rng, 6));
  return out;
}

bool contains_run(const std::vector<CrossingId>& region, std::vector<CrossingId> run) {
  if (std::search(region.begin(), region.end(), run.begin(), run.end()) != region.end()) return true;
  std::reverse(run.begin(), run.end());
  return std::search(region.begin(), region.end(), run.begin(), run.end()) != region.end();
}

std::string run_cli(const std::string& cli, const std::string& args, int& status) {
  const std::string cmd = "'" + cli + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const auto table = builtin_table();
  const auto diagrams = sample(500, 20240601);

  run(1, "nonsingular composite bound", 1, [&] {
    const auto r = bound_nonsingular(entry(table, "2.1-nonsingular"), entry(table, "3.2-nonsingular"));
    const bool ok = r.theorem == Theorem::Thm4_1 && std::fabs(r.lower_bound - 22.9202272803L) < 1e-6L &&
                    std::fabs(r.lower_bound - 22.92022727L) < 1e-6L && r.lower_bound < 26.236005L;
    return Outcome{ok, "Thm4_1 lower bound " + fmt(r.lower_bound, 10) + " < 26.236005"};
  });

  run(2, "singular composite of genus-1 factors", 1, [&] {
    const Diagram vt = parse("O1+O2+U1+U2+");
    const Diagram f8 = parse("O1+O3-U2-U1+O2-U3-");
    const auto r = bound_report(Triple(vt, Cork{{0, 0}}), entry(table, "2.1-singular"), Triple(f8, Cork{{0, 0}}),
                                entry(table, "3.2-singular"));
    const bool ok = r.theorem == Theorem::Cor4_3 && r.exact && std::fabs(r.lower_bound - 13.0404013L) < 1e-6L;
    return Outcome{ok, std::string(to_string(r.theorem)) + " exact=" + (r.exact ? "true" : "false") + " value " +
                           fmt(r.lower_bound, 10)};
  });

  run(3, "mixed bound", 1, [&] {
    const auto r = bound_mixed(entry(table, "2.1-singular"), entry(table, "3.2-nonsingular"));
    const bool ok = r.theorem == Theorem::Thm4_4 && std::fabs(r.lower_bound - 23.6538016608L) < 1e-9L &&
                    r.lower_bound < 26.3735L;
    return Outcome{ok, "Thm4_4 lower bound " + fmt(r.lower_bound, 10) + " < 26.3735"};
  });

  run(4, "tetrahedron constant", 1, [&] {
    const long double v = tet_volume_constant();
    const long double oracle = test_support::lobachevsky_tet_volume();
    const long double table_gap = std::fabs(10 * v - 10.149416064L);
    const long double oracle_gap = std::fabs(v - oracle);
    const bool ok = table_gap < 5e-9L && oracle_gap < 1e-12L;
    return Outcome{ok, "v3 = " + fmt(v, 15) + ", |10 v3 - 10.149416064| = " + fmt(table_gap, 12) +
                           ", |v3 - series| = " + fmt(oracle_gap, 15)};
  });

  // Criteria 5-7 share one sample: every arc pair of consecutive sample diagrams.
  // The work is timed under #5; #6 and #7 only read the tallies.
  long cases = 0, genus_bad = 0, genus_bad_ss = 0, oracle_bad = 0, faces_bad = 0, faces_bad_ss = 0;
  long colorable = 0, witness_bad = 0;
  std::string sample_note;
  run(5, "genus additivity of splice", 30, [&] {
    for (std::size_t k = 0; k < diagrams.size(); ++k) {
      const Diagram& d1 = diagrams[k];
      const Diagram& d2 = diagrams[(k + 1) % diagrams.size()];
      const auto s1 = trace_faces(d1);
      const auto s2 = trace_faces(d2);
      if (std::holds_alternative<Coloring>(checkerboard_coloring(s1))) {
        ++colorable;
        if (!find_singular_witnesses(s1).empty()) ++witness_bad;
      }
      for (const Arc& a1 : arcs(d1))
        for (const Arc& a2 : arcs(d2)) {
          const Diagram d = splice(d1, a1, d2, a2);
          const auto s = trace_faces(d);
          const auto o = test_support::oracle_surface(d);
          const bool ss = classify_cork(d1, s1, Cork{a1}).singular() && classify_cork(d2, s2, Cork{a2}).singular();
          ++cases;
          if (o.genus != s.genus || o.faces != static_cast<int>(s.faces.size())) ++oracle_bad;
          if (s.genus != s1.genus + s2.genus) {
            ++genus_bad;
            genus_bad_ss += ss;
          }
          if (s.faces.size() + 2 != s1.faces.size() + s2.faces.size()) {
            ++faces_bad;
            faces_bad_ss += ss;
          }
        }
    }
    sample_note = std::to_string(diagrams.size()) + " diagrams, " + std::to_string(cases) + " arc pairs";
    const bool ok = diagrams.size() >= 500 && cases >= 2000 && genus_bad == 0 && oracle_bad == 0;
    return Outcome{ok, sample_note + "; genus != g1+g2 in " + std::to_string(genus_bad) + " (" +
                           std::to_string(genus_bad_ss) + " with both arcs singular); oracle disagreements " +
                           std::to_string(oracle_bad)};
  });

  run(6, "face-merge law", 30, [&] {
    return Outcome{faces_bad == 0, sample_note + "; F != F1+F2-2 in " + std::to_string(faces_bad) + " (" +
                                       std::to_string(faces_bad_ss) + " with both arcs singular)"};
  });

  run(7, "colorable diagrams have no singular witness", 30, [&] {
    return Outcome{witness_bad == 0 && colorable > 0, std::to_string(colorable) + " colorable diagrams, " +
                                                          std::to_string(witness_bad) + " violations"};
  });

  run(8, "doubles of certified diagrams", 30, [&] {
    // All alternating codes up to 6 crossings, one per canonical form.
    std::set<std::string> seen;
    long certified = 0, doubles = 0, bad = 0;
    for (int n = 1; n <= 6; ++n) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        for (int mask = 0; mask < (1 << n); ++mask) {
          Component c(2 * static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i) {
            const Sign s = (mask >> i) & 1 ? Sign::Negative : Sign::Positive;
            const auto id = static_cast<CrossingId>(i + 1);
            c[2 * static_cast<std::size_t>(i)] = {id, Passage::Over, s};
            c[2 * static_cast<std::size_t>(perm[i]) + 1] = {id, Passage::Under, s};
          }
          const Diagram d = Diagram::from_components({std::move(c)});
          if (!seen.insert(serialize(d)).second) continue;
          if (!tg_certificate(d).certified()) continue;
          ++certified;
          for (const Cork& cork : alternating_corks(d)) {
            const Diagram dd = double_nonsingular(Triple(d, cork)).diagram;
            ++doubles;
            if (!is_alternating(dd) || !is_weakly_prime(dd)) ++bad;
          }
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return Outcome{bad == 0 && doubles > 0, std::to_string(seen.size()) + " alternating diagrams, " +
                                                std::to_string(certified) + " certified, " + std::to_string(doubles) +
                                                " doubles, " + std::to_string(bad) + " not alternating and weakly prime"};
  });

  run(9, "Reidemeister II insertion", 10, [&] {
    long inserts = 0, genus_bad = 0, invalid = 0, missing = 0, exact = 0;
    for (const Diagram& d : diagrams) {
      const int g = carter_genus(d);
      for (const Arc& a : arcs(d))
        for (int n = 1; n <= 4; ++n) {
          const auto t = add_twists(d, a, n);
          ++inserts;
          if (carter_genus(t.diagram) != g) ++genus_bad;
          if (serialize(parse(serialize(t.diagram))) != serialize(t.diagram) ||
              t.diagram.crossing_count() != d.crossing_count() + 2 * static_cast<std::size_t>(n))
            ++invalid;
          std::vector<TwistRegion> regions;
          try {
            regions = twist_regions(t.diagram);
          } catch (const CyclicBigonChain& e) {
            regions = e.regions();
            regions.insert(regions.end(), e.cycles().begin(), e.cycles().end());
          }
          bool found = false;
          for (const auto& r : regions) {
            if (!contains_run(r.crossings, t.inserted)) continue;
            found = true;
            exact += r.crossings.size() == t.inserted.size();
          }
          missing += !found;
        }
    }
    return Outcome{genus_bad == 0 && invalid == 0 && missing == 0,
                   std::to_string(inserts) + " insertions (n <= 4); genus changed " + std::to_string(genus_bad) +
                       ", invalid codes " + std::to_string(invalid) + ", inserted run not inside one region " +
                       std::to_string(missing) + "; region is exactly the 2n new crossings in " +
                       std::to_string(exact)};
  });

  run(10, "composites are not weakly prime", 10, [&] {
    std::mt19937_64 rng(77);
    long total = 0, prime = 0, prime_positive = 0;
    for (std::size_t k = 0; k < diagrams.size(); ++k) {
      const Diagram& d1 = diagrams[k];
      const Diagram& d2 = diagrams[(k + 7) % diagrams.size()];
      const auto a1 = arcs(d1), a2 = arcs(d2);
      const Arc x = a1[rng() % a1.size()];
      const Arc y = a2[rng() % a2.size()];
      ++total;
      if (is_weakly_prime(splice(d1, x, d2, y))) {
        ++prime;
        prime_positive += carter_genus(d1) > 0 && carter_genus(d2) > 0;
      }
    }
    return Outcome{prime == 0 && total >= 500, std::to_string(total) + " composites, " + std::to_string(prime) +
                                                   " weakly prime (" + std::to_string(prime_positive) +
                                                   " with both factors of positive genus)"};
  });

  run(11, "unbounded-volume sequence", 5, [&] {
    const Triple t1(parse("O1+U3+O2+U4+O3+U5+O4+U6+O5+U1+O6+U2+"), Cork{{0, 0}});
    const Triple t2(parse("O1-U6-O2-U1-O3-U2-O4-U3-O5-U4-O6-U5-"), Cork{{0, 0}});
    bool ok = true;
    std::ostringstream detail;
    for (int j = 1; j <= 2; ++j) {
      long double previous = 0;
      for (int i = 1; i <= 3; ++i) {
        const auto term = infinite_volume_sequence(t1, t2, i, j);
        const auto cusps = term.augmented.augmenting_components.size();
        const long double bound = cusp_lower_bound(static_cast<unsigned>(cusps));
        ok = ok && cusps == static_cast<std::size_t>(2 * i) &&
             std::fabs(bound - 2 * i * tet_volume_constant()) < 1e-15L && bound > previous;
        previous = bound;
        detail << "(i=" << i << ",j=" << j << ": " << cusps << " circles, " << fmt(bound, 6) << ") ";
      }
    }
    return Outcome{ok, detail.str()};
  });

  run(12, "round trip and CLI determinism", 10, [&] {
    std::mt19937_64 rng(99);
    long bad = 0;
    for (int k = 0; k < 1000; ++k) {
      const Diagram d = test_support::random_code(rng, 8);
      const std::string s = serialize(d);
      if (serialize(parse(s)) != s || parse(s) != d) ++bad;
    }
    long mismatched = 0, runs = 0;
    if (!cli.empty()) {
      const std::vector<std::string> commands = {
          "analyze 2.1 --json", "analyze 3.2", "compose 2.1 0:0 3.2 0:0 --json", "compose 2.1 0:1 3.2 0:1",
          "double 2.1 0:1 --json", "table --dump", "bound 2.1-singular 3.2-nonsingular --json",
          "sequence O1+U3+O2+U4+O3+U5+O4+U6+O5+U1+O6+U2+ 0:0 O1-U6-O2-U1-O3-U2-O4-U3-O5-U4-O6-U5- 0:0 2 2 --json"};
      for (const auto& c : commands) {
        int s1 = 0, s2 = 0;
        const std::string a = run_cli(cli, c, s1);
        const std::string b = run_cli(cli, c, s2);
        ++runs;
        if (a != b || s1 != s2 || s1 != 0) ++mismatched;
      }
    }
    return Outcome{bad == 0 && !cli.empty() && mismatched == 0,
                   "1000 codes, " + std::to_string(bad) + " round-trip failures; " + std::to_string(runs) +
                       " CLI commands run twice, " + std::to_string(mismatched) + " differing or failing"};
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
