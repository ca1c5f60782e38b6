#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "support/oracle.hpp"
#include "vknot/volume.hpp"

using namespace vknot;

namespace {

constexpr double kTol = 1e-6;

const VolumeEntry& get(const std::vector<VolumeEntry>& t, const std::string& id) {
  const VolumeEntry* e = find_entry(t, id);
  if (e == nullptr) throw std::runtime_error("missing " + id);
  return *e;
}

}  // namespace

TEST(Constant, MatchesLobachevskySeries) {
  const long double v = tet_volume_constant();
  EXPECT_NEAR(static_cast<double>(v), 1.014941606409653, 1e-14);
  EXPECT_NEAR(static_cast<double>(v), static_cast<double>(test_support::lobachevsky_tet_volume()), 1e-12);
  EXPECT_NEAR(static_cast<double>(10 * v), 10.149416064, 5e-9);
  EXPECT_GT(v, 1);
}

TEST(Table, Builtin) {
  const auto t = builtin_table();
  EXPECT_EQ(t.size(), 6u);
  EXPECT_EQ(*get(t, "2.1-singular").vol_s, std::strtold("5.33348956690", nullptr));
  EXPECT_EQ(get(t, "2.1-singular").genus, 1);
  EXPECT_FALSE(get(t, "table1-row5").genus.has_value());
}

TEST(Table, DumpLoadRoundTrip) {
  const auto t = builtin_table();
  std::istringstream in(dump_table(t));
  const auto u = load_table(in);
  ASSERT_EQ(u.size(), t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    EXPECT_EQ(u[k].id, t[k].id);
    EXPECT_EQ(u[k].vol_ns, t[k].vol_ns);
    EXPECT_EQ(u[k].vol_s, t[k].vol_s);
    EXPECT_EQ(u[k].quarter_double_vol, t[k].quarter_double_vol);
    EXPECT_EQ(u[k].genus, t[k].genus);
    EXPECT_EQ(u[k].cork_kind, t[k].cork_kind);
  }
  EXPECT_EQ(dump_table(u), dump_table(t));
}

TEST(Table, Errors) {
  auto load = [](const std::string& text) {
    std::istringstream in(text);
    return load_table(in);
  };
  EXPECT_THROW(load("{"), FormatError);
  EXPECT_THROW(load("{}"), FormatError);
  EXPECT_THROW(load(R"([{"vol": 1}])"), FormatError);
  EXPECT_THROW(load(R"([{"id": "x", "vol": "abc"}])"), FormatError);
  EXPECT_THROW(load(R"([{"id": "x", "cork_kind": "Odd"}])"), FormatError);
  EXPECT_THROW(load(R"([{"id": "x", "vol_ns": -1}])"), NegativeVolume);
  EXPECT_THROW(load(R"([{"id": "x", "vol_ns": "0"}])"), NegativeVolume);
  const auto ok = load(R"([{"id": "x", "vol_ns": 2.5, "genus": 3}])");
  EXPECT_EQ(*ok[0].vol_ns, 2.5L);
  EXPECT_EQ(ok[0].cork_kind, EntryCorkKind::Nonsingular);
}

TEST(Bounds, Nonsingular) {
  const auto t = builtin_table();
  const auto r = bound_nonsingular(get(t, "2.1-nonsingular"), get(t, "3.2-nonsingular"));
  EXPECT_EQ(r.theorem, Theorem::Thm4_1);
  EXPECT_FALSE(r.exact);
  EXPECT_NEAR(static_cast<double>(r.lower_bound), 22.9202272803, kTol);
  EXPECT_NEAR(static_cast<double>(r.lower_bound), 22.92022727, kTol);
  EXPECT_LT(r.lower_bound, 26.236005L);
  EXPECT_EQ(r.lower_bound, bound_nonsingular(get(t, "3.2-nonsingular"), get(t, "2.1-nonsingular")).lower_bound);
  EXPECT_THROW(bound_nonsingular(get(t, "2.1-singular"), get(t, "3.2-nonsingular")), MissingField);
}

TEST(Bounds, Singular) {
  const auto t = builtin_table();
  const auto r = bound_singular(get(t, "2.1-singular"), get(t, "3.2-singular"));
  EXPECT_EQ(r.theorem, Theorem::Cor4_3);
  EXPECT_TRUE(r.exact);
  EXPECT_NEAR(static_cast<double>(r.lower_bound), 13.0404013, kTol);
  EXPECT_EQ(r.lower_bound, bound_singular(get(t, "3.2-singular"), get(t, "2.1-singular")).lower_bound);

  VolumeEntry g2 = get(t, "3.2-singular");
  g2.genus = 2;
  EXPECT_THROW(bound_singular(get(t, "2.1-singular"), g2), MixedGenusUnsupported);
  VolumeEntry a{"a", std::nullopt, std::nullopt, 3.0L, std::nullopt, EntryCorkKind::Singular, 2};
  VolumeEntry b{"b", std::nullopt, std::nullopt, 4.0L, std::nullopt, EntryCorkKind::Singular, 3};
  const auto r2 = bound_singular(a, b);
  EXPECT_EQ(r2.theorem, Theorem::Thm4_2);
  EXPECT_FALSE(r2.exact);
  EXPECT_EQ(r2.lower_bound, 7.0L);
  a.vol_s.reset();
  EXPECT_THROW(bound_singular(a, b), MissingField);
}

TEST(Bounds, Mixed) {
  const auto t = builtin_table();
  const auto r = bound_mixed(get(t, "2.1-singular"), get(t, "3.2-nonsingular"));
  EXPECT_EQ(r.theorem, Theorem::Thm4_4);
  EXPECT_NEAR(static_cast<double>(r.lower_bound), 23.6538016608, 1e-9);
  EXPECT_LT(r.lower_bound, 26.3735L);
  EXPECT_THROW(bound_mixed(get(t, "2.1-nonsingular"), get(t, "3.2-nonsingular")), MissingField);
}

TEST(Bounds, Cusps) {
  EXPECT_NEAR(static_cast<double>(cusp_lower_bound(1)), 1.014941606409653, 1e-14);
  EXPECT_NEAR(static_cast<double>(cusp_lower_bound(2)), 2.029883212819306, 1e-14);
  for (unsigned n = 1; n < 20; ++n) EXPECT_LT(cusp_lower_bound(n), cusp_lower_bound(n + 1));
  EXPECT_THROW(cusp_lower_bound(0), InvalidArgument);
}

TEST(Bounds, ReportDispatch) {
  const auto t = builtin_table();
  const Diagram vt = parse("O1+O2+U1+U2+");
  const Diagram f8 = parse("O1+O3-U2-U1+O2-U3-");
  const Triple s1(vt, Cork{{0, 0}}), n1(vt, Cork{{0, 1}});
  const Triple s2(f8, Cork{{0, 0}}), n2(f8, Cork{{0, 1}});

  const auto a = bound_report(s1, get(t, "2.1-singular"), s2, get(t, "3.2-singular"));
  EXPECT_EQ(a.theorem, Theorem::Cor4_3);
  EXPECT_TRUE(a.exact);
  EXPECT_NEAR(static_cast<double>(a.lower_bound), 13.0404013, kTol);

  const auto b = bound_report(s1, get(t, "2.1-singular"), n2, get(t, "3.2-nonsingular"));
  EXPECT_EQ(b.theorem, Theorem::Thm4_4);
  EXPECT_NEAR(static_cast<double>(b.lower_bound), 23.6538016608, kTol);

  const auto c = bound_report(n2, get(t, "3.2-nonsingular"), s1, get(t, "2.1-singular"));
  EXPECT_EQ(c.theorem, Theorem::Thm4_4);
  EXPECT_EQ(c.lower_bound, b.lower_bound);

  const auto d = bound_report(n1, get(t, "2.1-nonsingular"), n2, get(t, "3.2-nonsingular"));
  EXPECT_EQ(d.theorem, Theorem::Thm4_1);
  EXPECT_NEAR(static_cast<double>(d.lower_bound), 22.9202272803, kTol);
  EXPECT_GE(d.hypotheses.size(), 2u);
}

TEST(FormatReal, Shortest) {
  EXPECT_EQ(format_real(std::strtold("9.4158416835", nullptr)), "9.4158416835");
  EXPECT_EQ(format_real(2.0L), "2");
}
