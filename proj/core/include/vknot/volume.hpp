#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vknot/composition.hpp"

namespace vknot {

using Real = long double;

enum class EntryCorkKind : std::uint8_t { Singular, Nonsingular };

/// One row of volume data. Absent optionals are unknown.
struct VolumeEntry {
  std::string id;
  std::optional<Real> vol;                 ///< volume of the knot complement in S x I
  std::optional<Real> vol_ns;              ///< half the volume of the nonsingular cork double
  std::optional<Real> vol_s;               ///< half the volume of the singular cork double
  std::optional<Real> quarter_double_vol;  ///< quarter volume of the double of D_ns cut along T
  EntryCorkKind cork_kind = EntryCorkKind::Nonsingular;
  std::optional<int> genus;
};

enum class Theorem : std::uint8_t { Thm4_1, Thm4_2, Cor4_3, Thm4_4, CuspBound };

const char* to_string(Theorem t) noexcept;
const char* to_string(EntryCorkKind k) noexcept;

struct BoundReport {
  Theorem theorem = Theorem::Thm4_1;
  Real lower_bound = 0;
  bool exact = false;
  std::vector<std::string> hypotheses;
  std::vector<std::string> inputs;
};

/// Volume of the regular ideal tetrahedron, 1.01494160640965...
Real tet_volume_constant();

/// The six shipped entries.
std::vector<VolumeEntry> builtin_table();

/// Parses the JSON table format. Throws FormatError and NegativeVolume.
std::vector<VolumeEntry> load_table(std::istream& in);
std::vector<VolumeEntry> load_table_file(const std::string& path);

/// JSON text of a table; reals are written as decimal strings.
std::string dump_table(const std::vector<VolumeEntry>& table);

/// Lookup by id, nullptr when absent.
const VolumeEntry* find_entry(const std::vector<VolumeEntry>& table, const std::string& id);

/// Sum of the nonsingular composite volumes. Throws MissingField.
BoundReport bound_nonsingular(const VolumeEntry& e1, const VolumeEntry& e2);

/// Sum of the singular composite volumes; exact sum of volumes when both
/// genera are one. Throws MixedGenusUnsupported and MissingField.
BoundReport bound_singular(const VolumeEntry& e1, const VolumeEntry& e2);

/// Quarter double volume of the singular factor plus vol_ns of the other.
/// Throws MissingField.
BoundReport bound_mixed(const VolumeEntry& singular_entry, const VolumeEntry& nonsingular_entry);

/// n times the tetrahedron constant. Throws InvalidArgument for n == 0.
Real cusp_lower_bound(unsigned n);

/// Dispatches on the cork kinds of the triples.
BoundReport bound_report(const Triple& t1, const VolumeEntry& e1, const Triple& t2, const VolumeEntry& e2);

/// Shortest decimal form that reads back to the same long double.
std::string format_real(Real x);

}  // namespace vknot
