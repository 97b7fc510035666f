#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "ccc/groups.hpp"
#include "ccc/spectra.hpp"

namespace ccc {

struct UnsupportedParamsError : std::runtime_error {
  explicit UnsupportedParamsError(const std::string& what) : std::runtime_error(what) {}
};

/// Case-split spectrum straight from the closed-form tables, canonicalized.
/// Throws UnsupportedParamsError for UMeta m=2 (abelian; no graph exists).
Spectrum closed_spectrum(const GroupSpec& spec, Matrix which);

/// Closed-form vertex/edge counts and the three energies, evaluated as exact
/// rationals from the per-branch formula rows.
EnergyReport closed_energies(const GroupSpec& spec);

/// The five orderings of (E, LE+, LE) that occur across the families.
enum class EnergyOrdering {
  AllEqual,  // E = LE+ = LE
  QltEltL,   // LE+ < E < LE
  EltQltL,   // E < LE+ < LE
  EeqQltL,   // E = LE+ < LE
  EltQeqL,   // E < LE+ = LE
};

const char* ordering_name(EnergyOrdering o);     // enum-style label
const char* ordering_relation(EnergyOrdering o); // "E<LE+<LE" style

/// Ordering dictated by the per-family case lists.
EnergyOrdering energy_ordering(const GroupSpec& spec);

/// Exact comparison of a report's three energies, mapped onto the catalogue;
/// nullopt if the combination is not one of the five patterns.
std::optional<EnergyOrdering> pattern_of(const EnergyReport& report);

/// Hyper = strictly above the complete-graph value 2(|V|-1); border = equal.
struct Classification {
  bool hyperE = false, borderE = false;
  bool hyperL = false, borderL = false;
  bool hyperQ = false, borderQ = false;

  std::string str() const;  // "hyperL, borderQ" or "none"
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Classification dictated by the per-family case lists.
Classification classify_closed(const GroupSpec& spec);

/// Compares each energy of an actual report against 2(|V|-1) exactly.
Classification classify_from_energies(const EnergyReport& report);

}  // namespace ccc
