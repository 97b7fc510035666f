#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ccc/closed_forms.hpp"
#include "ccc/graph.hpp"
#include "ccc/groups.hpp"
#include "ccc/spectra.hpp"

namespace ccc {

enum class MismatchCategory {
  Shape,
  SpectrumA,
  SpectrumL,
  SpectrumQ,
  Energy,
  Ordering,
  Classification,
  Presentation,
  Numeric,
  FormulaDiscrepancy,  // known UMeta m=2 rows, recorded under --include-u-m2
};

const char* mismatch_category_name(MismatchCategory c);

struct Mismatch {
  GroupSpec spec;
  MismatchCategory category;
  std::string detail;
};

enum class ConjectureKind { ELessLE, LEplusLessLE };

struct ConjectureViolation {
  GroupSpec spec;
  ConjectureKind which;
};

struct SweepOptions {
  std::set<Family> families;
  std::int64_t maxN = 20;
  std::int64_t maxM = 0;       // 0: fall back to maxN
  bool includeUm2 = false;
  std::size_t numericCap = kDefaultNumericVertexCap;
};

struct SweepReport {
  std::int64_t instancesChecked = 0;
  std::vector<Mismatch> mismatches;
  std::vector<ConjectureViolation> conjectureViolations;
  std::vector<GroupSpec> allThreeEqual;   // E = LE = LE+
  std::vector<GroupSpec> leEqualsLeplus;  // LE+ = LE, not all three
  bool clean() const { return mismatches.empty() && conjectureViolations.empty(); }
};

/// Every legal spec in range per family: Dihedral n in [3,maxN],
/// Dicyclic m in [2,maxM], UMeta n in [2,maxN] x m in [3,maxM]
/// (m=2 only under includeUm2, recorded as FormulaDiscrepancy),
/// VGroup/SemiDihedral n in [2,maxN].
std::vector<GroupSpec> sweep_specs(const SweepOptions& opt);

/// Cross-validates brute force against the closed forms for every spec in
/// range: presentation axioms, shape, A/L/Q spectra, energies, ordering,
/// classification, the numeric eigensolver, and the two energy inequalities.
/// Failures become report entries; nothing aborts the sweep.
SweepReport sweep(const SweepOptions& opt);

struct ConjectureReport {
  std::int64_t instancesChecked = 0;
  std::vector<ConjectureViolation> violations;
  std::vector<GroupSpec> allThreeEqual;
  std::vector<GroupSpec> leEqualsLeplus;
};

/// Checks E <= LE and LE+ <= LE exactly over the range and lists every
/// equality case found.
ConjectureReport check_conjectures(const SweepOptions& opt);

std::string to_text(const SweepReport& report);
std::string to_json(const SweepReport& report);

}  // namespace ccc
