#include "ccc/verify.hpp"

#include "json.hpp"

namespace ccc {

const char* mismatch_category_name(MismatchCategory c) {
  switch (c) {
    case MismatchCategory::Shape: return "Shape";
    case MismatchCategory::SpectrumA: return "SpectrumA";
    case MismatchCategory::SpectrumL: return "SpectrumL";
    case MismatchCategory::SpectrumQ: return "SpectrumQ";
    case MismatchCategory::Energy: return "Energy";
    case MismatchCategory::Ordering: return "Ordering";
    case MismatchCategory::Classification: return "Classification";
    case MismatchCategory::Presentation: return "Presentation";
    case MismatchCategory::Numeric: return "Numeric";
    case MismatchCategory::FormulaDiscrepancy: return "FormulaDiscrepancy";
  }
  return "?";
}

std::vector<GroupSpec> sweep_specs(const SweepOptions& opt) {
  const std::int64_t maxN = opt.maxN;
  const std::int64_t maxM = opt.maxM > 0 ? opt.maxM : opt.maxN;
  std::vector<GroupSpec> specs;
  auto wants = [&](Family f) { return opt.families.empty() || opt.families.count(f); };
  if (wants(Family::Dihedral))
    for (std::int64_t n = 3; n <= maxN; ++n) specs.push_back(dihedral(n));
  if (wants(Family::Dicyclic))
    for (std::int64_t m = 2; m <= maxM; ++m) specs.push_back(dicyclic(m));
  if (wants(Family::UMeta))
    for (std::int64_t n = 2; n <= maxN; ++n)
      for (std::int64_t m = opt.includeUm2 ? 2 : 3; m <= maxM; ++m)
        specs.push_back(u_meta(n, m));
  if (wants(Family::VGroup))
    for (std::int64_t n = 2; n <= maxN; ++n) specs.push_back(v_group(n));
  if (wants(Family::SemiDihedral))
    for (std::int64_t n = 2; n <= maxN; ++n) specs.push_back(semi_dihedral(n));
  return specs;
}

namespace {

void check_instance(const GroupSpec& spec, const SweepOptions& opt,
                    SweepReport& rep) {
  ++rep.instancesChecked;
  auto flag = [&](MismatchCategory cat, std::string detail) {
    rep.mismatches.push_back({spec, cat, std::move(detail)});
  };

  if (spec.family == Family::UMeta && spec.m == 2) {
    // Known bad rows: the group is abelian, yet the formula tables list a
    // 2K_n graph for it. Recorded, never silently trusted.
    const auto claimed = expected_shape(spec, ShapeMode::AsTabulated);
    try {
      build_ccc(spec);
      flag(MismatchCategory::FormulaDiscrepancy,
           "expected AbelianGroup error but a graph was built");
    } catch (const AbelianGroupError&) {
      flag(MismatchCategory::FormulaDiscrepancy,
           "group is abelian (empty vertex set) but the closed form claims " +
               claimed.str());
    }
    return;
  }

  const auto validation = validate_presentation(spec);
  if (!validation.pass)
    for (const auto& v : validation.violations)
      flag(MismatchCategory::Presentation, v);

  CCCGraph graph;
  try {
    graph = build_ccc(spec);
  } catch (const AbelianGroupError& e) {
    flag(MismatchCategory::Presentation, e.what());
    return;
  }

  UnionShape brute_shape;
  try {
    brute_shape = complete_union_shape(graph);
  } catch (const NotUnionOfCliquesError& e) {
    flag(MismatchCategory::Shape, e.what());
    return;
  }
  const auto closed_shape = expected_shape(spec);
  if (brute_shape != closed_shape) {
    flag(MismatchCategory::Shape,
         "brute " + brute_shape.str() + " vs closed " + closed_shape.str());
    return;
  }

  const auto brute = spectra_of_union(brute_shape);
  const struct { Matrix which; const Spectrum& got; MismatchCategory cat; } rows[] = {
      {Matrix::Adjacency, brute.a, MismatchCategory::SpectrumA},
      {Matrix::Laplacian, brute.l, MismatchCategory::SpectrumL},
      {Matrix::SignlessLaplacian, brute.q, MismatchCategory::SpectrumQ},
  };
  for (const auto& row : rows) {
    const auto closed = closed_spectrum(spec, row.which);
    if (row.got != closed)
      flag(row.cat, std::string(matrix_name(row.which)) + " brute {" +
                        row.got.str() + "} vs closed {" + closed.str() + "}");
  }

  const auto brute_report = energy_report(brute_shape);
  if (brute_report.vertexCount != graph.vertex_count() ||
      brute_report.edgeCount != graph.edge_count())
    flag(MismatchCategory::Shape, "shape counts disagree with the graph");
  const auto closed_report = closed_energies(spec);
  if (brute_report != closed_report)
    flag(MismatchCategory::Energy,
         "brute (E=" + brute_report.e.str() + ", LE=" + brute_report.le.str() +
             ", LE+=" + brute_report.leplus.str() + ", V=" +
             std::to_string(brute_report.vertexCount) + ", e=" +
             std::to_string(brute_report.edgeCount) + ") vs closed (E=" +
             closed_report.e.str() + ", LE=" + closed_report.le.str() +
             ", LE+=" + closed_report.leplus.str() + ", V=" +
             std::to_string(closed_report.vertexCount) + ", e=" +
             std::to_string(closed_report.edgeCount) + ")");

  const auto computed_pattern = pattern_of(brute_report);
  const auto table_pattern = energy_ordering(spec);
  if (!computed_pattern)
    flag(MismatchCategory::Ordering, "computed energies fit no catalogued pattern");
  else if (*computed_pattern != table_pattern)
    flag(MismatchCategory::Ordering,
         std::string("computed ") + ordering_name(*computed_pattern) +
             " vs table " + ordering_name(table_pattern));

  const auto computed_class = classify_from_energies(brute_report);
  const auto table_class = classify_closed(spec);
  if (computed_class != table_class)
    flag(MismatchCategory::Classification, "computed {" + computed_class.str() +
                                               "} vs table {" + table_class.str() + "}");

  if (static_cast<std::size_t>(graph.vertex_count()) <= opt.numericCap) {
    try {
      numeric_cross_check(graph, opt.numericCap);
    } catch (const MismatchBeyondTolerance& e) {
      flag(MismatchCategory::Numeric, e.what());
    }
  }

  if (brute_report.e > brute_report.le)
    rep.conjectureViolations.push_back({spec, ConjectureKind::ELessLE});
  if (brute_report.leplus > brute_report.le)
    rep.conjectureViolations.push_back({spec, ConjectureKind::LEplusLessLE});
  const bool all_equal =
      brute_report.e == brute_report.le && brute_report.le == brute_report.leplus;
  if (all_equal) rep.allThreeEqual.push_back(spec);
  else if (brute_report.leplus == brute_report.le) rep.leEqualsLeplus.push_back(spec);
}

}  // namespace

SweepReport sweep(const SweepOptions& opt) {
  SweepReport rep;
  for (const auto& spec : sweep_specs(opt)) check_instance(spec, opt, rep);
  return rep;
}

ConjectureReport check_conjectures(const SweepOptions& opt) {
  SweepOptions inner = opt;
  inner.includeUm2 = false;
  const auto full = sweep(inner);
  return {full.instancesChecked, full.conjectureViolations, full.allThreeEqual,
          full.leEqualsLeplus};
}

std::string to_text(const SweepReport& rep) {
  std::string out = "instances checked: " + std::to_string(rep.instancesChecked) +
                    "\nmismatches: " + std::to_string(rep.mismatches.size()) +
                    "\nconjecture violations: " +
                    std::to_string(rep.conjectureViolations.size()) + "\n";
  for (const auto& m : rep.mismatches)
    out += "  [" + std::string(mismatch_category_name(m.category)) + "] " +
           m.spec.name() + ": " + m.detail + "\n";
  for (const auto& v : rep.conjectureViolations)
    out += "  [Conjecture] " + v.spec.name() + ": " +
           (v.which == ConjectureKind::ELessLE ? "E > LE" : "LE+ > LE") + "\n";
  if (!rep.allThreeEqual.empty()) {
    out += "E = LE+ = LE at:";
    for (const auto& s : rep.allThreeEqual) out += " " + s.name();
    out += "\n";
  }
  if (!rep.leEqualsLeplus.empty()) {
    out += "LE+ = LE (three not equal) at:";
    for (const auto& s : rep.leEqualsLeplus) out += " " + s.name();
    out += "\n";
  }
  return out;
}

namespace {

nlohmann::json spec_json(const GroupSpec& s) {
  nlohmann::json j;
  j["family"] = family_cli_name(s.family);
  j["name"] = s.name();
  if (s.family != Family::Dicyclic) j["n"] = s.n;
  if (s.family == Family::Dicyclic || s.family == Family::UMeta) j["m"] = s.m;
  return j;
}

}  // namespace

std::string to_json(const SweepReport& rep) {
  nlohmann::json j;
  j["instancesChecked"] = rep.instancesChecked;
  auto mm = nlohmann::json::array();
  for (const auto& m : rep.mismatches)
    mm.push_back({{"spec", spec_json(m.spec)},
                  {"category", mismatch_category_name(m.category)},
                  {"detail", m.detail}});
  j["mismatches"] = std::move(mm);
  auto cv = nlohmann::json::array();
  for (const auto& v : rep.conjectureViolations)
    cv.push_back({{"spec", spec_json(v.spec)},
                  {"which", v.which == ConjectureKind::ELessLE ? "E-LE" : "LEplus-LE"}});
  j["conjectureViolations"] = std::move(cv);
  auto eq = nlohmann::json::array();
  for (const auto& s : rep.allThreeEqual) eq.push_back(spec_json(s));
  j["allThreeEqual"] = std::move(eq);
  auto eq2 = nlohmann::json::array();
  for (const auto& s : rep.leEqualsLeplus) eq2.push_back(spec_json(s));
  j["leEqualsLeplus"] = std::move(eq2);
  return j.dump(2);
}

}  // namespace ccc
