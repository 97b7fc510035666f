#pragma once

#include <string>
#include <vector>

#include "ccc/closed_forms.hpp"
#include "ccc/graph.hpp"
#include "ccc/spectra.hpp"

namespace ccc {

enum class OutputFormat { Json, Csv, Markdown, Text };

/// Accepts "json", "csv", "md", "markdown", "text"; throws invalid_argument.
OutputFormat parse_format(const std::string& name);

/// One fully analysed instance: the brute-force route next to the closed
/// forms, with an agreement verdict. Construction throws AbelianGroupError
/// for UMeta m=2.
struct InstanceAnalysis {
  GroupSpec spec;
  UnionShape shape;  // brute force
  UnionSpectra bruteSpectra;
  Spectrum closedA, closedL, closedQ;
  EnergyReport report;        // brute force
  EnergyReport closedReport;  // formula tables
  EnergyOrdering ordering;    // table entry; verified against the report
  Classification classification;
  bool superIntegral = false;
  bool agree = false;
  std::vector<std::string> disagreements;
};

InstanceAnalysis analyze_instance(const GroupSpec& spec);

std::string render_spectra(const InstanceAnalysis& inst, Matrix which,
                           OutputFormat format);
std::string render_spectra_all(const InstanceAnalysis& inst, OutputFormat format);
std::string render_energies(const InstanceAnalysis& inst, OutputFormat format,
                            bool approx = false);
std::string render_table(const std::vector<InstanceAnalysis>& rows,
                         OutputFormat format, bool approx = false);

}  // namespace ccc
