#include "ccc/render.hpp"

#include <sstream>

#include "json.hpp"

namespace ccc {

namespace {

using nlohmann::json;

std::string approx_str(const Rational& r) {
  std::ostringstream os;
  os.precision(6);
  os << r.to_double();
  return os.str();
}

json spec_json(const GroupSpec& s) {
  json j;
  j["family"] = family_cli_name(s.family);
  j["name"] = s.name();
  if (s.family != Family::Dicyclic) j["n"] = s.n;
  if (s.family == Family::Dicyclic || s.family == Family::UMeta) j["m"] = s.m;
  return j;
}

json spectrum_json(const Spectrum& s) {
  auto arr = json::array();
  for (const auto& e : s.entries)
    arr.push_back({{"value", e.value.str()}, {"mult", e.mult}});
  return arr;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) { if (c == '"') out += '"'; out += c; }
  return out + "\"";
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ",";
    line += csv_escape(fields[i]);
  }
  return line + "\n";
}

std::string join_md(const std::vector<std::string>& fields) {
  std::string line = "|";
  for (const auto& f : fields) line += " " + f + " |";
  return line + "\n";
}

const Spectrum& closed_of(const InstanceAnalysis& inst, Matrix which) {
  switch (which) {
    case Matrix::Adjacency: return inst.closedA;
    case Matrix::Laplacian: return inst.closedL;
    case Matrix::SignlessLaplacian: return inst.closedQ;
  }
  throw std::logic_error("unreachable");
}

const Spectrum& brute_of(const InstanceAnalysis& inst, Matrix which) {
  switch (which) {
    case Matrix::Adjacency: return inst.bruteSpectra.a;
    case Matrix::Laplacian: return inst.bruteSpectra.l;
    case Matrix::SignlessLaplacian: return inst.bruteSpectra.q;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "md" || name == "markdown") return OutputFormat::Markdown;
  if (name == "text") return OutputFormat::Text;
  throw std::invalid_argument("unknown format '" + name + "'");
}

InstanceAnalysis analyze_instance(const GroupSpec& spec) {
  InstanceAnalysis inst;
  inst.spec = spec;
  const auto graph = build_ccc(spec);
  inst.shape = complete_union_shape(graph);
  inst.bruteSpectra = spectra_of_union(inst.shape);
  inst.closedA = closed_spectrum(spec, Matrix::Adjacency);
  inst.closedL = closed_spectrum(spec, Matrix::Laplacian);
  inst.closedQ = closed_spectrum(spec, Matrix::SignlessLaplacian);
  inst.report = energy_report(inst.shape);
  inst.closedReport = closed_energies(spec);
  inst.ordering = energy_ordering(spec);
  inst.classification = classify_closed(spec);
  inst.superIntegral = is_super_integral(inst.bruteSpectra.a, inst.bruteSpectra.l,
                                         inst.bruteSpectra.q);

  if (inst.shape != expected_shape(spec))
    inst.disagreements.push_back("shape: brute " + inst.shape.str() + " vs closed " +
                                 expected_shape(spec).str());
  for (Matrix which : {Matrix::Adjacency, Matrix::Laplacian, Matrix::SignlessLaplacian})
    if (brute_of(inst, which) != closed_of(inst, which))
      inst.disagreements.push_back(std::string(matrix_name(which)) + "-spectrum differs");
  if (inst.report != inst.closedReport)
    inst.disagreements.push_back("energies differ");
  const auto computed = pattern_of(inst.report);
  if (!computed || *computed != inst.ordering)
    inst.disagreements.push_back("ordering differs");
  if (classify_from_energies(inst.report) != inst.classification)
    inst.disagreements.push_back("classification differs");
  inst.agree = inst.disagreements.empty();
  return inst;
}

std::string render_spectra(const InstanceAnalysis& inst, Matrix which,
                           OutputFormat format) {
  const Spectrum &brute = brute_of(inst, which), &closed = closed_of(inst, which);
  const bool agree = brute == closed;
  switch (format) {
    case OutputFormat::Json: {
      json j;
      j["group"] = spec_json(inst.spec);
      j["matrix"] = matrix_name(which);
      j["brute"] = spectrum_json(brute);
      j["closed"] = spectrum_json(closed);
      j["agree"] = agree;
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      return join_csv({"matrix", "brute", "closed", "agree"}) +
             join_csv({matrix_name(which), brute.str(), closed.str(),
                       agree ? "AGREE" : "DISAGREE"});
    case OutputFormat::Markdown:
      return join_md({"matrix", "brute", "closed", "verdict"}) +
             join_md({"---", "---", "---", "---"}) +
             join_md({matrix_name(which), brute.str(), closed.str(),
                      agree ? "AGREE" : "DISAGREE"});
    case OutputFormat::Text:
      if (agree) return brute.str() + " | AGREE\n";
      return brute.str() + " | closed: " + closed.str() + " | DISAGREE\n";
  }
  throw std::logic_error("unreachable");
}

std::string render_spectra_all(const InstanceAnalysis& inst, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json j;
    j["group"] = spec_json(inst.spec);
    bool agree = true;
    json matrices;
    for (Matrix which : {Matrix::Adjacency, Matrix::Laplacian, Matrix::SignlessLaplacian}) {
      const Spectrum &brute = brute_of(inst, which), &closed = closed_of(inst, which);
      matrices[matrix_name(which)] = {{"brute", spectrum_json(brute)},
                                      {"closed", spectrum_json(closed)},
                                      {"agree", brute == closed}};
      agree = agree && brute == closed;
    }
    j["matrices"] = std::move(matrices);
    j["agree"] = agree;
    return j.dump(2) + "\n";
  }
  std::string out;
  if (format == OutputFormat::Csv) out += join_csv({"matrix", "brute", "closed", "agree"});
  if (format == OutputFormat::Markdown)
    out += join_md({"matrix", "brute", "closed", "verdict"}) +
           join_md({"---", "---", "---", "---"});
  for (Matrix which : {Matrix::Adjacency, Matrix::Laplacian, Matrix::SignlessLaplacian}) {
    const Spectrum &brute = brute_of(inst, which), &closed = closed_of(inst, which);
    const bool agree = brute == closed;
    switch (format) {
      case OutputFormat::Csv:
        out += join_csv({matrix_name(which), brute.str(), closed.str(),
                         agree ? "AGREE" : "DISAGREE"});
        break;
      case OutputFormat::Markdown:
        out += join_md({matrix_name(which), brute.str(), closed.str(),
                        agree ? "AGREE" : "DISAGREE"});
        break;
      default:
        out += std::string(matrix_name(which)) + ": " +
               (agree ? brute.str() + " | AGREE"
                      : brute.str() + " | closed: " + closed.str() + " | DISAGREE") +
               "\n";
    }
  }
  return out;
}

namespace {

json energies_json(const InstanceAnalysis& inst, bool approx) {
  json j;
  j["group"] = spec_json(inst.spec);
  j["shape"] = inst.shape.str();
  j["vertexCount"] = inst.report.vertexCount;
  j["edgeCount"] = inst.report.edgeCount;
  j["meanDegree"] = inst.report.meanDegree.str();
  j["E"] = inst.report.e.str();
  j["LE"] = inst.report.le.str();
  j["LEplus"] = inst.report.leplus.str();
  j["ordering"] = ordering_relation(inst.ordering);
  j["classification"] = inst.classification.str();
  j["superIntegral"] = inst.superIntegral;
  j["agree"] = inst.agree;
  if (approx)
    j["approx"] = {{"E", inst.report.e.to_double()},
                   {"LE", inst.report.le.to_double()},
                   {"LEplus", inst.report.leplus.to_double()}};
  return j;
}

std::vector<std::string> table_header(bool approx) {
  std::vector<std::string> h = {"group", "shape", "V", "E(edges)", "energy",
                                "LE", "LE+", "ordering", "classification"};
  if (approx) { h.push_back("energy~"); h.push_back("LE~"); h.push_back("LE+~"); }
  return h;
}

std::vector<std::string> table_row(const InstanceAnalysis& inst, bool approx) {
  std::vector<std::string> r = {
      inst.spec.name(), inst.shape.str(), std::to_string(inst.report.vertexCount),
      std::to_string(inst.report.edgeCount), inst.report.e.str(),
      inst.report.le.str(), inst.report.leplus.str(),
      ordering_relation(inst.ordering), inst.classification.str()};
  if (approx) {
    r.push_back(approx_str(inst.report.e));
    r.push_back(approx_str(inst.report.le));
    r.push_back(approx_str(inst.report.leplus));
  }
  return r;
}

}  // namespace

std::string render_energies(const InstanceAnalysis& inst, OutputFormat format,
                            bool approx) {
  switch (format) {
    case OutputFormat::Json:
      return energies_json(inst, approx).dump(2) + "\n";
    case OutputFormat::Csv:
      return join_csv(table_header(approx)) + join_csv(table_row(inst, approx));
    case OutputFormat::Markdown: {
      auto header = table_header(approx);
      std::vector<std::string> sep(header.size(), "---");
      return join_md(header) + join_md(sep) + join_md(table_row(inst, approx));
    }
    case OutputFormat::Text: {
      std::string out;
      out += inst.spec.name() + ": " + inst.shape.str() + "\n";
      out += "|V| = " + std::to_string(inst.report.vertexCount) +
             ", |E| = " + std::to_string(inst.report.edgeCount) +
             ", mean degree = " + inst.report.meanDegree.str() + "\n";
      auto line = [&](const char* label, const Rational& v) {
        out += std::string(label) + " = " + v.str();
        if (approx) out += " (approx " + approx_str(v) + ")";
        out += "\n";
      };
      line("E", inst.report.e);
      line("LE", inst.report.le);
      line("LE+", inst.report.leplus);
      out += "ordering: " + std::string(ordering_relation(inst.ordering)) + "\n";
      out += "classification: " + inst.classification.str() + "\n";
      out += "super integral: " + std::string(inst.superIntegral ? "yes" : "no") + "\n";
      out += inst.agree ? "closed forms: AGREE\n" : "closed forms: DISAGREE\n";
      for (const auto& d : inst.disagreements) out += "  " + d + "\n";
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::string render_table(const std::vector<InstanceAnalysis>& rows,
                         OutputFormat format, bool approx) {
  if (format == OutputFormat::Json) {
    auto arr = json::array();
    for (const auto& inst : rows) arr.push_back(energies_json(inst, approx));
    return arr.dump(2) + "\n";
  }
  std::string out;
  const auto header = table_header(approx);
  if (format == OutputFormat::Csv) out += join_csv(header);
  if (format == OutputFormat::Markdown) {
    out += join_md(header);
    std::vector<std::string> sep(header.size(), "---");
    out += join_md(sep);
  }
  for (const auto& inst : rows) {
    const auto row = table_row(inst, approx);
    switch (format) {
      case OutputFormat::Csv: out += join_csv(row); break;
      case OutputFormat::Markdown: out += join_md(row); break;
      default: {
        for (std::size_t i = 0; i < row.size(); ++i)
          out += (i ? "  " : "") + header[i] + "=" + row[i];
        out += "\n";
      }
    }
  }
  return out;
}

}  // namespace ccc
