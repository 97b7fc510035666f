#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ccc/closed_forms.hpp"
#include "ccc/graph.hpp"
#include "ccc/groups.hpp"
#include "ccc/render.hpp"
#include "ccc/spectra.hpp"
#include "ccc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitDisagree = 3;

struct SpecArgs {
  std::string family;
  std::int64_t n = 0;
  std::int64_t m = 0;
};

ccc::Family parse_family(const std::string& name) {
  using ccc::Family;
  if (name == "d2n") return Family::Dihedral;
  if (name == "q4m") return Family::Dicyclic;
  if (name == "u") return Family::UMeta;
  if (name == "v8n") return Family::VGroup;
  if (name == "sd8n") return Family::SemiDihedral;
  throw std::invalid_argument("unknown family '" + name +
                              "' (expected d2n, q4m, u, v8n, sd8n)");
}

ccc::GroupSpec spec_from_args(const SpecArgs& args) {
  return ccc::make_spec(parse_family(args.family), args.n, args.m);
}

void add_spec_options(CLI::App* cmd, SpecArgs& args) {
  cmd->add_option("--family", args.family, "group family: d2n, q4m, u, v8n, sd8n")
      ->required();
  cmd->add_option("--n", args.n, "parameter n");
  cmd->add_option("--m", args.m, "parameter m (q4m, u)");
}

std::set<ccc::Family> parse_families(const std::string& list) {
  std::set<ccc::Family> fams;
  if (list == "all" || list.empty()) return fams;  // empty set = all
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto token = list.substr(start, comma == std::string::npos
                                              ? std::string::npos
                                              : comma - start);
    if (!token.empty()) fams.insert(parse_family(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (fams.empty()) throw std::invalid_argument("no families given");
  return fams;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact spectra, energies and classification of commuting "
               "conjugacy class graphs for the D2n, Q4m, U(n,m), V8n and "
               "SD8n families"};
  app.require_subcommand(1);

  SpecArgs spectraArgs, energiesArgs, graphArgs;
  std::string spectraMatrix, format = "text";
  bool approx = false;

  auto* cmdSpectra = app.add_subcommand(
      "spectra", "brute-force vs closed-form spectra with a verdict");
  add_spec_options(cmdSpectra, spectraArgs);
  cmdSpectra->add_option("--matrix", spectraMatrix, "A, L or Q (default: all three)");
  cmdSpectra->add_option("--format", format, "json, csv, md, text");

  auto* cmdEnergies = app.add_subcommand(
      "energies", "vertex/edge counts, E, LE, LE+, ordering, classification");
  add_spec_options(cmdEnergies, energiesArgs);
  cmdEnergies->add_option("--format", format, "json, csv, md, text");
  cmdEnergies->add_flag("--approx", approx, "append decimal approximations");

  std::string verifyFamilies = "all";
  std::int64_t maxN = 20, maxM = 0;
  bool includeUm2 = false;
  auto* cmdVerify = app.add_subcommand(
      "verify", "sweep brute force against all closed forms");
  cmdVerify->add_option("--families", verifyFamilies,
                        "all or comma list of d2n,q4m,u,v8n,sd8n");
  cmdVerify->add_option("--max-n", maxN, "upper bound for n");
  cmdVerify->add_option("--max-m", maxM, "upper bound for m (default: --max-n)");
  cmdVerify->add_flag("--include-u-m2", includeUm2,
                      "include the abelian U(n,2) rows as FormulaDiscrepancy");
  cmdVerify->add_option("--format", format, "json or text");

  SpecArgs tableArgs;
  std::int64_t nFrom = 0, nTo = -1, mFrom = 0, mTo = -1;
  auto* cmdTable = app.add_subcommand("table", "one row per parameter value");
  cmdTable->add_option("--family", tableArgs.family, "group family")->required();
  cmdTable->add_option("--n", tableArgs.n, "fixed n (u tables over m)");
  cmdTable->add_option("--m", tableArgs.m, "fixed m (u tables over n)");
  cmdTable->add_option("--n-from", nFrom, "range start for n");
  cmdTable->add_option("--n-to", nTo, "range end for n (inclusive)");
  cmdTable->add_option("--m-from", mFrom, "range start for m");
  cmdTable->add_option("--m-to", mTo, "range end for m (inclusive)");
  cmdTable->add_option("--format", format, "json, csv, md, text");
  cmdTable->add_flag("--approx", approx, "append decimal approximations");

  std::string graphFormat = "json";
  auto* cmdGraph = app.add_subcommand("graph", "export the CCC graph");
  add_spec_options(cmdGraph, graphArgs);
  cmdGraph->add_option("--format", graphFormat, "json (adjacency lists) or edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*cmdSpectra) {
      const auto inst = ccc::analyze_instance(spec_from_args(spectraArgs));
      const auto fmt = ccc::parse_format(format);
      std::optional<ccc::Matrix> which;
      if (spectraMatrix == "A") which = ccc::Matrix::Adjacency;
      else if (spectraMatrix == "L") which = ccc::Matrix::Laplacian;
      else if (spectraMatrix == "Q") which = ccc::Matrix::SignlessLaplacian;
      else if (!spectraMatrix.empty())
        throw std::invalid_argument("unknown matrix '" + spectraMatrix + "'");
      bool agree;
      if (which) {
        std::cout << ccc::render_spectra(inst, *which, fmt);
        agree = (*which == ccc::Matrix::Adjacency && inst.bruteSpectra.a == inst.closedA) ||
                (*which == ccc::Matrix::Laplacian && inst.bruteSpectra.l == inst.closedL) ||
                (*which == ccc::Matrix::SignlessLaplacian && inst.bruteSpectra.q == inst.closedQ);
      } else {
        std::cout << ccc::render_spectra_all(inst, fmt);
        agree = inst.bruteSpectra.a == inst.closedA &&
                inst.bruteSpectra.l == inst.closedL &&
                inst.bruteSpectra.q == inst.closedQ;
      }
      return agree ? kExitOk : kExitDisagree;
    }

    if (*cmdEnergies) {
      const auto inst = ccc::analyze_instance(spec_from_args(energiesArgs));
      std::cout << ccc::render_energies(inst, ccc::parse_format(format), approx);
      return inst.agree ? kExitOk : kExitDisagree;
    }

    if (*cmdVerify) {
      ccc::SweepOptions opt;
      opt.families = parse_families(verifyFamilies);
      opt.maxN = maxN;
      opt.maxM = maxM;
      opt.includeUm2 = includeUm2;
      opt.numericCap = ccc::numeric_vertex_cap_from_env();
      const auto report = ccc::sweep(opt);
      std::cout << (ccc::parse_format(format) == ccc::OutputFormat::Json
                        ? ccc::to_json(report) + "\n"
                        : ccc::to_text(report));
      return report.mismatches.empty() && report.conjectureViolations.empty()
                 ? kExitOk
                 : kExitDisagree;
    }

    if (*cmdTable) {
      const auto family = parse_family(tableArgs.family);
      std::vector<ccc::GroupSpec> specs;
      const bool overN = nTo >= nFrom && nFrom > 0;
      const bool overM = mTo >= mFrom && mFrom > 0;
      if (family == ccc::Family::UMeta) {
        if (overN && !overM && tableArgs.m > 0)
          for (std::int64_t n = nFrom; n <= nTo; ++n)
            specs.push_back(ccc::u_meta(n, tableArgs.m));
        else if (overM && !overN && tableArgs.n > 0)
          for (std::int64_t m = mFrom; m <= mTo; ++m)
            specs.push_back(ccc::u_meta(tableArgs.n, m));
        else
          throw std::invalid_argument(
              "u tables need --n-from/--n-to with fixed --m, or "
              "--m-from/--m-to with fixed --n");
      } else if (family == ccc::Family::Dicyclic) {
        if (!overM) throw std::invalid_argument("q4m tables need --m-from/--m-to");
        for (std::int64_t m = mFrom; m <= mTo; ++m) specs.push_back(ccc::dicyclic(m));
      } else {
        if (!overN) throw std::invalid_argument("tables need --n-from/--n-to");
        for (std::int64_t n = nFrom; n <= nTo; ++n)
          specs.push_back(ccc::make_spec(family, n, 0));
      }
      if (specs.empty()) throw std::invalid_argument("empty parameter range");
      std::vector<ccc::InstanceAnalysis> rows;
      for (const auto& spec : specs) rows.push_back(ccc::analyze_instance(spec));
      std::cout << ccc::render_table(rows, ccc::parse_format(format), approx);
      for (const auto& row : rows)
        if (!row.agree) return kExitDisagree;
      return kExitOk;
    }

    if (*cmdGraph) {
      const auto g = ccc::build_ccc(spec_from_args(graphArgs));
      if (graphFormat == "json") std::cout << ccc::to_adjacency_json(g) << "\n";
      else if (graphFormat == "edges") std::cout << ccc::to_edge_list(g);
      else throw std::invalid_argument("graph format must be json or edges");
      return kExitOk;
    }
  } catch (const ccc::AbelianGroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ccc::UnsupportedParamsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
