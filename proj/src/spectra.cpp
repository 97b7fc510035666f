#include "ccc/spectra.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include <Eigen/Dense>

#include "json.hpp"

namespace ccc {

std::int64_t Spectrum::total_multiplicity() const {
  std::int64_t t = 0;
  for (const auto& e : entries) t += e.mult;
  return t;
}

Rational Spectrum::sum() const {
  Rational s;
  for (const auto& e : entries) s += e.value * Rational(e.mult);
  return s;
}

std::string Spectrum::str() const {
  std::string out;
  for (const auto& e : entries) {
    if (!out.empty()) out += ", ";
    out += e.value.str() + "^" + std::to_string(e.mult);
  }
  return out.empty() ? "(empty)" : out;
}

Spectrum make_spectrum(std::vector<Spectrum::Entry> raw) {
  std::map<Rational, std::int64_t, std::greater<>> merged;
  for (const auto& e : raw)
    if (e.mult > 0) merged[e.value] += e.mult;
  Spectrum s;
  for (const auto& [value, mult] : merged) s.entries.push_back({value, mult});
  return s;
}

const char* matrix_name(Matrix m) {
  switch (m) {
    case Matrix::Adjacency: return "A";
    case Matrix::Laplacian: return "L";
    case Matrix::SignlessLaplacian: return "Q";
  }
  return "?";
}

UnionSpectra spectra_of_union(const UnionShape& shape) {
  std::vector<Spectrum::Entry> a, l, q;
  for (const auto& p : shape.parts) {
    const std::int64_t band = p.count * (p.size - 1);
    a.push_back({Rational(p.size - 1), p.count});
    a.push_back({Rational(-1), band});
    l.push_back({Rational(0), p.count});
    l.push_back({Rational(p.size), band});
    q.push_back({Rational(2 * p.size - 2), p.count});
    q.push_back({Rational(p.size - 2), band});
  }
  return {make_spectrum(std::move(a)), make_spectrum(std::move(l)),
          make_spectrum(std::move(q))};
}

std::int64_t edge_count(const UnionShape& shape) {
  std::int64_t e = 0;
  for (const auto& p : shape.parts) e += p.count * p.size * (p.size - 1) / 2;
  return e;
}

namespace {

Rational deviation_sum(const Spectrum& s, const Rational& center) {
  Rational total;
  for (const auto& e : s.entries)
    total += (e.value - center).abs() * Rational(e.mult);
  return total;
}

}  // namespace

Rational energy(const Spectrum& adjacency) {
  return deviation_sum(adjacency, Rational(0));
}

Rational laplacian_energy(const Spectrum& laplacian, std::int64_t vertex_count,
                          std::int64_t edge_count) {
  if (vertex_count == 0) throw ZeroVerticesError();
  return deviation_sum(laplacian, Rational(2 * edge_count, vertex_count));
}

Rational signless_laplacian_energy(const Spectrum& signless,
                                   std::int64_t vertex_count,
                                   std::int64_t edge_count) {
  if (vertex_count == 0) throw ZeroVerticesError();
  return deviation_sum(signless, Rational(2 * edge_count, vertex_count));
}

bool is_super_integral(const Spectrum& a, const Spectrum& l, const Spectrum& q) {
  for (const Spectrum* s : {&a, &l, &q})
    for (const auto& e : s->entries)
      if (!e.value.is_integer()) return false;
  return true;
}

EnergyReport energy_report(const UnionShape& shape) {
  EnergyReport rep;
  rep.vertexCount = shape.vertex_count();
  if (rep.vertexCount == 0) throw ZeroVerticesError();
  rep.edgeCount = edge_count(shape);
  rep.meanDegree = Rational(2 * rep.edgeCount, rep.vertexCount);
  const auto sp = spectra_of_union(shape);
  rep.e = energy(sp.a);
  rep.le = laplacian_energy(sp.l, rep.vertexCount, rep.edgeCount);
  rep.leplus = signless_laplacian_energy(sp.q, rep.vertexCount, rep.edgeCount);
  return rep;
}

std::size_t numeric_vertex_cap_from_env() {
  if (const char* v = std::getenv("CCC_MAX_NUMERIC_VERTICES")) {
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return kDefaultNumericVertexCap;
}

namespace {

std::vector<double> expand_descending(const Spectrum& s) {
  std::vector<double> out;
  for (const auto& e : s.entries)
    out.insert(out.end(), static_cast<std::size_t>(e.mult), e.value.to_double());
  return out;  // entries are already in decreasing order
}

void check_matrix(const Eigen::MatrixXd& mat, const Spectrum& exact, Matrix which,
                  NumericCheckReport& rep) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed to converge");
  const auto exact_vals = expand_descending(exact);
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
  for (std::size_t i = 0; i < exact_vals.size(); ++i) {
    const double numeric = ev[static_cast<Eigen::Index>(exact_vals.size() - 1 - i)];
    const double dev = std::abs(numeric - exact_vals[i]);
    if (dev > rep.maxDeviation) {
      rep.maxDeviation = dev;
      rep.worstMatrix = which;
      rep.worstExact = exact_vals[i];
      rep.worstNumeric = numeric;
    }
  }
}

}  // namespace

NumericCheckReport numeric_cross_check(const CCCGraph& g, std::size_t vertex_cap) {
  const int k = g.vertex_count();
  if (static_cast<std::size_t>(k) > vertex_cap)
    throw std::invalid_argument("numeric_cross_check: vertex count " +
                                std::to_string(k) + " exceeds cap " +
                                std::to_string(vertex_cap));
  const auto exact = spectra_of_union(complete_union_shape(g));

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
  Eigen::VectorXd deg = Eigen::VectorXd::Zero(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (g.adj[i][j]) { a(i, j) = 1.0; deg[i] += 1.0; }
  Eigen::MatrixXd d = deg.asDiagonal();

  NumericCheckReport rep;
  check_matrix(a, exact.a, Matrix::Adjacency, rep);
  check_matrix(d - a, exact.l, Matrix::Laplacian, rep);
  check_matrix(d + a, exact.q, Matrix::SignlessLaplacian, rep);
  rep.pass = rep.maxDeviation <= kNumericTolerance;
  if (!rep.pass)
    throw MismatchBeyondTolerance(
        g.spec.name() + ": numeric eigenvalue deviates by " +
            std::to_string(rep.maxDeviation) + " on " +
            matrix_name(rep.worstMatrix),
        rep);
  return rep;
}

std::string spectrum_to_json(const Spectrum& s) {
  auto arr = nlohmann::json::array();
  for (const auto& e : s.entries)
    arr.push_back({{"value", e.value.str()}, {"mult", e.mult}});
  return arr.dump();
}

Spectrum spectrum_from_json(const std::string& text) {
  auto arr = nlohmann::json::parse(text);
  std::vector<Spectrum::Entry> raw;
  for (const auto& item : arr)
    raw.push_back({Rational::parse(item.at("value").get<std::string>()),
                   item.at("mult").get<std::int64_t>()});
  return make_spectrum(std::move(raw));
}

}  // namespace ccc
