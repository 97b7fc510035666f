#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccc/graph.hpp"
#include "ccc/rational.hpp"

namespace ccc {

struct ZeroVerticesError : std::runtime_error {
  ZeroVerticesError() : std::runtime_error("energy of a graph with no vertices") {}
};

/// Eigenvalue multiset, canonical: values strictly decreasing, multiplicities
/// merged and positive, multiplicities sum to the vertex count.
struct Spectrum {
  struct Entry {
    Rational value;
    std::int64_t mult;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;

  std::int64_t total_multiplicity() const;
  Rational sum() const;  // sum of eigenvalues with multiplicity
  std::string str() const;  // "1^1, 0^1, -1^1"
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

Spectrum make_spectrum(std::vector<Spectrum::Entry> raw);

enum class Matrix { Adjacency, Laplacian, SignlessLaplacian };

const char* matrix_name(Matrix m);  // "A", "L", "Q"

struct UnionSpectra {
  Spectrum a, l, q;
};

/// Spectra of a disjoint union of complete graphs: each part (l, m)
/// contributes m-1 (x l) and -1 (x l(m-1)) to A; 0 (x l) and m (x l(m-1))
/// to L; 2m-2 (x l) and m-2 (x l(m-1)) to Q.
UnionSpectra spectra_of_union(const UnionShape& shape);

std::int64_t edge_count(const UnionShape& shape);

Rational energy(const Spectrum& adjacency);
Rational laplacian_energy(const Spectrum& laplacian, std::int64_t vertex_count,
                          std::int64_t edge_count);
Rational signless_laplacian_energy(const Spectrum& signless,
                                   std::int64_t vertex_count,
                                   std::int64_t edge_count);

bool is_super_integral(const Spectrum& a, const Spectrum& l, const Spectrum& q);

struct EnergyReport {
  std::int64_t vertexCount = 0;
  std::int64_t edgeCount = 0;
  Rational meanDegree;  // 2|E|/|V|
  Rational e, le, leplus;
  friend bool operator==(const EnergyReport&, const EnergyReport&) = default;
};

/// Report computed from a union shape (the brute-force route composes this
/// with complete_union_shape).
EnergyReport energy_report(const UnionShape& shape);

struct NumericCheckReport {
  double maxDeviation = 0.0;
  Matrix worstMatrix = Matrix::Adjacency;
  double worstExact = 0.0;
  double worstNumeric = 0.0;
  bool pass = false;
};

struct MismatchBeyondTolerance : std::runtime_error {
  MismatchBeyondTolerance(const std::string& what, NumericCheckReport report)
      : std::runtime_error(what), report(report) {}
  NumericCheckReport report;
};

inline constexpr double kNumericTolerance = 1e-9;
inline constexpr std::size_t kDefaultNumericVertexCap = 512;

/// Reads CCC_MAX_NUMERIC_VERTICES, falling back to the default cap.
std::size_t numeric_vertex_cap_from_env();

/// Builds dense A, L, Q from the graph, runs a floating-point symmetric
/// eigensolver, and pairs sorted eigenvalues positionally against the exact
/// spectra. Throws MismatchBeyondTolerance past 1e-9, std::invalid_argument
/// past the vertex cap.
NumericCheckReport numeric_cross_check(const CCCGraph& g,
                                       std::size_t vertex_cap = kDefaultNumericVertexCap);

/// Spectrum JSON: [{"value":"p/q","mult":k},...]
std::string spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const std::string& text);

}  // namespace ccc
