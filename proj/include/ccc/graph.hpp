#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccc/groups.hpp"

namespace ccc {

struct AbelianGroupError : std::runtime_error {
  explicit AbelianGroupError(const std::string& what) : std::runtime_error(what) {}
};

struct NotUnionOfCliquesError : std::runtime_error {
  NotUnionOfCliquesError(const std::string& what, std::vector<int> component)
      : std::runtime_error(what), component(std::move(component)) {}
  std::vector<int> component;
};

/// Commuting conjugacy class graph: one vertex per non-central conjugacy
/// class, ordered by class representative; two classes adjacent when some
/// pair of their members commutes.
struct CCCGraph {
  GroupSpec spec;
  std::vector<ConjugacyClass> classes;  // the non-central classes, in vertex order
  std::vector<std::vector<bool>> adj;   // symmetric, false diagonal

  int vertex_count() const { return static_cast<int>(classes.size()); }
  std::int64_t edge_count() const;
};

enum class AdjacencyScan {
  RepAndMembers,  // fix a representative on one side, scan the other class
  FullPairs,      // scan all member pairs; used to certify the optimization
};

/// Throws AbelianGroupError when the group has no non-central classes
/// (UMeta with m = 2).
CCCGraph build_ccc(const GroupSpec& spec,
                   AdjacencyScan scan = AdjacencyScan::RepAndMembers);

/// Disjoint union of complete graphs, canonical: sizes strictly decreasing.
struct UnionShape {
  struct Part {
    std::int64_t count;  // number of copies
    std::int64_t size;   // vertices per copy
    friend bool operator==(const Part&, const Part&) = default;
  };
  std::vector<Part> parts;

  std::int64_t vertex_count() const;
  std::string str() const;  // e.g. "K4 + 2K1"
  friend bool operator==(const UnionShape&, const UnionShape&) = default;
};

/// Canonicalizes a raw (count,size) list: merges equal sizes, drops empty
/// parts, orders sizes descending.
UnionShape make_shape(std::vector<UnionShape::Part> raw);

/// Partitions the graph into connected components and certifies each one is
/// a clique; throws NotUnionOfCliquesError (with the offending component)
/// otherwise.
UnionShape complete_union_shape(const CCCGraph& g);

enum class ShapeMode {
  Strict,      // UMeta m=2 raises AbelianGroupError
  AsTabulated  // returns the table row even for UMeta m=2 (no real graph)
};

/// Closed-form shape of the CCC graph for a family instance.
UnionShape expected_shape(const GroupSpec& spec, ShapeMode mode = ShapeMode::Strict);

/// Adjacency-list JSON: {"group","vertexCount","labels","adjacency"}.
std::string to_adjacency_json(const CCCGraph& g);

/// One "u v" pair per line, 0-based vertex indices, u < v, LF endings.
std::string to_edge_list(const CCCGraph& g);

}  // namespace ccc
