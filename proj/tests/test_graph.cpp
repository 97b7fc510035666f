#include "doctest.h"

#include "json.hpp"

#include "ccc/graph.hpp"

using namespace ccc;

TEST_CASE("build_ccc on the golden small groups") {
  const auto d10 = build_ccc(dihedral(5));
  CHECK(d10.vertex_count() == 3);
  CHECK(d10.edge_count() == 1);

  const auto q8 = build_ccc(dicyclic(2));
  CHECK(q8.vertex_count() == 3);
  CHECK(q8.edge_count() == 0);

  const auto v16 = build_ccc(v_group(2));
  CHECK(v16.vertex_count() == 6);
  CHECK(v16.edge_count() == 3);
}

TEST_CASE("build_ccc rejects abelian groups") {
  CHECK_THROWS_AS(build_ccc(u_meta(2, 2)), AbelianGroupError);
  CHECK_THROWS_AS(build_ccc(u_meta(5, 2)), AbelianGroupError);
}

TEST_CASE("make_shape canonicalization") {
  const auto s = make_shape({{1, 2}, {2, 0}, {0, 9}, {1, 1}, {1, 2}, {2, 1}});
  REQUIRE(s.parts.size() == 2);
  CHECK(s.parts[0] == UnionShape::Part{2, 2});
  CHECK(s.parts[1] == UnionShape::Part{3, 1});
  CHECK(s.vertex_count() == 7);
  CHECK(s.str() == "2K2 + 3K1");
}

TEST_CASE("complete_union_shape recognizes the golden shapes") {
  CHECK(complete_union_shape(build_ccc(dihedral(5))) ==
        make_shape({{1, 2}, {1, 1}}));
  CHECK(complete_union_shape(build_ccc(dicyclic(2))) == make_shape({{3, 1}}));
  CHECK(complete_union_shape(build_ccc(semi_dihedral(3))) == make_shape({{2, 4}}));
  CHECK(complete_union_shape(build_ccc(v_group(2))) == make_shape({{3, 2}}));
}

TEST_CASE("complete_union_shape flags a non-clique component") {
  CCCGraph path;  // 0 - 1 - 2, not complete
  path.spec = dihedral(5);
  path.classes.resize(3);
  path.adj = {{false, true, false}, {true, false, true}, {false, true, false}};
  CHECK_THROWS_AS(complete_union_shape(path), NotUnionOfCliquesError);
  try {
    complete_union_shape(path);
  } catch (const NotUnionOfCliquesError& e) {
    CHECK(e.component == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("expected_shape tables") {
  CHECK(expected_shape(dihedral(8)) == make_shape({{1, 3}, {2, 1}}));
  CHECK(expected_shape(u_meta(2, 5)) == make_shape({{1, 4}, {1, 2}}));
  CHECK(expected_shape(v_group(3)) == make_shape({{1, 5}, {2, 1}}));
  CHECK(expected_shape(dihedral(3)) == make_shape({{2, 1}}));
  CHECK(expected_shape(dicyclic(3)) == make_shape({{2, 2}}));
  // m = 2 mod 4: one K_{2n} clique, not two K_n
  CHECK(expected_shape(u_meta(2, 6)) == make_shape({{2, 4}}));
  CHECK(expected_shape(u_meta(2, 10)) == make_shape({{1, 8}, {1, 4}}));
  CHECK_THROWS_AS(expected_shape(u_meta(3, 2)), AbelianGroupError);
  CHECK(expected_shape(u_meta(3, 2), ShapeMode::AsTabulated) ==
        make_shape({{2, 3}}));
}

TEST_CASE("brute shape equals the closed-form shape on a mixed sample") {
  for (const auto& spec :
       {dihedral(7), dihedral(12), dihedral(14), dicyclic(5), dicyclic(8),
        u_meta(2, 6), u_meta(3, 7), u_meta(2, 8), u_meta(2, 10), v_group(4),
        v_group(5), semi_dihedral(4), semi_dihedral(5)})
    CHECK(complete_union_shape(build_ccc(spec)) == expected_shape(spec));
}

TEST_CASE("representative-fixing adjacency equals the full double scan") {
  std::vector<GroupSpec> specs = {dihedral(9),  dihedral(10),     dicyclic(4),
                                  dicyclic(7),  u_meta(2, 5),     u_meta(3, 6),
                                  v_group(3),   v_group(4),       semi_dihedral(3),
                                  semi_dihedral(4)};
  // plus the full small-parameter box for each family
  for (std::int64_t n = 3; n <= 12; ++n) specs.push_back(dihedral(n));
  for (std::int64_t m = 2; m <= 10; ++m) specs.push_back(dicyclic(m));
  for (std::int64_t n = 2; n <= 5; ++n)
    for (std::int64_t m = 3; m <= 8; ++m) specs.push_back(u_meta(n, m));
  for (std::int64_t n = 2; n <= 8; ++n) {
    specs.push_back(v_group(n));
    specs.push_back(semi_dihedral(n));
  }
  for (const auto& spec : specs) {
    CAPTURE(spec.name());
    const auto fast = build_ccc(spec, AdjacencyScan::RepAndMembers);
    const auto full = build_ccc(spec, AdjacencyScan::FullPairs);
    CHECK(fast.adj == full.adj);
  }
}

TEST_CASE("adjacency does not depend on the representative choice") {
  for (const auto& spec : {dihedral(8), v_group(2), u_meta(2, 6)}) {
    const auto g = build_ccc(spec);
    for (int i = 0; i < g.vertex_count(); ++i)
      for (int j = i + 1; j < g.vertex_count(); ++j)
        for (const auto& rep : g.classes[i].members) {
          bool hit = false;
          for (const auto& other : g.classes[j].members)
            if (commute(spec, rep, other)) { hit = true; break; }
          // fixing any member of class i sees the same relation
          CHECK(hit == static_cast<bool>(g.adj[i][j]));
        }
  }
}

TEST_CASE("edge counts match the shape") {
  for (const auto& spec : {dihedral(11), dicyclic(6), u_meta(3, 5), v_group(4),
                           semi_dihedral(5)}) {
    const auto g = build_ccc(spec);
    const auto shape = complete_union_shape(g);
    std::int64_t expected = 0;
    for (const auto& p : shape.parts) expected += p.count * p.size * (p.size - 1) / 2;
    CHECK(g.edge_count() == expected);
  }
}

TEST_CASE("graph exports") {
  const auto g = build_ccc(dihedral(5));
  // vertex order by class representative: reflections (0,1), then x, x^2
  CHECK(to_edge_list(g) == "1 2\n");

  const auto parsed = nlohmann::json::parse(to_adjacency_json(g));
  CHECK(parsed.at("group") == "D10");
  CHECK(parsed.at("vertexCount") == 3);
  CHECK(parsed.at("adjacency").size() == 3);
  CHECK(parsed.at("adjacency")[0].empty());
  CHECK(parsed.at("adjacency")[1] == nlohmann::json::array({2}));
  CHECK(parsed.at("labels").size() == 3);
}
