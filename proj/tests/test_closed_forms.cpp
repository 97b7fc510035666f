#include "doctest.h"

#include "ccc/closed_forms.hpp"
#include "ccc/graph.hpp"

using namespace ccc;

TEST_CASE("closed_spectrum case tables") {
  CHECK(closed_spectrum(dihedral(5), Matrix::Adjacency) ==
        make_spectrum({{Rational(1), 1}, {Rational(0), 1}, {Rational(-1), 1}}));
  // Q20 is K2 + K4: 2m-4 = 6 once, m-3 = 2 with multiplicity m-2, plus the
  // K2 band {2, 0}
  CHECK(closed_spectrum(dicyclic(5), Matrix::SignlessLaplacian) ==
        make_spectrum({{Rational(6), 1}, {Rational(2), 4}, {Rational(0), 1}}));
  CHECK(closed_spectrum(v_group(2), Matrix::Laplacian) ==
        make_spectrum({{Rational(2), 3}, {Rational(0), 3}}));
  CHECK_THROWS_AS(closed_spectrum(u_meta(2, 2), Matrix::Adjacency),
                  UnsupportedParamsError);
}

TEST_CASE("closed_spectrum degenerate parameters collapse cleanly") {
  CHECK(closed_spectrum(dihedral(3), Matrix::Adjacency) ==
        make_spectrum({{Rational(0), 2}}));
  CHECK(closed_spectrum(dihedral(4), Matrix::SignlessLaplacian) ==
        make_spectrum({{Rational(0), 3}}));
  CHECK(closed_spectrum(dicyclic(2), Matrix::Laplacian) ==
        make_spectrum({{Rational(0), 3}}));
}

TEST_CASE("closed_energies golden rows") {
  const auto q20 = closed_energies(dicyclic(5));
  CHECK(q20.e == Rational(8));
  CHECK(q20.le == Rational(10));
  CHECK(q20.leplus == Rational(22, 3));

  const auto v16 = closed_energies(v_group(2));
  CHECK(v16.e == Rational(6));
  CHECK(v16.le == Rational(6));
  CHECK(v16.leplus == Rational(6));

  const auto u27 = closed_energies(u_meta(2, 7));
  CHECK(u27.e == Rational(12));
  CHECK(u27.le == Rational(20));
  CHECK(u27.leplus == Rational(12));

  const auto d6 = closed_energies(dihedral(3));
  CHECK(d6.e == Rational(0));
  CHECK(d6.le == Rational(0));
  CHECK(d6.leplus == Rational(0));

  CHECK_THROWS_AS(closed_energies(u_meta(4, 2)), UnsupportedParamsError);
}

TEST_CASE("closed_energies for the U m=2 mod 4 branch") {
  // two equal cliques at m=6
  const auto u26 = closed_energies(u_meta(2, 6));
  CHECK(u26.vertexCount == 8);
  CHECK(u26.e == Rational(12));
  CHECK(u26.le == Rational(12));
  CHECK(u26.leplus == Rational(12));
  // K8 + K4 at (2,10); LE+ hits the complete-graph value exactly
  const auto u210 = closed_energies(u_meta(2, 10));
  CHECK(u210.vertexCount == 12);
  CHECK(u210.edgeCount == 34);
  CHECK(u210.e == Rational(20));
  CHECK(u210.le == Rational(98, 3));
  CHECK(u210.leplus == Rational(22));
}

TEST_CASE("energy_ordering case lists") {
  CHECK(energy_ordering(dihedral(10)) == EnergyOrdering::QltEltL);
  CHECK(energy_ordering(dicyclic(7)) == EnergyOrdering::EeqQltL);
  CHECK(energy_ordering(dihedral(5)) == EnergyOrdering::EltQeqL);
  CHECK(energy_ordering(dihedral(14)) == EnergyOrdering::EeqQltL);
  CHECK(energy_ordering(dihedral(3)) == EnergyOrdering::AllEqual);
  CHECK(energy_ordering(v_group(2)) == EnergyOrdering::AllEqual);
  CHECK(energy_ordering(v_group(3)) == EnergyOrdering::EltQltL);
  CHECK(energy_ordering(semi_dihedral(3)) == EnergyOrdering::AllEqual);
  CHECK(energy_ordering(u_meta(2, 6)) == EnergyOrdering::AllEqual);
  CHECK(energy_ordering(u_meta(2, 10)) == EnergyOrdering::EltQltL);
  CHECK(energy_ordering(u_meta(2, 5)) == EnergyOrdering::QltEltL);
  CHECK(energy_ordering(u_meta(4, 5)) == EnergyOrdering::EltQltL);
  CHECK(ordering_relation(EnergyOrdering::EeqQltL) == std::string("E=LE+<LE"));
}

TEST_CASE("pattern_of covers the catalogue") {
  auto report = [](std::int64_t v, Rational e, Rational q, Rational l) {
    EnergyReport r;
    r.vertexCount = v;
    r.e = e;
    r.leplus = q;
    r.le = l;
    return r;
  };
  CHECK(pattern_of(report(3, 4, 4, 4)) == EnergyOrdering::AllEqual);
  CHECK(pattern_of(report(3, 5, 4, 6)) == EnergyOrdering::QltEltL);
  CHECK(pattern_of(report(3, 3, 4, 6)) == EnergyOrdering::EltQltL);
  CHECK(pattern_of(report(3, 4, 4, 6)) == EnergyOrdering::EeqQltL);
  CHECK(pattern_of(report(3, 3, 6, 6)) == EnergyOrdering::EltQeqL);
  CHECK_FALSE(pattern_of(report(3, 6, 4, 3)).has_value());
}

TEST_CASE("classify_closed case lists") {
  Classification none;
  CHECK(classify_closed(dihedral(8)) == none);
  CHECK(classify_closed(dihedral(5)) == none);

  auto borderL_only = none;
  borderL_only.borderL = true;
  CHECK(classify_closed(dicyclic(5)) == borderL_only);
  CHECK(classify_closed(u_meta(2, 5)) == borderL_only);
  CHECK(classify_closed(dihedral(7)) == borderL_only);
  CHECK(classify_closed(dihedral(10)) == borderL_only);

  auto hyperL_only = none;
  hyperL_only.hyperL = true;
  CHECK(classify_closed(dihedral(9)) == hyperL_only);
  CHECK(classify_closed(dicyclic(7)) == hyperL_only);
  CHECK(classify_closed(u_meta(2, 7)) == hyperL_only);

  auto hyperL_borderQ = none;
  hyperL_borderQ.hyperL = hyperL_borderQ.borderQ = true;
  CHECK(classify_closed(semi_dihedral(5)) == hyperL_borderQ);
  CHECK(classify_closed(u_meta(4, 5)) == hyperL_borderQ);
  CHECK(classify_closed(u_meta(2, 10)) == hyperL_borderQ);

  auto both_hyper = none;
  both_hyper.hyperL = both_hyper.hyperQ = true;
  CHECK(classify_closed(dihedral(16)) == both_hyper);
  CHECK(classify_closed(v_group(4)) == both_hyper);
  CHECK(classify_closed(semi_dihedral(4)) == both_hyper);
  CHECK(classify_closed(u_meta(2, 8)) == both_hyper);

  CHECK(classify_closed(u_meta(2, 6)) == none);
  CHECK(classify_closed(v_group(2)) == none);

  CHECK(classify_closed(semi_dihedral(5)).str() == "hyperL, borderQ");
  CHECK(none.str() == "none");
}

TEST_CASE("classify_from_energies") {
  auto report_of = [](const GroupSpec& spec) {
    return energy_report(complete_union_shape(build_ccc(spec)));
  };
  const auto d10 = classify_from_energies(report_of(dihedral(5)));
  CHECK(d10 == Classification{});

  const auto u25 = classify_from_energies(report_of(u_meta(2, 5)));
  CHECK(u25.borderL);
  CHECK_FALSE(u25.hyperL);
  CHECK_FALSE(u25.borderQ);

  const auto sd40 = classify_from_energies(report_of(semi_dihedral(5)));
  CHECK(sd40.borderQ);
  CHECK(sd40.hyperL);
  CHECK_FALSE(sd40.hyperQ);
}

TEST_CASE("classification agrees with computed energies across branches") {
  for (const auto& spec :
       {dihedral(7), dihedral(8), dihedral(9), dihedral(10), dihedral(12),
        dihedral(14), dihedral(16), dihedral(18), dicyclic(5), dicyclic(6),
        dicyclic(8), u_meta(4, 5), u_meta(5, 5), u_meta(3, 6), u_meta(2, 10),
        u_meta(3, 10), v_group(3), v_group(4), v_group(5), semi_dihedral(4),
        semi_dihedral(5), semi_dihedral(6)}) {
    const auto rep = energy_report(complete_union_shape(build_ccc(spec)));
    CHECK(classify_from_energies(rep) == classify_closed(spec));
    CHECK(pattern_of(rep) == energy_ordering(spec));
  }
}
