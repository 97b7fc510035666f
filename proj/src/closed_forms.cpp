#include "ccc/closed_forms.hpp"

#include "ccc/graph.hpp"

namespace ccc {

namespace {

using I = std::int64_t;
using Entries = std::vector<Spectrum::Entry>;

void reject_u_m2(const GroupSpec& spec) {
  if (spec.family == Family::UMeta && spec.m == 2)
    throw UnsupportedParamsError(
        spec.name() + " is abelian (y^2 = 1 makes x and y commute); "
        "no closed form applies");
}

Spectrum dihedral_spectrum(I n, Matrix which) {
  switch (which) {
    case Matrix::Adjacency:
      if (n % 2 == 1)
        return make_spectrum({{Rational((n - 3) / 2), 1}, {0, 1}, {-1, (n - 3) / 2}});
      if (n % 4 == 0)
        return make_spectrum({{Rational(n / 2 - 2), 1}, {0, 2}, {-1, n / 2 - 2}});
      return make_spectrum({{Rational(n / 2 - 2), 1}, {1, 1}, {-1, n / 2 - 1}});
    case Matrix::Laplacian:
      if (n % 2 == 1)
        return make_spectrum({{Rational((n - 1) / 2), (n - 3) / 2}, {0, 2}});
      if (n % 4 == 0)
        return make_spectrum({{Rational(n / 2 - 1), n / 2 - 2}, {0, 3}});
      return make_spectrum({{Rational(n / 2 - 1), n / 2 - 2}, {2, 1}, {0, 2}});
    case Matrix::SignlessLaplacian:
      if (n % 2 == 1)
        return make_spectrum({{Rational(n - 3), 1}, {Rational((n - 5) / 2), (n - 3) / 2}, {0, 1}});
      if (n % 4 == 0)
        return make_spectrum({{Rational(n - 4), 1}, {Rational(n / 2 - 3), n / 2 - 2}, {0, 2}});
      return make_spectrum({{Rational(n - 4), 1}, {Rational(n / 2 - 3), n / 2 - 2},
                            {2, 1}, {0, 1}});
  }
  throw std::logic_error("unreachable");
}

Spectrum dicyclic_spectrum(I m, Matrix which) {
  switch (which) {
    case Matrix::Adjacency:
      if (m % 2 == 1)
        return make_spectrum({{Rational(m - 2), 1}, {1, 1}, {-1, m - 1}});
      return make_spectrum({{Rational(m - 2), 1}, {0, 2}, {-1, m - 2}});
    case Matrix::Laplacian:
      if (m % 2 == 1)
        return make_spectrum({{Rational(m - 1), m - 2}, {2, 1}, {0, 2}});
      return make_spectrum({{Rational(m - 1), m - 2}, {0, 3}});
    case Matrix::SignlessLaplacian:
      if (m % 2 == 1)
        return make_spectrum({{Rational(2 * m - 4), 1}, {Rational(m - 3), m - 2},
                              {2, 1}, {0, 1}});
      return make_spectrum({{Rational(2 * m - 4), 1}, {Rational(m - 3), m - 2}, {0, 2}});
  }
  throw std::logic_error("unreachable");
}

// For m = 2 (mod 4) the two clique sizes are n(m-2)/2 and 2n: the 2K_n
// split holds only when m/2 is even, otherwise those 2n classes form one
// clique.
Spectrum u_meta_spectrum(I n, I m, Matrix which) {
  if (m % 2 == 1) {
    const I s = n * (m - 1) / 2;
    switch (which) {
      case Matrix::Adjacency:
        return make_spectrum({{Rational(s - 1), 1}, {Rational(n - 1), 1},
                              {-1, (n * (m + 1) - 4) / 2}});
      case Matrix::Laplacian:
        return make_spectrum({{Rational(s), s - 1}, {Rational(n), n - 1}, {0, 2}});
      case Matrix::SignlessLaplacian:
        return make_spectrum({{Rational(2 * s - 2), 1}, {Rational(s - 2), s - 1},
                              {Rational(2 * n - 2), 1}, {Rational(n - 2), n - 1}});
    }
  }
  const I s = n * (m - 2) / 2;
  if (m % 4 == 0) {
    switch (which) {
      case Matrix::Adjacency:
        return make_spectrum({{Rational(s - 1), 1}, {Rational(n - 1), 2},
                              {-1, (n * (m + 2) - 6) / 2}});
      case Matrix::Laplacian:
        return make_spectrum({{Rational(s), s - 1}, {Rational(n), 2 * n - 2}, {0, 3}});
      case Matrix::SignlessLaplacian:
        return make_spectrum({{Rational(2 * s - 2), 1}, {Rational(s - 2), s - 1},
                              {Rational(2 * n - 2), 2}, {Rational(n - 2), 2 * n - 2}});
    }
  }
  const I t = 2 * n;
  switch (which) {
    case Matrix::Adjacency:
      return make_spectrum({{Rational(s - 1), 1}, {Rational(t - 1), 1},
                            {-1, (s - 1) + (t - 1)}});
    case Matrix::Laplacian:
      return make_spectrum({{Rational(s), s - 1}, {Rational(t), t - 1}, {0, 2}});
    case Matrix::SignlessLaplacian:
      return make_spectrum({{Rational(2 * s - 2), 1}, {Rational(s - 2), s - 1},
                            {Rational(2 * t - 2), 1}, {Rational(t - 2), t - 1}});
  }
  throw std::logic_error("unreachable");
}

Spectrum v_group_spectrum(I n, Matrix which) {
  switch (which) {
    case Matrix::Adjacency:
      if (n % 2 == 1)
        return make_spectrum({{Rational(2 * n - 2), 1}, {0, 2}, {-1, 2 * n - 2}});
      return make_spectrum({{Rational(2 * n - 3), 1}, {1, 2}, {-1, 2 * n - 1}});
    case Matrix::Laplacian:
      if (n % 2 == 1)
        return make_spectrum({{Rational(2 * n - 1), 2 * n - 2}, {0, 3}});
      return make_spectrum({{Rational(2 * n - 2), 2 * n - 3}, {2, 2}, {0, 3}});
    case Matrix::SignlessLaplacian:
      if (n % 2 == 1)
        return make_spectrum({{Rational(4 * n - 4), 1}, {Rational(2 * n - 3), 2 * n - 2},
                              {0, 2}});
      return make_spectrum({{Rational(4 * n - 6), 1}, {Rational(2 * n - 4), 2 * n - 3},
                            {2, 2}, {0, 2}});
  }
  throw std::logic_error("unreachable");
}

Spectrum semi_dihedral_spectrum(I n, Matrix which) {
  switch (which) {
    case Matrix::Adjacency:
      if (n % 2 == 1)
        return make_spectrum({{Rational(2 * n - 3), 1}, {3, 1}, {-1, 2 * n}});
      return make_spectrum({{Rational(2 * n - 2), 1}, {0, 2}, {-1, 2 * n - 2}});
    case Matrix::Laplacian:
      if (n % 2 == 1)
        return make_spectrum({{Rational(2 * n - 2), 2 * n - 3}, {4, 3}, {0, 2}});
      return make_spectrum({{Rational(2 * n - 1), 2 * n - 2}, {0, 3}});
    case Matrix::SignlessLaplacian:
      if (n % 2 == 1)
        return make_spectrum({{Rational(4 * n - 6), 1}, {Rational(2 * n - 4), 2 * n - 3},
                              {6, 1}, {2, 3}});
      return make_spectrum({{Rational(4 * n - 4), 1}, {Rational(2 * n - 3), 2 * n - 2},
                            {0, 2}});
  }
  throw std::logic_error("unreachable");
}

struct ClosedCounts {
  I vertices;
  I edges;
};

ClosedCounts closed_counts(const GroupSpec& spec) {
  const I n = spec.n, m = spec.m;
  switch (spec.family) {
    case Family::Dihedral:
      if (n % 2 == 1) return {(n + 1) / 2, (n - 1) * (n - 3) / 8};
      if (n % 4 == 0) return {n / 2 + 1, (n - 2) * (n - 4) / 8};
      return {n / 2 + 1, ((n - 2) * (n - 4) + 8) / 8};
    case Family::Dicyclic:
      if (m % 2 == 1) return {m + 1, ((m - 1) * (m - 2) + 2) / 2};
      return {m + 1, (m - 1) * (m - 2) / 2};
    case Family::UMeta: {
      if (m % 2 == 1) {
        const I s = n * (m - 1) / 2;
        return {s + n, (s * (s - 1) + n * (n - 1)) / 2};
      }
      const I s = n * (m - 2) / 2;
      if (m % 4 == 0) return {s + 2 * n, (s * (s - 1) + 2 * n * (n - 1)) / 2};
      const I t = 2 * n;
      return {s + t, (s * (s - 1) + t * (t - 1)) / 2};
    }
    case Family::VGroup:
      if (n % 2 == 1) return {2 * n + 1, (2 * n - 1) * (2 * n - 2) / 2};
      return {2 * n + 2, ((2 * n - 2) * (2 * n - 3) + 4) / 2};
    case Family::SemiDihedral:
      if (n % 2 == 1) return {2 * n + 2, ((2 * n - 2) * (2 * n - 3) + 12) / 2};
      return {2 * n + 1, (2 * n - 1) * (2 * n - 2) / 2};
  }
  throw std::logic_error("unreachable");
}

Rational dihedral_le(I n) {
  if (n % 2 == 1) return {2 * (n - 1) * (n - 3), n + 1};
  if (n % 4 == 0) return {3 * (n - 2) * (n - 4), n + 2};
  if (n == 6) return 4;
  return {(n - 4) * (3 * n - 10), n + 2};
}

Rational dihedral_leplus(I n) {
  if (n % 2 == 1) return {(n - 3) * (n + 3), n + 1};
  if (n % 4 == 0) {
    if (n == 4 || n == 8) return {(n - 4) * (n + 6), n + 2};
    return {2 * (n - 2) * (n - 4), n + 2};
  }
  if (n == 6) return 4;
  if (n == 10) return {22, 3};
  return {2 * (n - 2) * (n - 6), n + 2};
}

Rational dicyclic_le(I m) {
  if (m % 2 == 1)
    return m == 3 ? Rational(4) : Rational{2 * (m - 2) * (3 * m - 5), m + 1};
  return {6 * (m - 1) * (m - 2), m + 1};
}

Rational dicyclic_leplus(I m) {
  if (m % 2 == 1) {
    if (m == 3) return 4;
    if (m == 5) return {22, 3};
    return {4 * (m - 1) * (m - 3), m + 1};
  }
  if (m == 2 || m == 4) return {2 * (m - 2) * (m + 3), m + 1};
  return {4 * (m - 1) * (m - 2), m + 1};
}

Rational u_meta_le(I n, I m) {
  if (m == 3) return 4 * (n - 1);
  if (m == 5) return {2 * (2 * n - 1) * (n + 3), 3};
  if (m % 2 == 1)
    return {m * m * n * n - 4 * m * n * n + m * m * n + 3 * n * n - 2 * m * n -
                2 * m + 5 * n - 2,
            m + 1};
  if (m == 4) return 6 * (n - 1);
  // m = 0 mod 4, m >= 8
  return {2 * m * m * n * n - 12 * m * n * n + m * m * n + 16 * n * n -
              4 * m * n - 2 * m + 12 * n - 4,
          m + 2};
}

Rational u_meta_leplus(I n, I m) {
  if (m == 3) return 4 * (n - 1);
  if (m == 5) {
    if (n == 2) return {22, 3};
    return {2 * (2 * n + 3) * (n - 1), 3};
  }
  if (m % 2 == 1) return {n * n * (m - 1) * (m - 3), m + 1};
  if (m == 4) return 6 * (n - 1);
  return {2 * n * n * (m - 2) * (m - 4), m + 2};
}

EnergyReport report_from_closed_spectra(const GroupSpec& spec) {
  EnergyReport rep;
  const auto counts = closed_counts(spec);
  rep.vertexCount = counts.vertices;
  rep.edgeCount = counts.edges;
  rep.meanDegree = Rational(2 * rep.edgeCount, rep.vertexCount);
  rep.e = energy(closed_spectrum(spec, Matrix::Adjacency));
  rep.le = laplacian_energy(closed_spectrum(spec, Matrix::Laplacian),
                            rep.vertexCount, rep.edgeCount);
  rep.leplus = signless_laplacian_energy(
      closed_spectrum(spec, Matrix::SignlessLaplacian), rep.vertexCount,
      rep.edgeCount);
  return rep;
}

}  // namespace

Spectrum closed_spectrum(const GroupSpec& spec, Matrix which) {
  reject_u_m2(spec);
  switch (spec.family) {
    case Family::Dihedral: return dihedral_spectrum(spec.n, which);
    case Family::Dicyclic: return dicyclic_spectrum(spec.m, which);
    case Family::UMeta: return u_meta_spectrum(spec.n, spec.m, which);
    case Family::VGroup: return v_group_spectrum(spec.n, which);
    case Family::SemiDihedral: return semi_dihedral_spectrum(spec.n, which);
  }
  throw std::logic_error("unreachable");
}

EnergyReport closed_energies(const GroupSpec& spec) {
  reject_u_m2(spec);
  const I n = spec.n, m = spec.m;

  if (spec.family == Family::UMeta && m % 2 == 0 && m % 4 != 0)
    // No simplified rational rows for this branch; evaluate the energy
    // definitions on the closed spectra instead.
    return report_from_closed_spectra(spec);

  EnergyReport rep;
  const auto counts = closed_counts(spec);
  rep.vertexCount = counts.vertices;
  rep.edgeCount = counts.edges;
  rep.meanDegree = Rational(2 * rep.edgeCount, rep.vertexCount);

  switch (spec.family) {
    case Family::Dihedral:
      rep.e = n % 2 == 1 ? n - 3 : (n % 4 == 0 ? n - 4 : n - 2);
      rep.le = dihedral_le(n);
      rep.leplus = dihedral_leplus(n);
      break;
    case Family::Dicyclic:
      rep.e = m % 2 == 1 ? 2 * m - 2 : 2 * m - 4;
      rep.le = dicyclic_le(m);
      rep.leplus = dicyclic_leplus(m);
      break;
    case Family::UMeta:
      rep.e = m % 2 == 1 ? n * (m + 1) - 4 : n * (m + 2) - 6;
      rep.le = u_meta_le(n, m);
      rep.leplus = u_meta_leplus(n, m);
      break;
    case Family::VGroup:
      if (n % 2 == 1) {
        rep.e = 4 * n - 4;
        rep.le = Rational{6 * (2 * n - 1) * (2 * n - 2), 2 * n + 1};
        rep.leplus = Rational{4 * (2 * n - 1) * (2 * n - 2), 2 * n + 1};
      } else {
        rep.e = 4 * n - 2;
        rep.le = n == 2 ? Rational(6) : Rational{2 * (2 * n - 3) * (5 * n - 7), n + 1};
        rep.leplus = n == 2 ? Rational(6) : Rational{16 * (n - 1) * (n - 2), n + 1};
      }
      break;
    case Family::SemiDihedral:
      if (n % 2 == 1) {
        rep.e = 4 * n;
        rep.le = n == 3 ? Rational(12)
                        : Rational{2 * (2 * n - 3) * (5 * n - 11), n + 1};
        if (n == 3) rep.leplus = 12;
        else if (n == 5) rep.leplus = 22;
        else rep.leplus = Rational{16 * (n - 1) * (n - 3), n + 1};
      } else {
        rep.e = 4 * n - 4;
        rep.le = Rational{6 * (2 * n - 1) * (2 * n - 2), 2 * n + 1};
        rep.leplus = n == 2 ? Rational{28, 5}
                            : Rational{4 * (2 * n - 1) * (2 * n - 2), 2 * n + 1};
      }
      break;
  }
  return rep;
}

const char* ordering_name(EnergyOrdering o) {
  switch (o) {
    case EnergyOrdering::AllEqual: return "AllEqual";
    case EnergyOrdering::QltEltL: return "QltEltL";
    case EnergyOrdering::EltQltL: return "EltQltL";
    case EnergyOrdering::EeqQltL: return "EeqQltL";
    case EnergyOrdering::EltQeqL: return "EltQeqL";
  }
  return "?";
}

const char* ordering_relation(EnergyOrdering o) {
  switch (o) {
    case EnergyOrdering::AllEqual: return "E=LE+=LE";
    case EnergyOrdering::QltEltL: return "LE+<E<LE";
    case EnergyOrdering::EltQltL: return "E<LE+<LE";
    case EnergyOrdering::EeqQltL: return "E=LE+<LE";
    case EnergyOrdering::EltQeqL: return "E<LE+=LE";
  }
  return "?";
}

EnergyOrdering energy_ordering(const GroupSpec& spec) {
  reject_u_m2(spec);
  const I n = spec.n, m = spec.m;
  switch (spec.family) {
    case Family::Dihedral:
      if (n == 3 || n == 4 || n == 6) return EnergyOrdering::AllEqual;
      if (n == 5) return EnergyOrdering::EltQeqL;
      if (n == 10) return EnergyOrdering::QltEltL;
      // n = 14 gives E = LE+ exactly: E - LE+ = (n-2)(14-n)/(n+2).
      if (n == 14) return EnergyOrdering::EeqQltL;
      return EnergyOrdering::EltQltL;
    case Family::Dicyclic:
      if (m == 2 || m == 3) return EnergyOrdering::AllEqual;
      if (m == 5) return EnergyOrdering::QltEltL;
      if (m == 7) return EnergyOrdering::EeqQltL;
      return EnergyOrdering::EltQltL;
    case Family::UMeta:
      if (m == 3 || m == 4) return EnergyOrdering::AllEqual;
      if (m == 5) return n <= 3 ? EnergyOrdering::QltEltL : EnergyOrdering::EltQltL;
      if (m == 7) return n == 2 ? EnergyOrdering::EeqQltL : EnergyOrdering::EltQltL;
      if (m % 2 == 1 || m % 4 == 0) return EnergyOrdering::EltQltL;
      // m = 2 (mod 4): two equal cliques at m = 6, otherwise compare the
      // corrected closed energies.
      if (m == 6) return EnergyOrdering::AllEqual;
      if (auto p = pattern_of(closed_energies(spec))) return *p;
      throw UnsupportedParamsError(spec.name() + ": ordering outside catalogue");
    case Family::VGroup:
      return n == 2 ? EnergyOrdering::AllEqual : EnergyOrdering::EltQltL;
    case Family::SemiDihedral:
      return n == 3 ? EnergyOrdering::AllEqual : EnergyOrdering::EltQltL;
  }
  throw std::logic_error("unreachable");
}

std::optional<EnergyOrdering> pattern_of(const EnergyReport& r) {
  const Rational &e = r.e, &q = r.leplus, &l = r.le;
  if (e == q && q == l) return EnergyOrdering::AllEqual;
  if (q < e && e < l) return EnergyOrdering::QltEltL;
  if (e < q && q < l) return EnergyOrdering::EltQltL;
  if (e == q && q < l) return EnergyOrdering::EeqQltL;
  if (e < q && q == l) return EnergyOrdering::EltQeqL;
  return std::nullopt;
}

std::string Classification::str() const {
  std::string out;
  auto add = [&](bool flag, const char* name) {
    if (flag) { if (!out.empty()) out += ", "; out += name; }
  };
  add(hyperE, "hyperE"); add(borderE, "borderE");
  add(hyperL, "hyperL"); add(borderL, "borderL");
  add(hyperQ, "hyperQ"); add(borderQ, "borderQ");
  return out.empty() ? "none" : out;
}

Classification classify_closed(const GroupSpec& spec) {
  reject_u_m2(spec);
  const I n = spec.n, m = spec.m;
  Classification c;
  switch (spec.family) {
    case Family::Dihedral:
      // LE - 2(|V|-1) factors as (n-1)(n-7)/(n+1) for odd n,
      // 2(n^2-10n+12)/(n+2) for n = 0 mod 4, 2(n-2)(n-10)/(n+2) for
      // n = 2 mod 4; LE+ crosses at n = 16 resp. 18.
      c.borderL = (n == 7 || n == 10);
      c.hyperL = (n % 2 == 1 && n >= 9) || (n % 4 == 0 && n >= 12) ||
                 (n % 4 == 2 && n >= 14);
      c.hyperQ = n % 2 == 0 && n >= 16;
      return c;
    case Family::Dicyclic:
      c.borderL = m == 5;
      c.hyperL = m >= 6;
      c.hyperQ = m >= 8;
      return c;
    case Family::UMeta:
      if (m == 3 || m == 4) return c;
      if (m == 5) {
        c.borderL = n == 2;
        c.hyperL = n >= 3;
        c.borderQ = n == 4;  // LE+ - 2(|V|-1) = 4n(n-4)/3
        c.hyperQ = n >= 5;
        return c;
      }
      if (m == 7) {
        c.hyperL = true;
        c.hyperQ = n >= 3;
        return c;
      }
      if (m % 2 == 1 || m % 4 == 0) {
        c.hyperL = c.hyperQ = true;
        return c;
      }
      // m = 2 (mod 4): no case list; compare the closed energies against
      // the complete-graph value directly.
      return classify_from_energies(closed_energies(spec));
    case Family::VGroup:
      c.hyperL = n >= 3;
      c.hyperQ = n >= 4;
      return c;
    case Family::SemiDihedral:
      c.hyperL = n >= 4;
      c.borderQ = n == 5;
      c.hyperQ = n == 4 || n >= 6;
      return c;
  }
  throw std::logic_error("unreachable");
}

Classification classify_from_energies(const EnergyReport& report) {
  const Rational bench(2 * (report.vertexCount - 1));
  Classification c;
  c.hyperE = report.e > bench;
  c.borderE = report.e == bench;
  c.hyperL = report.le > bench;
  c.borderL = report.le == bench;
  c.hyperQ = report.leplus > bench;
  c.borderQ = report.leplus == bench;
  return c;
}

}  // namespace ccc
