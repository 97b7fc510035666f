#include "ccc/groups.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace ccc {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Dihedral: return "Dihedral";
    case Family::Dicyclic: return "Dicyclic";
    case Family::UMeta: return "UMeta";
    case Family::VGroup: return "VGroup";
    case Family::SemiDihedral: return "SemiDihedral";
  }
  return "?";
}

const char* family_cli_name(Family f) {
  switch (f) {
    case Family::Dihedral: return "d2n";
    case Family::Dicyclic: return "q4m";
    case Family::UMeta: return "u";
    case Family::VGroup: return "v8n";
    case Family::SemiDihedral: return "sd8n";
  }
  return "?";
}

GroupSpec dihedral(std::int64_t n) {
  require(n >= 3, "Dihedral requires n >= 3");
  return {Family::Dihedral, n, 0};
}

GroupSpec dicyclic(std::int64_t m) {
  require(m >= 2, "Dicyclic requires m >= 2");
  return {Family::Dicyclic, 0, m};
}

GroupSpec u_meta(std::int64_t n, std::int64_t m) {
  require(n >= 2 && m >= 2, "UMeta requires n >= 2 and m >= 2");
  return {Family::UMeta, n, m};
}

GroupSpec v_group(std::int64_t n) {
  require(n >= 2, "VGroup requires n >= 2");
  return {Family::VGroup, n, 0};
}

GroupSpec semi_dihedral(std::int64_t n) {
  require(n >= 2, "SemiDihedral requires n >= 2");
  return {Family::SemiDihedral, n, 0};
}

GroupSpec make_spec(Family f, std::int64_t n, std::int64_t m) {
  switch (f) {
    case Family::Dihedral: return dihedral(n);
    case Family::Dicyclic: return dicyclic(m);
    case Family::UMeta: return u_meta(n, m);
    case Family::VGroup: return v_group(n);
    case Family::SemiDihedral: return semi_dihedral(n);
  }
  throw std::invalid_argument("unknown family");
}

std::int64_t GroupSpec::order() const {
  switch (family) {
    case Family::Dihedral: return 2 * n;
    case Family::Dicyclic: return 4 * m;
    case Family::UMeta: return 2 * n * m;
    case Family::VGroup: return 8 * n;
    case Family::SemiDihedral: return 8 * n;
  }
  return 0;
}

std::int64_t GroupSpec::x_order() const {
  switch (family) {
    case Family::Dihedral: return n;
    case Family::Dicyclic: return 2 * m;
    case Family::UMeta: return 2 * n;
    case Family::VGroup: return 2 * n;
    case Family::SemiDihedral: return 4 * n;
  }
  return 0;
}

std::int64_t GroupSpec::y_range() const {
  switch (family) {
    case Family::Dihedral: return 2;
    case Family::Dicyclic: return 2;
    case Family::UMeta: return m;
    case Family::VGroup: return 4;
    case Family::SemiDihedral: return 2;
  }
  return 0;
}

std::string GroupSpec::name() const {
  switch (family) {
    case Family::Dihedral: return "D" + std::to_string(2 * n);
    case Family::Dicyclic: return "Q" + std::to_string(4 * m);
    case Family::UMeta:
      return "U(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case Family::VGroup: return "V" + std::to_string(8 * n);
    case Family::SemiDihedral: return "SD" + std::to_string(8 * n);
  }
  return "?";
}

Element identity() { return {0, 0}; }

bool is_canonical(const GroupSpec& spec, const Element& e) {
  return e.a >= 0 && e.a < spec.x_order() && e.b >= 0 && e.b < spec.y_range();
}

Element multiply(const GroupSpec& spec, const Element& p, const Element& q) {
  require(is_canonical(spec, p) && is_canonical(spec, q),
          "multiply: element not in canonical form");
  const std::int64_t xo = spec.x_order();
  switch (spec.family) {
    case Family::Dihedral:
      // y^b x^c = x^{c(-1)^b} y^b
      return {mod(p.a + (p.b ? -q.a : q.a), xo), (p.b + q.b) % 2};
    case Family::Dicyclic: {
      // y x^c = x^{-c} y and y^2 = x^m
      if (p.b == 0) return {mod(p.a + q.a, xo), q.b};
      std::int64_t a = p.a - q.a, b = 1 + q.b;
      if (b == 2) { b = 0; a += spec.m; }
      return {mod(a, xo), b};
    }
    case Family::UMeta:
      // y^b x^c = x^c y^{b(-1)^c}
      return {mod(p.a + q.a, xo),
              mod((q.a % 2 ? -p.b : p.b) + q.b, spec.m)};
    case Family::VGroup:
      // y x^c = x^{-c} y^{1+2c}; y^2 commutes with x
      if (p.b % 2 == 0) return {mod(p.a + q.a, xo), (p.b + q.b) % 4};
      return {mod(p.a - q.a, xo), mod(p.b + 2 * q.a + q.b, 4)};
    case Family::SemiDihedral:
      // y x^c = x^{c(2n-1)} y
      return {mod(p.a + (p.b ? q.a * (2 * spec.n - 1) : q.a), xo),
              (p.b + q.b) % 2};
  }
  throw std::invalid_argument("unknown family");
}

Element inverse(const GroupSpec& spec, const Element& p) {
  require(is_canonical(spec, p), "inverse: element not in canonical form");
  const std::int64_t xo = spec.x_order();
  switch (spec.family) {
    case Family::Dihedral:
      return p.b == 0 ? Element{mod(-p.a, xo), 0} : p;
    case Family::Dicyclic:
      return p.b == 0 ? Element{mod(-p.a, xo), 0}
                      : Element{mod(p.a + spec.m, xo), 1};
    case Family::UMeta:
      return {mod(-p.a, xo), mod(p.a % 2 ? p.b : -p.b, spec.m)};
    case Family::VGroup:
      if (p.b % 2 == 0) return {mod(-p.a, xo), p.b};
      return {p.a, mod(-p.b - 2 * p.a, 4)};
    case Family::SemiDihedral:
      return p.b == 0 ? Element{mod(-p.a, xo), 0}
                      : Element{mod(-p.a * (2 * spec.n - 1), xo), 1};
  }
  throw std::invalid_argument("unknown family");
}

bool commute(const GroupSpec& spec, const Element& p, const Element& q) {
  return multiply(spec, p, q) == multiply(spec, q, p);
}

std::vector<Element> elements(const GroupSpec& spec) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(spec.order()));
  for (std::int64_t a = 0; a < spec.x_order(); ++a)
    for (std::int64_t b = 0; b < spec.y_range(); ++b) out.push_back({a, b});
  return out;
}

std::vector<Element> center(const GroupSpec& spec) {
  const auto all = elements(spec);
  std::vector<Element> z;
  for (const auto& c : all) {
    bool central = true;
    for (const auto& g : all) {
      if (!commute(spec, c, g)) { central = false; break; }
    }
    if (central) z.push_back(c);
  }
  return z;
}

bool is_abelian(const GroupSpec& spec) {
  return center(spec).size() == static_cast<std::size_t>(spec.order());
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupSpec& spec) {
  const auto all = elements(spec);
  const auto z = center(spec);
  std::set<Element> central(z.begin(), z.end());
  std::set<Element> seen;
  std::vector<ConjugacyClass> classes;
  for (const auto& s : all) {  // canonical order makes reps lexicographic minima
    if (seen.count(s)) continue;
    std::set<Element> orbit;
    for (const auto& g : all)
      orbit.insert(multiply(spec, multiply(spec, inverse(spec, g), s), g));
    ConjugacyClass cls;
    cls.members.assign(orbit.begin(), orbit.end());
    cls.representative = cls.members.front();
    cls.is_central = cls.members.size() == 1 && central.count(cls.representative) > 0;
    seen.insert(orbit.begin(), orbit.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) {
              return a.representative < b.representative;
            });
  return classes;
}

namespace {

Element power(const GroupSpec& spec, Element base, std::int64_t exp) {
  Element acc = identity();
  for (std::int64_t i = 0; i < exp; ++i) acc = multiply(spec, acc, base);
  return acc;
}

void check_relations(const GroupSpec& spec, std::vector<std::string>& out) {
  const Element x{1, 0}, y{0, 1}, e = identity();
  auto mul = [&](const Element& p, const Element& q) { return multiply(spec, p, q); };
  auto fail = [&](const std::string& rel) { out.push_back("relation violated: " + rel); };
  switch (spec.family) {
    case Family::Dihedral:
      if (power(spec, x, spec.n) != e) fail("x^n = 1");
      if (mul(y, y) != e) fail("y^2 = 1");
      if (mul(mul(y, x), y) != inverse(spec, x)) fail("yxy = x^-1");
      break;
    case Family::Dicyclic:
      if (power(spec, x, 2 * spec.m) != e) fail("x^2m = 1");
      if (power(spec, x, spec.m) != mul(y, y)) fail("x^m = y^2");
      if (mul(mul(inverse(spec, y), x), y) != inverse(spec, x)) fail("y^-1 x y = x^-1");
      break;
    case Family::UMeta:
      if (power(spec, x, 2 * spec.n) != e) fail("x^2n = 1");
      if (power(spec, y, spec.m) != e) fail("y^m = 1");
      if (mul(mul(inverse(spec, x), y), x) != inverse(spec, y)) fail("x^-1 y x = y^-1");
      break;
    case Family::VGroup:
      if (power(spec, x, 2 * spec.n) != e) fail("x^2n = 1");
      if (power(spec, y, 4) != e) fail("y^4 = 1");
      if (mul(y, x) != mul(inverse(spec, x), inverse(spec, y))) fail("yx = x^-1 y^-1");
      if (mul(inverse(spec, y), x) != mul(inverse(spec, x), y)) fail("y^-1 x = x^-1 y");
      break;
    case Family::SemiDihedral:
      if (power(spec, x, 4 * spec.n) != e) fail("x^4n = 1");
      if (mul(y, y) != e) fail("y^2 = 1");
      if (mul(mul(y, x), y) != power(spec, x, mod(2 * spec.n - 1, 4 * spec.n)))
        fail("yxy = x^(2n-1)");
      break;
  }
}

}  // namespace

ValidationReport validate_presentation(const GroupSpec& spec) {
  ValidationReport rep;
  rep.order = spec.order();
  const auto all = elements(spec);

  if (static_cast<std::int64_t>(all.size()) != rep.order)
    rep.violations.push_back("element count != declared order");

  auto index_of = [&](const Element& e) {
    return static_cast<std::size_t>(e.a * spec.y_range() + e.b);
  };

  if (rep.order <= 200) {
    // Full Cayley table: closure plus the cancellation (latin square) property.
    const std::size_t k = all.size();
    std::vector<std::size_t> table(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Element p = multiply(spec, all[i], all[j]);
        if (!is_canonical(spec, p)) {
          rep.violations.push_back("product left canonical range");
          p = {0, 0};
        }
        table[i * k + j] = index_of(p);
      }
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<bool> row(k, false), col(k, false);
      for (std::size_t j = 0; j < k; ++j) {
        row[table[i * k + j]] = true;
        col[table[j * k + i]] = true;
      }
      if (std::count(row.begin(), row.end(), true) != static_cast<std::ptrdiff_t>(k) ||
          std::count(col.begin(), col.end(), true) != static_cast<std::ptrdiff_t>(k)) {
        rep.violations.push_back("Cayley table is not a latin square");
        break;
      }
    }
    for (std::size_t i = 0; i < k && rep.violations.empty(); ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l)
          if (table[table[i * k + j] * k + l] != table[i * k + table[j * k + l]]) {
            rep.violations.push_back("associativity fails");
            i = j = k;  // bail out of all three loops
            break;
          }
  } else {
    rep.associativity_sampled = true;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 20000; ++t) {
      const Element &p = all[pick(rng)], &q = all[pick(rng)], &r = all[pick(rng)];
      if (multiply(spec, multiply(spec, p, q), r) !=
          multiply(spec, p, multiply(spec, q, r))) {
        rep.violations.push_back("associativity fails (sampled)");
        break;
      }
    }
  }

  check_relations(spec, rep.violations);

  const Element e = identity();
  for (const auto& p : all) {
    if (multiply(spec, e, p) != p || multiply(spec, p, e) != p) {
      rep.violations.push_back("identity law fails");
      break;
    }
    const Element q = inverse(spec, p);
    if (multiply(spec, p, q) != e || multiply(spec, q, p) != e) {
      rep.violations.push_back("inverse law fails");
      break;
    }
  }

  rep.pass = rep.violations.empty();
  return rep;
}

}  // namespace ccc
