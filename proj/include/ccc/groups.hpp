#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccc {

enum class Family { Dihedral, Dicyclic, UMeta, VGroup, SemiDihedral };

const char* family_name(Family f);
const char* family_cli_name(Family f);  // d2n, q4m, u, v8n, sd8n

/// One finite group: a family tag plus validated parameters.
/// Dihedral/VGroup/SemiDihedral take n, Dicyclic takes m, UMeta takes both.
struct GroupSpec {
  Family family;
  std::int64_t n = 0;
  std::int64_t m = 0;

  std::int64_t order() const;
  std::int64_t x_order() const;  // canonical range of the x exponent
  std::int64_t y_range() const;  // canonical range of the y exponent
  std::string name() const;      // e.g. "D10", "U(2,5)"

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupSpec dihedral(std::int64_t n);
GroupSpec dicyclic(std::int64_t m);
GroupSpec u_meta(std::int64_t n, std::int64_t m);
GroupSpec v_group(std::int64_t n);
GroupSpec semi_dihedral(std::int64_t n);
GroupSpec make_spec(Family f, std::int64_t n, std::int64_t m);

/// Group element in normal form x^a y^b with a in [0, x_order) and
/// b in [0, y_range).
struct Element {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

Element identity();
bool is_canonical(const GroupSpec& spec, const Element& e);

/// Product in normal form, via the per-family commutation law.
Element multiply(const GroupSpec& spec, const Element& p, const Element& q);
Element inverse(const GroupSpec& spec, const Element& p);
bool commute(const GroupSpec& spec, const Element& p, const Element& q);

/// All elements in canonical order (a major, b minor).
std::vector<Element> elements(const GroupSpec& spec);

std::vector<Element> center(const GroupSpec& spec);
bool is_abelian(const GroupSpec& spec);

struct ConjugacyClass {
  Element representative;            // lexicographically smallest member
  std::vector<Element> members;      // sorted
  bool is_central = false;
};

/// Conjugation orbits, sorted by representative. Sizes sum to the order.
std::vector<ConjugacyClass> conjugacy_classes(const GroupSpec& spec);

struct ValidationReport {
  bool pass = false;
  std::int64_t order = 0;
  bool associativity_sampled = false;  // orders > 200 check a random sample
  std::vector<std::string> violations;
};

/// Checks element count, closure/associativity (full Cayley table up to
/// order 200, a seeded random sample above), the defining relations of the
/// presentation, and two-sided inverses. A violation means the normal-form
/// multiplication law was derived wrongly.
ValidationReport validate_presentation(const GroupSpec& spec);

}  // namespace ccc
