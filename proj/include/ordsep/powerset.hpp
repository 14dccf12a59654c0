#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordsep/presentation.hpp"

namespace ordsep {

/// A subset of a presentation's carrier, as a bitmask over element indices.
/// Carriers are capped well below 64 elements, so one word suffices.
struct Subset {
  std::uint64_t bits = 0;

  static Subset single(Elem x) { return {std::uint64_t{1} << x}; }
  bool contains(Elem x) const { return (bits >> x) & 1; }
  void add(Elem x) { bits |= std::uint64_t{1} << x; }
  bool empty() const { return bits == 0; }
  bool subset_of(Subset other) const { return (bits & ~other.bits) == 0; }
  std::size_t count() const;

  bool operator==(const Subset&) const = default;
  auto operator<=>(const Subset&) const = default;
};

std::vector<Elem> elements_of(Subset s, std::size_t carrier_size);
std::string subset_name(const Presentation& p, Subset s);

/// Elementwise product {x*y | x in a, y in b}.
Subset p_product(const Presentation& p, Subset a, Subset b);

/// Least superset of x closed under the base product.
Subset generated_subsemigroup(const Presentation& p, Subset x);

/// {s * omega(t) | s, t in generated_subsemigroup(x)}. x must be nonempty.
Subset p_omega(const Presentation& p, Subset x);

/// Union of the eventual cycle of the power sequence x, x^2, x^3, ...
Subset p_merge(const Presentation& p, Subset x);

/// A finite ordinal monoid with a merge operator and a compatible partial
/// order. Constructed from a power monoid, or hand-built in tests.
struct MergeMonoidView {
  std::vector<std::string> names;
  Elem unit = 0;
  std::vector<std::vector<Elem>> mul;
  std::vector<Elem> omega;
  std::vector<Elem> merge;
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return names.size(); }
  Elem product(Elem x, Elem y) const { return mul[x][y]; }
  Elem power(Elem x, std::uint64_t n) const;
  bool below(Elem x, Elem y) const { return leq[x][y]; }
};

/// Checks the merge axioms: a^{pi+k} <= a^merge, (a^pi)^merge = a^pi,
/// a^merge a^merge = (a^merge)^merge = a^merge, (ab)^merge = a(ba)^merge b,
/// plus monotonicity of merge for the carried order.
ValidationReport validate_merge_axioms(const MergeMonoidView& v);

/// The power ordinal monoid of a base presentation. Elements are the
/// nonempty subsets of the base carrier (the empty set is excluded: its
/// omega-power is undefined here).
struct PowerMonoid {
  Presentation base;
  std::vector<Subset> carrier;  // index -> subset, canonical order
  Presentation pres;            // tables over carrier indices

  Elem index_of(Subset s) const;
  MergeMonoidView view() const;
};

/// Full construction over all nonempty subsets; |base| must be <= cap.
PowerMonoid power_presentation(const Presentation& base, std::size_t cap = 12);

/// Fragment reachable from the given generators, closed under product,
/// omega-power and merge (and containing the unit singleton).
PowerMonoid power_presentation_reachable(const Presentation& base,
                                         const std::vector<Subset>& generators);

}  // namespace ordsep
