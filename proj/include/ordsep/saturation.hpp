#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ordsep/powerset.hpp"

namespace ordsep {

/// How a closure member was first produced. Operand fields are indices into
/// the closure's member list.
struct Provenance {
  enum class Rule { Seed, Unit, Product, Merge, Omega };
  Rule rule;
  int left = -1;
  int right = -1;
};

const char* rule_name(Provenance::Rule r);

/// Least family containing the seeds and the unit singleton, closed under
/// elementwise product, merge and omega-power in the power monoid.
struct SaturationResult {
  std::vector<Subset> members;  // discovery order (canonical)
  std::vector<Provenance> provenance;

  int find(Subset s) const;
  bool contains(Subset s) const { return find(s) >= 0; }
};

SaturationResult saturate(const Presentation& base,
                          const std::vector<Subset>& seeds);

/// Replays every member's provenance and checks it reproduces the member.
bool replay_provenance(const Presentation& base, const SaturationResult& sat);

/// Closure variants over a generic merge-monoid carrier.
enum class ClosKind {
  Plus,      // product only
  GPlus,     // product and merge
  GStar,     // GPlus plus the unit
  GOrdPlus,  // product, merge and omega
  GOmega,    // {a * b^w | a, b in GPlus(A)}
};

/// When prose_variant is set, GOmega quantifies over Plus(A) instead of
/// GPlus(A) (the two readings present in the source material).
std::set<Elem> clos_variants(const MergeMonoidView& v, const std::set<Elem>& a,
                             ClosKind kind, bool prose_variant = false);

/// Case analysis driving the finite-word induction.
struct FiniteTrichotomy {
  enum class Case { LeftDrop, RightDrop, Maximum };
  Case tag;
  Elem witness;  // dropping letter, or the maximum
};
FiniteTrichotomy trichotomy_finite(const MergeMonoidView& v,
                                   const std::set<Elem>& a);

/// Case analysis driving the ordinal-word induction.
struct OrdinalTrichotomy {
  enum class Case { LeftDrop, OmegaDrop, Degenerate };
  Case tag;
  std::optional<Elem> witness;  // dropping letter for LeftDrop
};
OrdinalTrichotomy trichotomy_ordinal(const MergeMonoidView& v,
                                     const std::set<Elem>& a);

}  // namespace ordsep
