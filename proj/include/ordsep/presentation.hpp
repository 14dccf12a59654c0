#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordsep/errors.hpp"

namespace ordsep {

/// Index of an element in a presentation's carrier. Dense in 0..size-1,
/// ordered by declaration order.
using Elem = unsigned;

/// One violated axiom, with the tuple of element names witnessing it.
struct AxiomViolation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// A finite ordinal monoid given by its carrier, unit, binary product table
/// and omega-power table. The tables fully determine the generalised product
/// over countable ordinal index sets.
class Presentation {
 public:
  Presentation(std::vector<std::string> names, Elem unit,
               std::vector<Elem> product_table, std::vector<Elem> omega_table);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Elem x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  Elem unit() const { return unit_; }

  Elem product(Elem x, Elem y) const { return mul_[x * size() + y]; }
  Elem omega(Elem x) const { return omega_[x]; }

  std::optional<Elem> find(const std::string& name) const;

  /// n-fold product of x, n >= 0 (0 gives the unit).
  Elem power(Elem x, std::uint64_t n) const;

  /// Checks associativity, unit laws, omega(unit)=unit, the swap axiom
  /// x(yx)^w = (xy)^w, and the power axiom (x^n)^w = x^w for 1 <= n <= size.
  ValidationReport validate() const;

  bool operator==(const Presentation& other) const;

 private:
  std::vector<std::string> names_;
  Elem unit_;
  std::vector<Elem> mul_;
  std::vector<Elem> omega_;
};

/// The unique idempotent among the powers of x.
Elem idempotent_power(const Presentation& p, Elem x);

/// x^{pi+k} = idempotent_power(x) * x^k.
Elem power_plus(const Presentation& p, Elem x, std::uint64_t k);

/// True iff x^pi = x^{pi+1} for every x; on false, gives a counterexample.
struct AperiodicityResult {
  bool aperiodic;
  std::optional<Elem> counterexample;
};
AperiodicityResult is_aperiodic(const Presentation& p);

/// Least l with x^{w^l} = x^{w^{l+1}}, together with the stable value.
struct OmegaTower {
  unsigned level;
  Elem value;
};
OmegaTower omega_tower_stabilisation(const Presentation& p, Elem x);

/// Green's relations summary: per-element class ids and per-J-class flags.
struct JClassInfo {
  std::vector<Elem> members;
  bool regular = false;
  bool omega_stable = false;
  bool h_trivial = false;
};

struct GreenSummary {
  std::vector<unsigned> j_class, l_class, r_class, h_class;  // per element
  std::vector<JClassInfo> j_classes;

  bool l_below(Elem x, Elem y) const { return l_leq[x][y]; }
  bool r_below(Elem x, Elem y) const { return r_leq[x][y]; }
  bool j_below(Elem x, Elem y) const { return j_leq[x][y]; }
  std::vector<std::vector<bool>> l_leq, r_leq, j_leq;
};

GreenSummary greens(const Presentation& p);

/// Sanity property: every x with x R x^w is idempotent.
bool check_r_omega_idempotent(const Presentation& p);

}  // namespace ordsep
