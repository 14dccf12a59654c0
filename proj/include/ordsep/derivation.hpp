#pragma once

#include "ordsep/wordexpr.hpp"

namespace ordsep {

/// A proof tree certifying that two ordinal words are indistinguishable by
/// FO sentences of quantifier depth <= k.
struct Derivation;
using Deriv = std::shared_ptr<const Derivation>;

struct Derivation {
  enum class Rule {
    Refl,          // lhs and rhs are the same term
    StructEq,      // lhs and rhs denote the same word (normal forms agree)
    ConcatCong,    // from l1=r1 and l2=r2: l1 l2 = r1 r2
    OmegaSeqCong,  // ultimately periodic block sequences, blockwise equal
    Pump,          // e^n = e^{n+1} for n >= 2^k - 1, either orientation
    Trans          // chaining through a middle term
  };
  Rule rule;
  Expr lhs, rhs;
  unsigned k = 0;
  std::vector<Deriv> premises;

  // OmegaSeqCong payload: both sides are (prefix blocks) (period blocks)^w
  // with equal prefix lengths. Premises pair prefixes positionally, then
  // the periodic parts at every offset below lcm of the period lengths.
  std::vector<Expr> left_prefix, left_period, right_prefix, right_period;

  std::uint64_t pump_n = 0;  // Pump: the smaller exponent
};

Deriv d_refl(Expr e, unsigned k);
Deriv d_struct(Expr lhs, Expr rhs, unsigned k);
Deriv d_concat(Deriv a, Deriv b);
Deriv d_pump(Expr base, std::uint64_t n, bool up, unsigned k);
Deriv d_trans(Deriv a, Deriv b);
Deriv d_omega_seq(std::vector<Expr> lp, std::vector<Expr> lper,
                  std::vector<Expr> rp, std::vector<Expr> rper,
                  std::vector<Deriv> premises, Expr lhs, Expr rhs, unsigned k);

/// The mirrored derivation proving rhs = lhs. Every rule is symmetric.
Deriv d_reverse(const Deriv& d);

/// Checks every rule instance's side conditions. On failure, *diagnostic
/// names the offending node by its path from the root (e.g. "/1/0: ...").
bool check_derivation(const Deriv& d, std::string* diagnostic = nullptr);

}  // namespace ordsep
