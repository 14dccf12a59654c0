#pragma once

#include <map>

#include "ordsep/decision.hpp"
#include "ordsep/derivation.hpp"
#include "ordsep/saturation.hpp"

namespace ordsep {

/// For one closure member X: an expression per element of X, all evaluating
/// into X pointwise, plus a derivation of depth-k indistinguishability for
/// every ordered pair of elements.
struct WitnessFamily {
  std::vector<Elem> elems;  // ascending
  std::vector<Expr> exprs;  // parallel to elems
  std::map<std::pair<Elem, Elem>, Deriv> derivs;

  const Expr& expr_of(Elem x) const;
  const Deriv& pair(Elem x, Elem y) const;
};

/// Builds witness families by recursion over closure provenance, memoized
/// per member.
class WitnessBuilder {
 public:
  WitnessBuilder(const Presentation& base, const LetterMap& letters,
                 const SaturationResult& sat, unsigned k);

  const WitnessFamily& family(int sat_index);
  unsigned depth() const { return k_; }

 private:
  WitnessFamily build(int sat_index);

  const Presentation& base_;
  const LetterMap& letters_;
  const SaturationResult& sat_;
  unsigned k_;
  std::map<int, WitnessFamily> memo_;
};

/// A concrete inseparability witness: words in each language that no FO
/// sentence of quantifier depth <= k tells apart.
struct WitnessPair {
  Expr left, right;
  Deriv deriv;
  int blocking;
  Elem mark_left, mark_right;
};

/// Requires separate(K, L) to answer "no"; throws otherwise.
WitnessPair witness_pair(const LanguageRecognizer& K,
                         const LanguageRecognizer& L, unsigned k);

/// An ordinal in Cantor normal form: sum of w^exp * coeff terms with
/// strictly descending exponents and positive coefficients.
struct CnfOrdinal {
  std::vector<std::pair<unsigned, std::uint64_t>> terms;

  bool is_zero() const { return terms.empty(); }
};

/// Syntax: `0`, or `+`-separated terms `w^E*C` / `w^E` / `w*C` / `w` / `C`
/// with strictly descending exponents, e.g. `w^2+w*2+3`.
CnfOrdinal parse_ordinal(const std::string& text);
std::string print_ordinal(const CnfOrdinal& o);

/// Level at which the omega tower of a stabilises in the view.
unsigned view_tower_level(const MergeMonoidView& v, Elem a);

/// Closed-form upper bound for the value of the one-letter word a^kappa:
/// the product over CNF digits of either the exact digit value or, when the
/// exact value sits below the digit base's merge, that merge. Terms at or
/// above the tower stabilisation level collapse into one top factor.
Elem approximate_one_letter(const MergeMonoidView& v, Elem a,
                            const CnfOrdinal& kappa);

}  // namespace ordsep
