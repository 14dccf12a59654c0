#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ordsep/format.hpp"

namespace ordsep {

/// A finite term denoting a countable ordinal word over an alphabet.
struct WordExpr;
using Expr = std::shared_ptr<const WordExpr>;

struct WordExpr {
  enum class Kind { Empty, Letter, Concat, Pow, OmegaPow };
  Kind kind;
  std::string letter;       // Letter
  Expr left, right;         // Concat
  Expr body;                // Pow, OmegaPow
  std::uint64_t exp = 0;    // Pow, >= 1
};

Expr mk_empty();
Expr mk_letter(const std::string& a);
Expr mk_concat(Expr a, Expr b);
Expr mk_pow(Expr e, std::uint64_t n);
Expr mk_omega(Expr e);
/// Right-associated concatenation of a block list (Empty when empty).
Expr mk_chain(const std::vector<Expr>& blocks);

bool same_expr(const Expr& a, const Expr& b);  // syntactic tree equality

Elem eval_expr(const Expr& e, const Presentation& pres,
               const LetterMap& letters);

/// Concrete syntax: identifiers for letters, `.` or whitespace for
/// concatenation, `^n` finite power, `^w` omega power, `()` empty word.
Expr parse_word_expr(const std::string& text);
std::string print_word_expr(const Expr& e);

/// Word normal form: a sequence of atoms, each a letter or an omega-power
/// of an atom sequence. Computed by flattening concatenations, expanding
/// finite powers, dropping the empty word, reducing omega bodies to their
/// primitive root, and absorbing periodic prefixes into the omega power
/// (x (y x)^w and (x y)^w denote the same word).
struct NfAtom {
  bool is_omega = false;
  std::string letter;          // when !is_omega
  std::vector<NfAtom> body;    // when is_omega

  bool operator==(const NfAtom&) const = default;
};
using NfSeq = std::vector<NfAtom>;

NfSeq normal_form(const Expr& e);

/// True iff the two expressions denote the same ordinal word, as witnessed
/// by equal normal forms.
bool words_equal(const Expr& a, const Expr& b);

/// Expands a finite expression (no omega powers) to its letter sequence.
/// Throws InputError on omega powers or when the length exceeds the bound.
std::vector<std::string> expand_finite(const Expr& e,
                                       std::size_t bound = 64);

/// True iff no FO sentence of quantifier depth <= k distinguishes the two
/// finite words: the k-round game decided by the split recursion. Bounds:
/// lengths <= len_bound, k <= k_bound.
bool ef_equiv_finite(const Expr& u, const Expr& v, unsigned k,
                     std::size_t len_bound = 64, unsigned k_bound = 4);

}  // namespace ordsep
