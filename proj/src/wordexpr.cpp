#include "ordsep/wordexpr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ordsep {

namespace {
Expr node(WordExpr w) { return std::make_shared<const WordExpr>(std::move(w)); }
using Kind = WordExpr::Kind;
}  // namespace

Expr mk_empty() { return node({Kind::Empty}); }
Expr mk_letter(const std::string& a) { return node({Kind::Letter, a}); }
Expr mk_concat(Expr a, Expr b) {
  return node({Kind::Concat, "", std::move(a), std::move(b)});
}
Expr mk_pow(Expr e, std::uint64_t n) {
  if (n < 1) throw InputError("finite power exponent must be >= 1");
  return node({Kind::Pow, "", nullptr, nullptr, std::move(e), n});
}
Expr mk_omega(Expr e) {
  return node({Kind::OmegaPow, "", nullptr, nullptr, std::move(e)});
}

Expr mk_chain(const std::vector<Expr>& blocks) {
  if (blocks.empty()) return mk_empty();
  Expr out = blocks.back();
  for (std::size_t i = blocks.size() - 1; i-- > 0;)
    out = mk_concat(blocks[i], out);
  return out;
}

bool same_expr(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Empty: return true;
    case Kind::Letter: return a->letter == b->letter;
    case Kind::Concat:
      return same_expr(a->left, b->left) && same_expr(a->right, b->right);
    case Kind::Pow:
      return a->exp == b->exp && same_expr(a->body, b->body);
    case Kind::OmegaPow: return same_expr(a->body, b->body);
  }
  return false;
}

Elem eval_expr(const Expr& e, const Presentation& pres,
               const LetterMap& letters) {
  switch (e->kind) {
    case Kind::Empty: return pres.unit();
    case Kind::Letter: return letters.image(e->letter);
    case Kind::Concat:
      return pres.product(eval_expr(e->left, pres, letters),
                          eval_expr(e->right, pres, letters));
    case Kind::Pow:
      return pres.power(eval_expr(e->body, pres, letters), e->exp);
    case Kind::OmegaPow:
      return pres.omega(eval_expr(e->body, pres, letters));
  }
  throw InternalError("unknown expression node");
}

// ---------- concrete syntax ----------

namespace {

struct Token {
  enum class Type { Ident, Number, LParen, RParen, Dot, Caret, OmegaExp, End };
  Type type;
  std::string text;
  std::uint64_t value = 0;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      out.push_back({Token::Type::LParen});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Type::RParen});
      ++i;
    } else if (c == '.') {
      out.push_back({Token::Type::Dot});
      ++i;
    } else if (c == '^') {
      out.push_back({Token::Type::Caret});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      out.push_back(
          {Token::Type::Number, text.substr(i, j - i),
           std::stoull(text.substr(i, j - i))});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      out.push_back({Token::Type::Ident, text.substr(i, j - i)});
      i = j;
    } else {
      throw InputError(std::string("unexpected character in word expression: ") + c);
    }
  }
  out.push_back({Token::Type::End});
  return out;
}

struct Parser {
  const std::vector<Token>& toks;
  std::size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  Token take() { return toks[pos++]; }

  Expr parse_expr() {
    std::vector<Expr> factors;
    for (;;) {
      const Token& t = peek();
      if (t.type == Token::Type::Dot) {
        take();
        continue;
      }
      if (t.type != Token::Type::Ident && t.type != Token::Type::LParen)
        break;
      factors.push_back(parse_factor());
    }
    if (factors.empty())
      throw InputError("empty word expression (use () for the empty word)");
    Expr out = factors.back();
    for (std::size_t i = factors.size() - 1; i-- > 0;)
      out = mk_concat(factors[i], out);
    return out;
  }

  Expr parse_factor() {
    Expr e = parse_primary();
    while (peek().type == Token::Type::Caret) {
      take();
      Token t = take();
      if (t.type == Token::Type::Number) {
        e = mk_pow(e, t.value);
      } else if (t.type == Token::Type::Ident && t.text == "w") {
        e = mk_omega(e);
      } else {
        throw InputError("exponent must be a number or w");
      }
    }
    return e;
  }

  Expr parse_primary() {
    Token t = take();
    if (t.type == Token::Type::Ident) return mk_letter(t.text);
    if (t.type == Token::Type::LParen) {
      if (peek().type == Token::Type::RParen) {
        take();
        return mk_empty();
      }
      Expr e = parse_expr();
      if (take().type != Token::Type::RParen)
        throw InputError("missing ) in word expression");
      return e;
    }
    throw InputError("expected a letter or ( in word expression");
  }
};

}  // namespace

Expr parse_word_expr(const std::string& text) {
  std::vector<Token> toks = lex(text);
  Parser p{toks};
  Expr e = p.parse_expr();
  if (p.peek().type != Token::Type::End)
    throw InputError("trailing input in word expression");
  return e;
}

namespace {

// Parenthesize non-atomic bodies of powers and concat factors that are
// themselves concatenations (redundant but unambiguous).
std::string print_rec(const Expr& e, bool as_factor) {
  switch (e->kind) {
    case Kind::Empty: return "()";
    case Kind::Letter: return e->letter;
    case Kind::Concat: {
      std::string s =
          print_rec(e->left, true) + "." + print_rec(e->right, true);
      return as_factor ? "(" + s + ")" : s;
    }
    case Kind::Pow:
      return print_rec(e->body, true) + "^" + std::to_string(e->exp);
    case Kind::OmegaPow: return print_rec(e->body, true) + "^w";
  }
  return "?";
}

}  // namespace

std::string print_word_expr(const Expr& e) { return print_rec(e, false); }

// ---------- normal form ----------

namespace {

constexpr std::size_t kNfAtomBudget = 1 << 20;

void check_budget(std::size_t n) {
  if (n > kNfAtomBudget)
    throw InputError("word expression too large to normalize");
}

// Shortest d with seq = (first d atoms) repeated.
void primitive_reduce(NfSeq& seq) {
  for (std::size_t d = 1; d <= seq.size() / 2; ++d) {
    if (seq.size() % d != 0) continue;
    bool rep = true;
    for (std::size_t i = d; i < seq.size() && rep; ++i)
      rep = seq[i] == seq[i % d];
    if (rep) {
      seq.resize(d);
      return;
    }
  }
}

void append_nf(NfSeq& out, const Expr& e) {
  switch (e->kind) {
    case Kind::Empty: return;
    case Kind::Letter:
      out.push_back({false, e->letter, {}});
      check_budget(out.size());
      return;
    case Kind::Concat:
      append_nf(out, e->left);
      append_nf(out, e->right);
      return;
    case Kind::Pow: {
      NfSeq body;
      append_nf(body, e->body);
      check_budget(out.size() + body.size() * e->exp);
      for (std::uint64_t i = 0; i < e->exp; ++i)
        out.insert(out.end(), body.begin(), body.end());
      return;
    }
    case Kind::OmegaPow: {
      NfSeq body;
      append_nf(body, e->body);
      if (body.empty()) return;  // ()^w is the empty word
      primitive_reduce(body);
      // Absorb a matching periodic tail of the preceding word:
      // ... x (y x)^w is the same word as ... (x y)^w.
      while (!out.empty() && out.back() == body.back()) {
        out.pop_back();
        std::rotate(body.begin(), body.end() - 1, body.end());
      }
      out.push_back({true, "", std::move(body)});
      return;
    }
  }
}

}  // namespace

NfSeq normal_form(const Expr& e) {
  NfSeq out;
  append_nf(out, e);
  return out;
}

bool words_equal(const Expr& a, const Expr& b) {
  return normal_form(a) == normal_form(b);
}

std::vector<std::string> expand_finite(const Expr& e, std::size_t bound) {
  NfSeq nf = normal_form(e);
  std::vector<std::string> out;
  for (const NfAtom& a : nf) {
    if (a.is_omega)
      throw InputError("expression denotes an infinite word");
    out.push_back(a.letter);
    if (out.size() > bound)
      throw InputError("finite word exceeds the length bound " +
                       std::to_string(bound));
  }
  return out;
}

// ---------- the k-round game on finite words ----------

namespace {

struct Game {
  const std::vector<std::string>& u;
  const std::vector<std::string>& v;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t,
                      unsigned>,
           bool>
      memo;

  bool equiv(std::size_t ul, std::size_t uh, std::size_t vl, std::size_t vh,
             unsigned k) {
    if (k == 0) return true;
    auto key = std::make_tuple(ul, uh, vl, vh, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    memo[key] = true;  // placeholder against (impossible) reentry
    bool ok = half(ul, uh, vl, vh, k, u, v) && half(vl, vh, ul, uh, k, v, u);
    memo[key] = ok;
    return ok;
  }

  // For every position the challenger picks on side a, the matcher finds a
  // same-letter position on side b with equivalent flanks one round down.
  bool half(std::size_t al, std::size_t ah, std::size_t bl, std::size_t bh,
            unsigned k, const std::vector<std::string>& a,
            const std::vector<std::string>& b) {
    for (std::size_t i = al; i < ah; ++i) {
      bool matched = false;
      for (std::size_t j = bl; j < bh && !matched; ++j) {
        if (a[i] != b[j]) continue;
        bool pre = (&a == &u) ? equiv(al, i, bl, j, k - 1)
                              : equiv(bl, j, al, i, k - 1);
        bool post = (&a == &u) ? equiv(i + 1, ah, j + 1, bh, k - 1)
                               : equiv(j + 1, bh, i + 1, ah, k - 1);
        matched = pre && post;
      }
      if (!matched) return false;
    }
    return true;
  }
};

}  // namespace

bool ef_equiv_finite(const Expr& u, const Expr& v, unsigned k,
                     std::size_t len_bound, unsigned k_bound) {
  if (k > k_bound)
    throw InputError("game depth exceeds the bound " +
                     std::to_string(k_bound));
  std::vector<std::string> uw = expand_finite(u, len_bound);
  std::vector<std::string> vw = expand_finite(v, len_bound);
  Game g{uw, vw, {}};
  return g.equiv(0, uw.size(), 0, vw.size(), k);
}

}  // namespace ordsep
