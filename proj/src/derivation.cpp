#include "ordsep/derivation.hpp"

#include <numeric>

namespace ordsep {

namespace {
Deriv node(Derivation d) {
  return std::make_shared<const Derivation>(std::move(d));
}
using Rule = Derivation::Rule;
}  // namespace

Deriv d_refl(Expr e, unsigned k) { return node({Rule::Refl, e, e, k}); }

Deriv d_struct(Expr lhs, Expr rhs, unsigned k) {
  return node({Rule::StructEq, std::move(lhs), std::move(rhs), k});
}

Deriv d_concat(Deriv a, Deriv b) {
  if (a->k != b->k)
    throw InternalError("concatenation congruence premises at different depths");
  Derivation d{Rule::ConcatCong, mk_concat(a->lhs, b->lhs),
               mk_concat(a->rhs, b->rhs), a->k};
  d.premises = {std::move(a), std::move(b)};
  return node(std::move(d));
}

Deriv d_pump(Expr base, std::uint64_t n, bool up, unsigned k) {
  Expr small = mk_pow(base, n), big = mk_pow(base, n + 1);
  Derivation d{Rule::Pump, up ? small : big, up ? big : small, k};
  d.pump_n = n;
  return node(std::move(d));
}

Deriv d_trans(Deriv a, Deriv b) {
  if (a->k != b->k)
    throw InternalError("transitivity premises at different depths");
  Derivation d{Rule::Trans, a->lhs, b->rhs, a->k};
  d.premises = {std::move(a), std::move(b)};
  return node(std::move(d));
}

Deriv d_omega_seq(std::vector<Expr> lp, std::vector<Expr> lper,
                  std::vector<Expr> rp, std::vector<Expr> rper,
                  std::vector<Deriv> premises, Expr lhs, Expr rhs,
                  unsigned k) {
  Derivation d{Rule::OmegaSeqCong, std::move(lhs), std::move(rhs), k};
  d.left_prefix = std::move(lp);
  d.left_period = std::move(lper);
  d.right_prefix = std::move(rp);
  d.right_period = std::move(rper);
  d.premises = std::move(premises);
  return node(std::move(d));
}

Deriv d_reverse(const Deriv& d) {
  Derivation r{d->rule, d->rhs, d->lhs, d->k};
  r.pump_n = d->pump_n;
  switch (d->rule) {
    case Rule::Refl:
    case Rule::StructEq:
    case Rule::Pump:
      break;
    case Rule::ConcatCong:
      for (const Deriv& p : d->premises) r.premises.push_back(d_reverse(p));
      break;
    case Rule::Trans:
      for (auto it = d->premises.rbegin(); it != d->premises.rend(); ++it)
        r.premises.push_back(d_reverse(*it));
      break;
    case Rule::OmegaSeqCong:
      r.left_prefix = d->right_prefix;
      r.left_period = d->right_period;
      r.right_prefix = d->left_prefix;
      r.right_period = d->left_period;
      for (const Deriv& p : d->premises) r.premises.push_back(d_reverse(p));
      break;
  }
  return node(std::move(r));
}

namespace {

struct Checker {
  std::string* diagnostic;

  bool fail(const std::string& path, const std::string& msg) {
    if (diagnostic) *diagnostic = path + ": " + msg;
    return false;
  }

  // Premises may be proved at a greater depth: depth-k' equivalence
  // refines depth-k equivalence for k' >= k.
  bool premise_fits(const Deriv& p, unsigned k, Expr l, Expr r,
                    const std::string& path) {
    if (p->k < k) return fail(path, "premise proved at a shallower depth");
    if (!words_equal(p->lhs, l))
      return fail(path, "premise left side does not match");
    if (!words_equal(p->rhs, r))
      return fail(path, "premise right side does not match");
    return true;
  }

  bool check(const Deriv& d, const std::string& path) {
    switch (d->rule) {
      case Rule::Refl:
        if (!same_expr(d->lhs, d->rhs))
          return fail(path, "reflexivity on distinct terms");
        return true;

      case Rule::StructEq:
        if (!words_equal(d->lhs, d->rhs))
          return fail(path, "sides denote different words");
        return true;

      case Rule::ConcatCong: {
        if (d->premises.size() != 2)
          return fail(path, "concatenation congruence needs two premises");
        const Deriv &a = d->premises[0], &b = d->premises[1];
        if (!words_equal(d->lhs, mk_concat(a->lhs, b->lhs)))
          return fail(path, "left side is not the premise concatenation");
        if (!words_equal(d->rhs, mk_concat(a->rhs, b->rhs)))
          return fail(path, "right side is not the premise concatenation");
        if (a->k < d->k || b->k < d->k)
          return fail(path, "premise proved at a shallower depth");
        return check(a, path + "/0") && check(b, path + "/1");
      }

      case Rule::Pump: {
        if (d->k >= 63) return fail(path, "depth too large");
        std::uint64_t n = d->pump_n;
        std::uint64_t bound = (std::uint64_t{1} << d->k) - 1;
        if (n < 1 || n < bound)
          return fail(path, "pump exponent below 2^k - 1");
        const Expr *small = &d->lhs, *big = &d->rhs;
        if ((*small)->kind != WordExpr::Kind::Pow ||
            (*big)->kind != WordExpr::Kind::Pow)
          return fail(path, "pump sides must be finite powers");
        if ((*small)->exp > (*big)->exp) std::swap(small, big);
        if ((*small)->exp != n || (*big)->exp != n + 1)
          return fail(path, "pump exponents must be n and n+1");
        if (!same_expr((*small)->body, (*big)->body))
          return fail(path, "pump bases differ");
        return true;
      }

      case Rule::Trans: {
        if (d->premises.size() != 2)
          return fail(path, "transitivity needs two premises");
        const Deriv &a = d->premises[0], &b = d->premises[1];
        if (a->k < d->k || b->k < d->k)
          return fail(path, "premise proved at a shallower depth");
        if (!words_equal(d->lhs, a->lhs))
          return fail(path, "left side does not match the first premise");
        if (!words_equal(a->rhs, b->lhs))
          return fail(path, "premise middle terms do not chain");
        if (!words_equal(d->rhs, b->rhs))
          return fail(path, "right side does not match the second premise");
        return check(a, path + "/0") && check(b, path + "/1");
      }

      case Rule::OmegaSeqCong: {
        const auto &lp = d->left_prefix, &lq = d->left_period;
        const auto &rp = d->right_prefix, &rq = d->right_period;
        if (lp.size() != rp.size())
          return fail(path, "prefix block counts differ");
        if (lq.empty() || rq.empty())
          return fail(path, "empty period block list");
        Expr lrebuilt = mk_concat(mk_chain(lp), mk_omega(mk_chain(lq)));
        Expr rrebuilt = mk_concat(mk_chain(rp), mk_omega(mk_chain(rq)));
        if (!words_equal(d->lhs, lrebuilt))
          return fail(path, "left side does not match its block decomposition");
        if (!words_equal(d->rhs, rrebuilt))
          return fail(path,
                      "right side does not match its block decomposition");
        std::size_t reps = std::lcm(lq.size(), rq.size());
        if (d->premises.size() != lp.size() + reps)
          return fail(path, "wrong premise count for the block pairing");
        for (std::size_t j = 0; j < lp.size(); ++j) {
          std::string sub = path + "/" + std::to_string(j);
          if (!premise_fits(d->premises[j], d->k, lp[j], rp[j], sub) ||
              !check(d->premises[j], sub))
            return false;
        }
        for (std::size_t i = 0; i < reps; ++i) {
          std::size_t at = lp.size() + i;
          std::string sub = path + "/" + std::to_string(at);
          if (!premise_fits(d->premises[at], d->k, lq[i % lq.size()],
                            rq[i % rq.size()], sub) ||
              !check(d->premises[at], sub))
            return false;
        }
        return true;
      }
    }
    return fail(path, "unknown rule");
  }
};

}  // namespace

bool check_derivation(const Deriv& d, std::string* diagnostic) {
  Checker c{diagnostic};
  return c.check(d, "");
}

}  // namespace ordsep
