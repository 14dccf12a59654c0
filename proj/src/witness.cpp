#include "ordsep/witness.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ordsep {

const Expr& WitnessFamily::expr_of(Elem x) const {
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == x) return exprs[i];
  throw InternalError("element has no witness expression in this family");
}

const Deriv& WitnessFamily::pair(Elem x, Elem y) const {
  auto it = derivs.find({x, y});
  if (it == derivs.end())
    throw InternalError("missing pairwise derivation in witness family");
  return it->second;
}

WitnessBuilder::WitnessBuilder(const Presentation& base,
                               const LetterMap& letters,
                               const SaturationResult& sat, unsigned k)
    : base_(base), letters_(letters), sat_(sat), k_(k) {
  if (k > 30) throw InputError("depth too large (max 30)");
}

const WitnessFamily& WitnessBuilder::family(int sat_index) {
  auto it = memo_.find(sat_index);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(sat_index, build(sat_index)).first->second;
}

namespace {

// Left fold of transitivity over a nonempty derivation chain.
Deriv chain_trans(std::vector<Deriv> steps) {
  Deriv out = steps.front();
  for (std::size_t i = 1; i < steps.size(); ++i)
    out = d_trans(out, steps[i]);
  return out;
}

}  // namespace

WitnessFamily WitnessBuilder::build(int sat_index) {
  const Subset X = sat_.members[sat_index];
  const Provenance prov = sat_.provenance[sat_index];
  const std::size_t n = base_.size();

  WitnessFamily fam;
  fam.elems = elements_of(X, n);

  auto diag = [&](WitnessFamily& f) {
    for (std::size_t i = 0; i < f.elems.size(); ++i)
      f.derivs[{f.elems[i], f.elems[i]}] = d_refl(f.exprs[i], k_);
  };

  switch (prov.rule) {
    case Provenance::Rule::Seed: {
      if (fam.elems.size() != 1)
        throw InternalError("seed closure member is not a letter singleton");
      Elem x = fam.elems[0];
      std::string letter;
      for (const auto& [l, e] : letters_.letters)
        if (e == x) {
          letter = l;
          break;
        }
      if (letter.empty())
        throw InternalError("seed element has no letter mapping to it");
      fam.exprs = {mk_letter(letter)};
      diag(fam);
      return fam;
    }

    case Provenance::Rule::Unit: {
      fam.exprs = {mk_empty()};
      diag(fam);
      return fam;
    }

    case Provenance::Rule::Product: {
      const WitnessFamily& fy = family(prov.left);
      const WitnessFamily& fz = family(prov.right);
      std::vector<std::pair<Elem, Elem>> split;  // chosen (y, z) per element
      for (Elem x : fam.elems) {
        bool found = false;
        for (Elem y : fy.elems) {
          for (Elem z : fz.elems) {
            if (base_.product(y, z) == x) {
              split.emplace_back(y, z);
              fam.exprs.push_back(
                  mk_concat(fy.expr_of(y), fz.expr_of(z)));
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found)
          throw InternalError("product member without a factorisation");
      }
      for (std::size_t i = 0; i < fam.elems.size(); ++i)
        for (std::size_t j = 0; j < fam.elems.size(); ++j) {
          if (i == j) continue;
          fam.derivs[{fam.elems[i], fam.elems[j]}] =
              d_concat(fy.pair(split[i].first, split[j].first),
                       fz.pair(split[i].second, split[j].second));
        }
      diag(fam);
      return fam;
    }

    case Provenance::Rule::Merge: {
      const WitnessFamily& fy = family(prov.left);
      const Subset Y = sat_.members[prov.left];
      const Elem y0 = fy.elems[0];
      const Expr& u0 = fy.expr_of(y0);
      const std::uint64_t lo = (std::uint64_t{1} << k_) + 1;

      // Powers of Y up to where every member of X is reachable past lo.
      std::vector<Subset> pows{Y};  // pows[m-1] = Y^m
      auto power_at = [&](std::size_t m) -> Subset {
        while (pows.size() < m)
          pows.push_back(p_product(base_, pows.back(), Y));
        return pows[m - 1];
      };
      auto exponent_for = [&](Elem x) -> std::uint64_t {
        for (std::uint64_t m = lo; m <= lo + (std::uint64_t{1} << n) + n; ++m)
          if (power_at(m).contains(x)) return m;
        throw InternalError("merge member not reachable as a long power");
      };
      // Greedy factorisation of x into m factors from Y.
      auto factorise = [&](Elem x, std::uint64_t m) {
        std::vector<Elem> out;
        Elem cur = x;
        for (std::uint64_t left = m; left > 1; --left) {
          bool found = false;
          for (Elem y : fy.elems) {
            for (Elem r : elements_of(power_at(left - 1), n))
              if (base_.product(y, r) == cur) {
                out.push_back(y);
                cur = r;
                found = true;
                break;
              }
            if (found) break;
          }
          if (!found)
            throw InternalError("merge power lost its factorisation");
        }
        out.push_back(cur);
        return out;
      };

      const bool single = fy.elems.size() == 1;
      std::vector<std::uint64_t> exps;
      std::vector<Deriv> to_pow;  // u_x equivalent to u0^{m_x}
      for (Elem x : fam.elems) {
        std::uint64_t m = exponent_for(x);
        exps.push_back(m);
        if (single) {
          Expr u = mk_pow(u0, m);
          fam.exprs.push_back(u);
          to_pow.push_back(d_refl(u, k_));
        } else {
          std::vector<Elem> blocks = factorise(x, m);
          std::vector<Expr> bexprs, uexprs;
          std::vector<Deriv> congs;
          for (Elem b : blocks) {
            bexprs.push_back(fy.expr_of(b));
            uexprs.push_back(u0);
          }
          Expr u = mk_chain(bexprs);
          fam.exprs.push_back(u);
          // Blockwise congruence to u0 ... u0, then re-bracket to a power.
          Deriv cc = fy.pair(blocks.back(), y0);
          for (std::size_t i = blocks.size() - 1; i-- > 0;)
            cc = d_concat(fy.pair(blocks[i], y0), cc);
          to_pow.push_back(
              d_trans(cc, d_struct(mk_chain(uexprs), mk_pow(u0, m), k_)));
        }
      }
      for (std::size_t i = 0; i < fam.elems.size(); ++i)
        for (std::size_t j = 0; j < fam.elems.size(); ++j) {
          if (i == j) continue;
          std::vector<Deriv> steps{to_pow[i]};
          for (std::uint64_t m = exps[i]; m < exps[j]; ++m)
            steps.push_back(d_pump(u0, m, /*up=*/true, k_));
          for (std::uint64_t m = exps[i]; m > exps[j]; --m)
            steps.push_back(d_pump(u0, m - 1, /*up=*/false, k_));
          steps.push_back(d_reverse(to_pow[j]));
          fam.derivs[{fam.elems[i], fam.elems[j]}] = chain_trans(steps);
        }
      diag(fam);
      return fam;
    }

    case Provenance::Rule::Omega: {
      const WitnessFamily& fy = family(prov.left);
      const Subset Y = sat_.members[prov.left];
      const Subset S = generated_subsemigroup(base_, Y);

      // Shortest factorisation over Y for every element of <Y>.
      std::map<Elem, std::vector<Elem>> fact;
      std::vector<Elem> queue;
      for (Elem y : fy.elems)
        if (!fact.count(y)) {
          fact[y] = {y};
          queue.push_back(y);
        }
      for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (Elem y : fy.elems) {
          Elem t = base_.product(queue[qi], y);
          if (!fact.count(t)) {
            fact[t] = fact[queue[qi]];
            fact[t].push_back(y);
            queue.push_back(t);
          }
        }

      std::vector<std::vector<Elem>> pre, per;  // block lists per element
      for (Elem x : fam.elems) {
        bool found = false;
        for (Elem s : elements_of(S, n)) {
          for (Elem t : elements_of(S, n))
            if (base_.product(s, base_.omega(t)) == x) {
              pre.push_back(fact.at(s));
              per.push_back(fact.at(t));
              found = true;
              break;
            }
          if (found) break;
        }
        if (!found)
          throw InternalError("omega member without a lasso decomposition");
        std::vector<Expr> a, p;
        for (Elem b : pre.back()) a.push_back(fy.expr_of(b));
        for (Elem b : per.back()) p.push_back(fy.expr_of(b));
        fam.exprs.push_back(mk_concat(mk_chain(a), mk_omega(mk_chain(p))));
      }

      // Pad the shorter prefix by peeling period blocks into it.
      auto peel = [&](const std::vector<Elem>& a, const std::vector<Elem>& p,
                      std::size_t upto) {
        std::vector<Elem> prefix = a, period = p;
        for (std::size_t d = 0; prefix.size() < upto; ++d)
          prefix.push_back(p[d % p.size()]);
        std::size_t rot = (upto - a.size()) % p.size();
        std::rotate(period.begin(), period.begin() + rot, period.end());
        return std::make_pair(prefix, period);
      };
      auto exprs_of = [&](const std::vector<Elem>& blocks) {
        std::vector<Expr> out;
        for (Elem b : blocks) out.push_back(fy.expr_of(b));
        return out;
      };

      for (std::size_t i = 0; i < fam.elems.size(); ++i)
        for (std::size_t j = 0; j < fam.elems.size(); ++j) {
          if (i == j) continue;
          std::size_t ell = std::max(pre[i].size(), pre[j].size());
          auto [lpre, lper] = peel(pre[i], per[i], ell);
          auto [rpre, rper] = peel(pre[j], per[j], ell);
          std::vector<Deriv> prem;
          for (std::size_t b = 0; b < ell; ++b)
            prem.push_back(fy.pair(lpre[b], rpre[b]));
          std::size_t reps = std::lcm(lper.size(), rper.size());
          for (std::size_t b = 0; b < reps; ++b)
            prem.push_back(
                fy.pair(lper[b % lper.size()], rper[b % rper.size()]));
          fam.derivs[{fam.elems[i], fam.elems[j]}] = d_omega_seq(
              exprs_of(lpre), exprs_of(lper), exprs_of(rpre), exprs_of(rper),
              std::move(prem), fam.exprs[i], fam.exprs[j], k_);
        }
      diag(fam);
      return fam;
    }
  }
  throw InternalError("unknown provenance rule");
}

WitnessPair witness_pair(const LanguageRecognizer& K,
                         const LanguageRecognizer& L, unsigned k) {
  SeparationOutcome o = separate(K, L);
  if (o.separable)
    throw InputError(
        "the languages are separable; no indistinguishable pair exists");
  WitnessBuilder builder(K.pres, K.letters, o.sat, k);
  const WitnessFamily& fam = builder.family(o.blocking);
  return {fam.expr_of(o.mark_left), fam.expr_of(o.mark_right),
          fam.pair(o.mark_left, o.mark_right), o.blocking, o.mark_left,
          o.mark_right};
}

// ---------- ordinals and the one-letter approximant ----------

CnfOrdinal parse_ordinal(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InputError("empty ordinal");
  if (s == "0") return {};

  CnfOrdinal out;
  std::istringstream in(s);
  std::string term;
  while (std::getline(in, term, '+')) {
    if (term.empty()) throw InputError("empty term in ordinal");
    auto number = [&term](std::size_t& pos) {
      std::size_t start = pos;
      std::uint64_t v = 0;
      while (pos < term.size() && std::isdigit(
                                      static_cast<unsigned char>(term[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(term[pos] - '0');
        if (v > (std::uint64_t{1} << 40))
          throw InputError("ordinal constant too large: " + term);
        ++pos;
      }
      if (pos == start)
        throw InputError("expected a number in ordinal term: " + term);
      return v;
    };
    unsigned exp = 0;
    std::uint64_t coeff = 0;
    std::size_t pos = 0;
    if (term[0] == 'w') {
      exp = 1;
      pos = 1;
      if (pos < term.size() && term[pos] == '^')
        exp = static_cast<unsigned>(number(++pos));
      if (pos < term.size() && term[pos] == '*')
        coeff = number(++pos);
      else
        coeff = 1;
    } else {
      coeff = number(pos);
    }
    if (pos != term.size())
      throw InputError("malformed ordinal term: " + term);
    if (coeff == 0) throw InputError("zero coefficient in ordinal term");
    if (!out.terms.empty() && out.terms.back().first <= exp)
      throw InputError("ordinal terms must have strictly descending powers");
    if (exp > 8) throw InputError("ordinal power too large (max w^8)");
    out.terms.emplace_back(exp, coeff);
  }
  return out;
}

std::string print_ordinal(const CnfOrdinal& o) {
  if (o.is_zero()) return "0";
  std::string s;
  for (const auto& [exp, coeff] : o.terms) {
    if (!s.empty()) s += "+";
    if (exp == 0) {
      s += std::to_string(coeff);
    } else {
      s += exp == 1 ? "w" : "w^" + std::to_string(exp);
      if (coeff != 1) s += "*" + std::to_string(coeff);
    }
  }
  return s;
}

unsigned view_tower_level(const MergeMonoidView& v, Elem a) {
  Elem cur = a;
  for (unsigned level = 0; level <= 2 * v.size(); ++level) {
    if (v.omega[cur] == cur) return level;
    cur = v.omega[cur];
  }
  throw InternalError("omega tower failed to stabilise");
}

Elem approximate_one_letter(const MergeMonoidView& v, Elem a,
                            const CnfOrdinal& kappa) {
  unsigned level = view_tower_level(v, a);
  std::vector<Elem> tower{a};  // tower[m] = value of a^{w^m}
  for (unsigned m = 0; m < level; ++m) tower.push_back(v.omega[tower[m]]);

  // One factor per CNF digit, coarsened to the digit base's merge whenever
  // that stays an upper bound; digits at or above the stabilisation level
  // collapse into one top factor.
  auto digit = [&](Elem base, Elem exact) {
    Elem m = v.merge[base];
    return v.below(exact, m) ? m : exact;
  };
  Elem result = v.unit;
  bool top_done = false;
  for (const auto& [exp, coeff] : kappa.terms) {
    if (exp >= level) {
      if (!top_done) {
        result = v.product(result, digit(tower[level], tower[level]));
        top_done = true;
      }
      continue;
    }
    result = v.product(result, digit(tower[exp], v.power(tower[exp], coeff)));
  }
  return result;
}

}  // namespace ordsep
