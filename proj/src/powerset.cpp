#include "ordsep/powerset.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace ordsep {

std::size_t Subset::count() const {
  return static_cast<std::size_t>(std::popcount(bits));
}

std::vector<Elem> elements_of(Subset s, std::size_t carrier_size) {
  std::vector<Elem> out;
  for (Elem i = 0; i < carrier_size; ++i)
    if (s.contains(i)) out.push_back(i);
  return out;
}

std::string subset_name(const Presentation& p, Subset s) {
  std::string out = "{";
  bool first = true;
  for (Elem x : elements_of(s, p.size())) {
    if (!first) out += ",";
    out += p.name(x);
    first = false;
  }
  return out + "}";
}

Subset p_product(const Presentation& p, Subset a, Subset b) {
  Subset out;
  for (Elem x : elements_of(a, p.size()))
    for (Elem y : elements_of(b, p.size())) out.add(p.product(x, y));
  return out;
}

Subset generated_subsemigroup(const Presentation& p, Subset x) {
  Subset closure = x;
  for (;;) {
    Subset next = closure;
    next.bits |= p_product(p, closure, x).bits;
    if (next == closure) return closure;
    closure = next;
  }
}

Subset p_omega(const Presentation& p, Subset x) {
  if (x.empty())
    throw InputError("omega-power of the empty subset is undefined");
  Subset s = generated_subsemigroup(p, x);
  Subset out;
  for (Elem u : elements_of(s, p.size()))
    for (Elem v : elements_of(s, p.size())) out.add(p.product(u, p.omega(v)));
  return out;
}

Subset p_merge(const Presentation& p, Subset x) {
  // Powers of x eventually cycle; the merge is the union over that cycle.
  std::vector<Subset> journal;
  Subset cur = x;
  while (std::find(journal.begin(), journal.end(), cur) == journal.end()) {
    journal.push_back(cur);
    cur = p_product(p, cur, x);
  }
  auto cycle_start = std::find(journal.begin(), journal.end(), cur);
  Subset out;
  for (auto it = cycle_start; it != journal.end(); ++it) out.bits |= it->bits;
  return out;
}

Elem MergeMonoidView::power(Elem x, std::uint64_t n) const {
  Elem acc = unit;
  for (std::uint64_t i = 0; i < n; ++i) acc = product(acc, x);
  return acc;
}

namespace {

Elem view_idempotent_power(const MergeMonoidView& v, Elem x) {
  std::vector<Elem> seen;
  Elem cur = x;
  while (std::find(seen.begin(), seen.end(), cur) == seen.end()) {
    seen.push_back(cur);
    cur = v.product(cur, x);
  }
  auto cycle_start = std::find(seen.begin(), seen.end(), cur);
  for (auto it = cycle_start; it != seen.end(); ++it)
    if (v.product(*it, *it) == *it) return *it;
  throw InternalError("no idempotent in power cycle");
}

}  // namespace

ValidationReport validate_merge_axioms(const MergeMonoidView& v) {
  ValidationReport report;
  const Elem n = static_cast<Elem>(v.size());

  for (Elem a = 0; a < n; ++a) {
    Elem ap = view_idempotent_power(v, a);
    Elem am = v.merge[a];
    // a^{pi+k} <= a^merge; k up to carrier size covers the whole cycle.
    Elem cur = ap;
    for (Elem k = 0; k <= n; ++k) {
      if (!v.below(cur, am)) {
        report.violations.push_back({"merge-dominates-powers",
                                     {v.names[a], std::to_string(k)},
                                     "a^{pi+k} is not below a^merge"});
        break;
      }
      cur = v.product(cur, a);
    }
    if (v.merge[ap] != ap) {
      report.violations.push_back(
          {"merge-of-idempotent-power", {v.names[a]}, "(a^pi)^merge != a^pi"});
    }
    if (v.product(am, am) != am) {
      report.violations.push_back(
          {"merge-idempotent", {v.names[a]}, "a^merge a^merge != a^merge"});
    }
    if (v.merge[am] != am) {
      report.violations.push_back(
          {"merge-stable", {v.names[a]}, "(a^merge)^merge != a^merge"});
    }
  }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem lhs = v.merge[v.product(a, b)];
      Elem rhs = v.product(v.product(a, v.merge[v.product(b, a)]), b);
      if (lhs != rhs) {
        report.violations.push_back({"merge-conjugation",
                                     {v.names[a], v.names[b]},
                                     "(ab)^merge != a(ba)^merge b"});
      }
    }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (v.below(a, b) && !v.below(v.merge[a], v.merge[b])) {
        report.violations.push_back({"merge-monotone",
                                     {v.names[a], v.names[b]},
                                     "a <= b but a^merge !<= b^merge"});
      }

  return report;
}

Elem PowerMonoid::index_of(Subset s) const {
  auto it = std::find(carrier.begin(), carrier.end(), s);
  if (it == carrier.end())
    throw InputError("subset not in power monoid carrier: " +
                     subset_name(base, s));
  return static_cast<Elem>(it - carrier.begin());
}

MergeMonoidView PowerMonoid::view() const {
  MergeMonoidView v;
  const Elem n = static_cast<Elem>(carrier.size());
  v.names.resize(n);
  v.mul.assign(n, std::vector<Elem>(n));
  v.omega.resize(n);
  v.merge.resize(n);
  v.leq.assign(n, std::vector<bool>(n, false));
  v.unit = pres.unit();
  for (Elem i = 0; i < n; ++i) {
    v.names[i] = subset_name(base, carrier[i]);
    v.omega[i] = pres.omega(i);
    v.merge[i] = index_of(p_merge(base, carrier[i]));
    for (Elem j = 0; j < n; ++j) {
      v.mul[i][j] = pres.product(i, j);
      v.leq[i][j] = carrier[i].subset_of(carrier[j]);
    }
  }
  return v;
}

namespace {

PowerMonoid build_power_monoid(const Presentation& base,
                               std::vector<Subset> carrier) {
  PowerMonoid pm{base, std::move(carrier), Presentation({"x"}, 0, {0}, {0})};
  const Elem n = static_cast<Elem>(pm.carrier.size());
  std::map<std::uint64_t, Elem> index;
  std::vector<std::string> names;
  for (Elem i = 0; i < n; ++i) {
    index[pm.carrier[i].bits] = i;
    names.push_back(subset_name(base, pm.carrier[i]));
  }
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  std::vector<Elem> omega(n);
  for (Elem i = 0; i < n; ++i) {
    omega[i] = index.at(p_omega(base, pm.carrier[i]).bits);
    for (Elem j = 0; j < n; ++j)
      mul[static_cast<std::size_t>(i) * n + j] =
          index.at(p_product(base, pm.carrier[i], pm.carrier[j]).bits);
  }
  Elem unit = index.at(Subset::single(base.unit()).bits);
  pm.pres = Presentation(std::move(names), unit, std::move(mul),
                         std::move(omega));
  return pm;
}

}  // namespace

PowerMonoid power_presentation(const Presentation& base, std::size_t cap) {
  if (base.size() > cap)
    throw InputError("carrier too large for a full power monoid (size " +
                     std::to_string(base.size()) + ", cap " +
                     std::to_string(cap) + "); supply generators instead");
  std::vector<Subset> carrier;
  const std::uint64_t total = std::uint64_t{1} << base.size();
  for (std::uint64_t bits = 1; bits < total; ++bits)
    carrier.push_back(Subset{bits});
  return build_power_monoid(base, std::move(carrier));
}

PowerMonoid power_presentation_reachable(
    const Presentation& base, const std::vector<Subset>& generators) {
  std::vector<Subset> carrier{Subset::single(base.unit())};
  auto add = [&](Subset s) {
    if (std::find(carrier.begin(), carrier.end(), s) == carrier.end())
      carrier.push_back(s);
  };
  for (Subset g : generators) {
    if (g.empty()) throw InputError("empty generator subset");
    add(g);
  }
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    add(p_omega(base, carrier[i]));
    add(p_merge(base, carrier[i]));
    for (std::size_t j = 0; j <= i; ++j) {
      add(p_product(base, carrier[i], carrier[j]));
      add(p_product(base, carrier[j], carrier[i]));
    }
  }
  std::sort(carrier.begin(), carrier.end());
  return build_power_monoid(base, std::move(carrier));
}

}  // namespace ordsep
