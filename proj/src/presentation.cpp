#include "ordsep/presentation.hpp"

#include <algorithm>
#include <set>

namespace ordsep {

Presentation::Presentation(std::vector<std::string> names, Elem unit,
                           std::vector<Elem> product_table,
                           std::vector<Elem> omega_table)
    : names_(std::move(names)),
      unit_(unit),
      mul_(std::move(product_table)),
      omega_(std::move(omega_table)) {
  const std::size_t n = names_.size();
  if (n == 0) throw InputError("empty carrier: a monoid needs a unit");
  if (unit_ >= n) throw InputError("unit index out of range");
  if (mul_.size() != n * n) throw InputError("product table is not total");
  if (omega_.size() != n) throw InputError("omega table is not total");
  for (Elem v : mul_)
    if (v >= n) throw InputError("product table entry outside carrier");
  for (Elem v : omega_)
    if (v >= n) throw InputError("omega table entry outside carrier");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != n) throw InputError("duplicate element names");
}

std::optional<Elem> Presentation::find(const std::string& name) const {
  for (Elem i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Elem Presentation::power(Elem x, std::uint64_t n) const {
  Elem acc = unit_;
  for (std::uint64_t i = 0; i < n; ++i) acc = product(acc, x);
  return acc;
}

bool Presentation::operator==(const Presentation& other) const {
  return names_ == other.names_ && unit_ == other.unit_ &&
         mul_ == other.mul_ && omega_ == other.omega_;
}

ValidationReport Presentation::validate() const {
  ValidationReport report;
  const Elem n = static_cast<Elem>(size());

  for (Elem x = 0; x < n; ++x) {
    if (product(unit_, x) != x || product(x, unit_) != x) {
      report.violations.push_back(
          {"unit", {name(x)}, "unit is not neutral on " + name(x)});
    }
  }
  if (omega(unit_) != unit_) {
    report.violations.push_back(
        {"omega-unit", {name(unit_)}, "omega(unit) != unit"});
  }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (product(product(x, y), z) != product(x, product(y, z))) {
          report.violations.push_back({"associativity",
                                       {name(x), name(y), name(z)},
                                       "(xy)z != x(yz)"});
        }
      }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (product(x, omega(product(y, x))) != omega(product(x, y))) {
        report.violations.push_back(
            {"swap", {name(x), name(y)}, "x(yx)^w != (xy)^w"});
      }
    }

  for (Elem x = 0; x < n; ++x) {
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (omega(power(x, k)) != omega(x)) {
        report.violations.push_back({"power",
                                     {name(x), std::to_string(k)},
                                     "(x^" + std::to_string(k) +
                                         ")^w != x^w for x = " + name(x)});
      }
    }
  }
  return report;
}

Elem idempotent_power(const Presentation& p, Elem x) {
  // Powers of x eventually cycle; the cycle contains exactly one idempotent.
  std::vector<Elem> seen;
  Elem cur = x;
  while (std::find(seen.begin(), seen.end(), cur) == seen.end()) {
    seen.push_back(cur);
    cur = p.product(cur, x);
  }
  auto cycle_start = std::find(seen.begin(), seen.end(), cur);
  for (auto it = cycle_start; it != seen.end(); ++it)
    if (p.product(*it, *it) == *it) return *it;
  throw InternalError("no idempotent in power cycle of " + p.name(x));
}

Elem power_plus(const Presentation& p, Elem x, std::uint64_t k) {
  Elem acc = idempotent_power(p, x);
  for (std::uint64_t i = 0; i < k; ++i) acc = p.product(acc, x);
  return acc;
}

AperiodicityResult is_aperiodic(const Presentation& p) {
  for (Elem x = 0; x < p.size(); ++x)
    if (power_plus(p, x, 1) != idempotent_power(p, x)) return {false, x};
  return {true, std::nullopt};
}

OmegaTower omega_tower_stabilisation(const Presentation& p, Elem x) {
  Elem cur = x;
  const unsigned bound = 2 * static_cast<unsigned>(p.size()) + 1;
  for (unsigned level = 0; level <= bound; ++level) {
    Elem next = p.omega(cur);
    if (next == cur) return {level, cur};
    cur = next;
  }
  throw InternalError("omega tower of " + p.name(x) +
                      " did not stabilise within 2|M| steps");
}

namespace {

// preorders[x][y] says x <= y.
std::vector<unsigned> classes_of(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  std::vector<unsigned> cls(n, 0);
  std::vector<int> rep;  // class id -> representative element
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t c = 0; c < rep.size() && !found; ++c) {
      std::size_t r = static_cast<std::size_t>(rep[c]);
      if (leq[x][r] && leq[r][x]) {
        cls[x] = static_cast<unsigned>(c);
        found = true;
      }
    }
    if (!found) {
      cls[x] = static_cast<unsigned>(rep.size());
      rep.push_back(static_cast<int>(x));
    }
  }
  return cls;
}

}  // namespace

GreenSummary greens(const Presentation& p) {
  const Elem n = static_cast<Elem>(p.size());
  GreenSummary g;
  g.l_leq.assign(n, std::vector<bool>(n, false));
  g.r_leq.assign(n, std::vector<bool>(n, false));
  g.j_leq.assign(n, std::vector<bool>(n, false));

  for (Elem y = 0; y < n; ++y) {
    for (Elem a = 0; a < n; ++a) g.l_leq[p.product(a, y)][y] = true;
    for (Elem b = 0; b < n; ++b) g.r_leq[p.product(y, b)][y] = true;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        g.j_leq[p.product(p.product(a, y), b)][y] = true;
  }

  g.l_class = classes_of(g.l_leq);
  g.r_class = classes_of(g.r_leq);
  g.j_class = classes_of(g.j_leq);

  // H = L meet R.
  g.h_class.assign(n, 0);
  {
    std::vector<std::pair<unsigned, unsigned>> rep;
    for (Elem x = 0; x < n; ++x) {
      std::pair<unsigned, unsigned> key{g.l_class[x], g.r_class[x]};
      auto it = std::find(rep.begin(), rep.end(), key);
      if (it == rep.end()) {
        g.h_class[x] = static_cast<unsigned>(rep.size());
        rep.push_back(key);
      } else {
        g.h_class[x] = static_cast<unsigned>(it - rep.begin());
      }
    }
  }

  unsigned num_j = 0;
  for (Elem x = 0; x < n; ++x) num_j = std::max(num_j, g.j_class[x] + 1);
  g.j_classes.resize(num_j);
  for (Elem x = 0; x < n; ++x) g.j_classes[g.j_class[x]].members.push_back(x);

  for (auto& jc : g.j_classes) {
    for (Elem x : jc.members) {
      if (p.product(x, x) == x) jc.regular = true;
      if (g.j_class[p.omega(x)] == g.j_class[x]) jc.omega_stable = true;
    }
    jc.h_trivial = true;
    for (Elem x : jc.members)
      for (Elem y : jc.members)
        if (x != y && g.h_class[x] == g.h_class[y]) jc.h_trivial = false;
  }
  return g;
}

bool check_r_omega_idempotent(const Presentation& p) {
  GreenSummary g = greens(p);
  for (Elem x = 0; x < p.size(); ++x) {
    Elem xo = p.omega(x);
    if (g.r_class[x] == g.r_class[xo] && p.product(x, x) != x) return false;
  }
  return true;
}

}  // namespace ordsep
