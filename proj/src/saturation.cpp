#include "ordsep/saturation.hpp"

#include <algorithm>
#include <deque>

namespace ordsep {

const char* rule_name(Provenance::Rule r) {
  switch (r) {
    case Provenance::Rule::Seed: return "seed";
    case Provenance::Rule::Unit: return "unit";
    case Provenance::Rule::Product: return "product";
    case Provenance::Rule::Merge: return "merge";
    case Provenance::Rule::Omega: return "omega";
  }
  return "?";
}

int SaturationResult::find(Subset s) const {
  auto it = std::find(members.begin(), members.end(), s);
  return it == members.end() ? -1 : static_cast<int>(it - members.begin());
}

SaturationResult saturate(const Presentation& base,
                          const std::vector<Subset>& seeds) {
  SaturationResult sat;

  struct Task {
    Provenance::Rule rule;
    int left, right;
  };
  std::deque<Task> worklist;

  // Adding a member enqueues every new rule application it enables,
  // in rule order product < merge < omega and canonical operand order.
  auto enqueue_for = [&](int i) {
    for (int j = 0; j < static_cast<int>(sat.members.size()); ++j) {
      worklist.push_back({Provenance::Rule::Product, j, i});
      if (j != i) worklist.push_back({Provenance::Rule::Product, i, j});
    }
    worklist.push_back({Provenance::Rule::Merge, i, -1});
    worklist.push_back({Provenance::Rule::Omega, i, -1});
  };
  auto add = [&](Subset s, Provenance prov) {
    if (sat.contains(s)) return;
    sat.members.push_back(s);
    sat.provenance.push_back(prov);
    enqueue_for(static_cast<int>(sat.members.size()) - 1);
  };

  for (Subset s : seeds) {
    if (s.empty()) throw InputError("empty seed subset in saturation");
    add(s, {Provenance::Rule::Seed, -1, -1});
  }
  add(Subset::single(base.unit()), {Provenance::Rule::Unit, -1, -1});

  while (!worklist.empty()) {
    Task t = worklist.front();
    worklist.pop_front();
    switch (t.rule) {
      case Provenance::Rule::Product:
        add(p_product(base, sat.members[t.left], sat.members[t.right]),
            {Provenance::Rule::Product, t.left, t.right});
        break;
      case Provenance::Rule::Merge:
        add(p_merge(base, sat.members[t.left]),
            {Provenance::Rule::Merge, t.left, -1});
        break;
      case Provenance::Rule::Omega:
        add(p_omega(base, sat.members[t.left]),
            {Provenance::Rule::Omega, t.left, -1});
        break;
      default:
        break;
    }
  }
  return sat;
}

bool replay_provenance(const Presentation& base, const SaturationResult& sat) {
  for (std::size_t i = 0; i < sat.members.size(); ++i) {
    const Provenance& pr = sat.provenance[i];
    auto in_range = [&](int j) { return j >= 0 && j < static_cast<int>(i); };
    switch (pr.rule) {
      case Provenance::Rule::Seed:
        break;
      case Provenance::Rule::Unit:
        if (sat.members[i] != Subset::single(base.unit())) return false;
        break;
      case Provenance::Rule::Product:
        if (!in_range(pr.left) || !in_range(pr.right)) return false;
        if (p_product(base, sat.members[pr.left], sat.members[pr.right]) !=
            sat.members[i])
          return false;
        break;
      case Provenance::Rule::Merge:
        if (!in_range(pr.left)) return false;
        if (p_merge(base, sat.members[pr.left]) != sat.members[i])
          return false;
        break;
      case Provenance::Rule::Omega:
        if (!in_range(pr.left)) return false;
        if (p_omega(base, sat.members[pr.left]) != sat.members[i])
          return false;
        break;
    }
  }
  return true;
}

namespace {

std::set<Elem> close_under(const MergeMonoidView& v, const std::set<Elem>& a,
                           bool with_merge, bool with_omega) {
  std::set<Elem> out = a;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Elem> cur(out.begin(), out.end());
    for (Elem x : cur) {
      for (Elem y : cur) changed |= out.insert(v.product(x, y)).second;
      if (with_merge) changed |= out.insert(v.merge[x]).second;
      if (with_omega) changed |= out.insert(v.omega[x]).second;
    }
  }
  return out;
}

}  // namespace

std::set<Elem> clos_variants(const MergeMonoidView& v, const std::set<Elem>& a,
                             ClosKind kind, bool prose_variant) {
  switch (kind) {
    case ClosKind::Plus:
      return close_under(v, a, false, false);
    case ClosKind::GPlus:
      return close_under(v, a, true, false);
    case ClosKind::GStar: {
      auto out = close_under(v, a, true, false);
      out.insert(v.unit);
      return out;
    }
    case ClosKind::GOrdPlus:
      return close_under(v, a, true, true);
    case ClosKind::GOmega: {
      auto base =
          close_under(v, a, /*with_merge=*/!prose_variant, false);
      std::set<Elem> out;
      for (Elem x : base)
        for (Elem y : base) out.insert(v.product(x, v.omega[y]));
      return out;
    }
  }
  throw InternalError("unknown closure kind");
}

FiniteTrichotomy trichotomy_finite(const MergeMonoidView& v,
                                   const std::set<Elem>& a) {
  if (a.empty()) throw InputError("trichotomy over an empty alphabet");
  std::set<Elem> c = clos_variants(v, a, ClosKind::GPlus);
  auto translate = [&](Elem g, bool left) {
    std::set<Elem> out;
    for (Elem x : c) out.insert(left ? v.product(g, x) : v.product(x, g));
    return out;
  };
  for (Elem g : a) {
    std::set<Elem> img = translate(g, true);
    if (img != c) return {FiniteTrichotomy::Case::LeftDrop, g};
  }
  for (Elem g : a) {
    std::set<Elem> img = translate(g, false);
    if (img != c) return {FiniteTrichotomy::Case::RightDrop, g};
  }
  for (Elem m : c) {
    bool is_max = true;
    for (Elem x : c)
      if (!v.below(x, m)) is_max = false;
    if (is_max) return {FiniteTrichotomy::Case::Maximum, m};
  }
  throw InternalError(
      "finite trichotomy: no case applies");
}

OrdinalTrichotomy trichotomy_ordinal(const MergeMonoidView& v,
                                     const std::set<Elem>& a) {
  if (a.empty()) throw InputError("trichotomy over an empty alphabet");
  std::set<Elem> c = clos_variants(v, a, ClosKind::GOrdPlus);
  for (Elem g : a) {
    std::set<Elem> img;
    for (Elem x : c) img.insert(v.product(g, x));
    if (img != c) return {OrdinalTrichotomy::Case::LeftDrop, g};
  }
  std::set<Elem> omega_part = clos_variants(v, a, ClosKind::GOmega);
  std::set<Elem> dropped = clos_variants(v, omega_part, ClosKind::GOrdPlus);
  if (dropped != c &&
      std::includes(c.begin(), c.end(), dropped.begin(), dropped.end()))
    return {OrdinalTrichotomy::Case::OmegaDrop, std::nullopt};
  bool degenerate = true;
  for (Elem x : c)
    for (Elem y : c)
      if (v.product(x, y) != y || v.omega[x] != v.omega[y]) degenerate = false;
  if (degenerate) return {OrdinalTrichotomy::Case::Degenerate, std::nullopt};
  throw InternalError(
      "ordinal trichotomy: no case applies");
}

}  // namespace ordsep
