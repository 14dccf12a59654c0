#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ordsep/decision.hpp"
#include "ordsep/format.hpp"
#include "ordsep/powerset.hpp"

namespace testutil {

using namespace ordsep;

inline ParsedFile load_data(const std::string& name) {
  return load_presentation(std::string(ORDSEP_DATA_DIR) + "/" + name);
}

// The full corpus; the small ones (carrier <= 5) come first.
inline std::vector<std::string> corpus_files() {
  return {"trivial.mon", "u1.mon", "null3.mon", "aomega3.mon",
          "semilat4.mon", "sixelem.mon"};
}

inline std::vector<std::string> small_corpus_files() {
  return {"trivial.mon", "u1.mon", "null3.mon", "aomega3.mon",
          "semilat4.mon"};
}

inline Subset subset_of(const Presentation& p,
                        const std::vector<std::string>& names) {
  Subset s;
  for (const auto& n : names) {
    auto e = p.find(n);
    if (!e) throw InputError("no element " + n);
    s.add(*e);
  }
  return s;
}

inline std::vector<Subset> all_nonempty_subsets(const Presentation& p) {
  std::vector<Subset> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << p.size()); ++bits)
    out.push_back(Subset{bits});
  return out;
}

// Independent oracle for p_omega: values of u * omega(v) for u, v nonempty
// words over X of length <= bound.
inline Subset omega_oracle(const Presentation& p, Subset x,
                           std::size_t bound) {
  // Values of words over X of each length 1..bound.
  std::set<Elem> values;
  Subset layer = x;
  for (std::size_t len = 1; len <= bound; ++len) {
    for (Elem e : elements_of(layer, p.size())) values.insert(e);
    layer = p_product(p, layer, x);
  }
  Subset out;
  for (Elem u : values)
    for (Elem v : values) out.add(p.product(u, p.omega(v)));
  return out;
}

// Independent oracle for p_merge: the eventual intersection of the unions
// of power tails, evaluated with bounds past the cycle.
inline Subset merge_oracle(const Presentation& p, Subset x) {
  std::vector<Subset> powers{x};  // powers[m-1] = X^m
  std::size_t start = 0, period = 0;
  for (;;) {
    Subset next = p_product(p, powers.back(), x);
    auto it = std::find(powers.begin(), powers.end(), next);
    if (it != powers.end()) {
      start = static_cast<std::size_t>(it - powers.begin());
      period = powers.size() - start;
      break;
    }
    powers.push_back(next);
  }
  std::size_t hi = start + 2 * period;  // past one full extra cycle
  while (powers.size() < hi + 1)
    powers.push_back(p_product(p, powers.back(), x));
  Subset result;
  bool first = true;
  for (std::size_t n = 0; n <= start + period; ++n) {
    Subset tail_union;
    for (std::size_t m = n; m <= hi; ++m) tail_union.bits |= powers[m].bits;
    if (first) {
      result = tail_union;
      first = false;
    } else {
      result.bits &= tail_union.bits;
    }
  }
  return result;
}

inline std::set<Elem> view_set_product(const MergeMonoidView& v,
                                       const std::set<Elem>& a,
                                       const std::set<Elem>& b) {
  std::set<Elem> out;
  for (Elem x : a)
    for (Elem y : b) out.insert(v.product(x, y));
  return out;
}

}  // namespace testutil
