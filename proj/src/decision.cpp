#include "ordsep/decision.hpp"

#include <algorithm>
#include <set>

namespace ordsep {

std::vector<Subset> letter_seeds(const LetterMap& letters) {
  std::vector<Subset> seeds;
  for (const auto& [l, e] : letters.letters) {
    Subset s = Subset::single(e);
    if (std::find(seeds.begin(), seeds.end(), s) == seeds.end())
      seeds.push_back(s);
  }
  return seeds;
}

namespace {

void require_joint(const LanguageRecognizer& a, const LanguageRecognizer& b) {
  if (!(a.pres == b.pres) || a.letters.letters != b.letters.letters)
    throw InputError(
        "recognizers use different monoids or letter maps; supply a joint "
        "recognizer (same presentation and letters) for both languages");
}

Elem first_common(Subset x, Subset f, std::size_t n) {
  for (Elem e : elements_of(x, n))
    if (f.contains(e)) return e;
  throw InternalError("no common element in a supposedly blocking set");
}

}  // namespace

SeparationOutcome separate(const LanguageRecognizer& K,
                           const LanguageRecognizer& L) {
  require_joint(K, L);
  SeparationOutcome out{true, saturate(K.pres, letter_seeds(K.letters))};
  for (std::size_t i = 0; i < out.sat.members.size(); ++i) {
    Subset x = out.sat.members[i];
    if ((x.bits & K.accepting.bits) != 0 && (x.bits & L.accepting.bits) != 0) {
      out.separable = false;
      out.blocking = static_cast<int>(i);
      out.mark_left = first_common(x, K.accepting, K.pres.size());
      out.mark_right = first_common(x, L.accepting, K.pres.size());
      break;
    }
  }
  return out;
}

CoverOutcome cover(const LanguageRecognizer& L,
                   const std::vector<LanguageRecognizer>& Ks) {
  for (const auto& k : Ks) require_joint(L, k);
  CoverOutcome out{true, Ks.empty(),
                   saturate(L.pres, letter_seeds(L.letters))};
  if (out.trivial) return out;
  for (std::size_t i = 0; i < out.sat.members.size(); ++i) {
    Subset x = out.sat.members[i];
    bool blocks = (x.bits & L.accepting.bits) != 0;
    for (const auto& k : Ks) blocks = blocks && (x.bits & k.accepting.bits);
    if (blocks) {
      out.coverable = false;
      out.blocking = static_cast<int>(i);
      out.marks.push_back(first_common(x, L.accepting, L.pres.size()));
      for (const auto& k : Ks)
        out.marks.push_back(first_common(x, k.accepting, L.pres.size()));
      break;
    }
  }
  return out;
}

std::vector<Subset> pointlikes(const Presentation& pres,
                               const LetterMap& letters) {
  SaturationResult sat = saturate(pres, letter_seeds(letters));
  std::set<Subset> down;
  for (Subset x : sat.members) {
    // All nonempty submasks of x.
    for (std::uint64_t sub = x.bits; sub; sub = (sub - 1) & x.bits)
      down.insert(Subset{sub});
  }
  return {down.begin(), down.end()};
}

namespace {

bool fail(std::string* diagnostic, const std::string& msg) {
  if (diagnostic) *diagnostic = msg;
  return false;
}

bool check_sat(const Presentation& pres, const SaturationResult& sat,
               std::string* diagnostic) {
  if (sat.members.size() != sat.provenance.size())
    return fail(diagnostic, "provenance list length mismatch");
  if (!replay_provenance(pres, sat))
    return fail(diagnostic, "provenance replay failed");
  return true;
}

}  // namespace

bool check_certificate(const Presentation& pres, const SeparationOutcome& o,
                       Subset accept_left, Subset accept_right,
                       std::string* diagnostic) {
  if (!check_sat(pres, o.sat, diagnostic)) return false;
  int blocking = -1;
  for (std::size_t i = 0; i < o.sat.members.size(); ++i) {
    Subset x = o.sat.members[i];
    if ((x.bits & accept_left.bits) && (x.bits & accept_right.bits)) {
      blocking = static_cast<int>(i);
      break;
    }
  }
  if (o.separable != (blocking < 0))
    return fail(diagnostic, "verdict contradicts the stored closure scan");
  if (!o.separable) {
    if (o.blocking != blocking)
      return fail(diagnostic, "blocking set is not the first in order");
    Subset x = o.sat.members[o.blocking];
    if (!x.contains(o.mark_left) || !accept_left.contains(o.mark_left))
      return fail(diagnostic, "left mark not in blocking set and accept set");
    if (!x.contains(o.mark_right) || !accept_right.contains(o.mark_right))
      return fail(diagnostic, "right mark not in blocking set and accept set");
  }
  return true;
}

bool check_certificate(const Presentation& pres, const CoverOutcome& o,
                       Subset accept_target,
                       const std::vector<Subset>& accept_covers,
                       std::string* diagnostic) {
  if (!check_sat(pres, o.sat, diagnostic)) return false;
  if (o.trivial != accept_covers.empty())
    return fail(diagnostic, "trivial flag does not match the cover count");
  if (o.trivial) return o.coverable || fail(diagnostic, "trivial yet 'no'");
  int blocking = -1;
  for (std::size_t i = 0; i < o.sat.members.size(); ++i) {
    Subset x = o.sat.members[i];
    bool blocks = (x.bits & accept_target.bits) != 0;
    for (Subset f : accept_covers) blocks = blocks && (x.bits & f.bits);
    if (blocks) {
      blocking = static_cast<int>(i);
      break;
    }
  }
  if (o.coverable != (blocking < 0))
    return fail(diagnostic, "verdict contradicts the stored closure scan");
  if (!o.coverable) {
    if (o.blocking != blocking)
      return fail(diagnostic, "blocking set is not the first in order");
    if (o.marks.size() != accept_covers.size() + 1)
      return fail(diagnostic, "mark count mismatch");
    Subset x = o.sat.members[o.blocking];
    auto marked = [&](Elem m, Subset f) {
      return x.contains(m) && f.contains(m);
    };
    if (!marked(o.marks[0], accept_target))
      return fail(diagnostic, "target mark invalid");
    for (std::size_t i = 0; i < accept_covers.size(); ++i)
      if (!marked(o.marks[i + 1], accept_covers[i]))
        return fail(diagnostic, "cover mark invalid");
  }
  return true;
}

}  // namespace ordsep
