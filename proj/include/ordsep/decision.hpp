#pragma once

#include <string>
#include <vector>

#include "ordsep/format.hpp"
#include "ordsep/saturation.hpp"

namespace ordsep {

/// A language of ordinal words: monoid, letter map, accepting set.
struct LanguageRecognizer {
  Presentation pres;
  LetterMap letters;
  Subset accepting;
  std::string name;  // accept-set label, used in reports
};

/// Letter-singleton seeds {h(a)} for the saturation.
std::vector<Subset> letter_seeds(const LetterMap& letters);

/// Result of the separability decision. On "no", blocking indexes the first
/// closure member (in canonical order) meeting both accepting sets, and the
/// marks are one element of that member in each accepting set. On "yes" the
/// stored closure is the exhaustive non-intersection scan.
struct SeparationOutcome {
  bool separable;
  SaturationResult sat;
  int blocking = -1;
  Elem mark_left = 0, mark_right = 0;
};

SeparationOutcome separate(const LanguageRecognizer& K,
                           const LanguageRecognizer& L);

/// Covering: "no" iff some closure member meets the target language and
/// every covering language. marks[0] is in the target's accepting set,
/// marks[1+i] in Ks[i]'s. An empty Ks list is trivially "yes".
struct CoverOutcome {
  bool coverable;
  bool trivial = false;  // empty Ks
  SaturationResult sat;
  int blocking = -1;
  std::vector<Elem> marks;
};

CoverOutcome cover(const LanguageRecognizer& L,
                   const std::vector<LanguageRecognizer>& Ks);

/// Downward closure of the saturation: every nonempty subset of a closure
/// member. Sorted by bitmask for deterministic output.
std::vector<Subset> pointlikes(const Presentation& pres,
                               const LetterMap& letters);

/// Re-checks an outcome against its stored closure: provenance replays, and
/// the verdict matches a fresh intersection scan. On failure the diagnostic
/// names the first inconsistency.
bool check_certificate(const Presentation& pres, const SeparationOutcome& o,
                       Subset accept_left, Subset accept_right,
                       std::string* diagnostic = nullptr);
bool check_certificate(const Presentation& pres, const CoverOutcome& o,
                       Subset accept_target,
                       const std::vector<Subset>& accept_covers,
                       std::string* diagnostic = nullptr);

}  // namespace ordsep
