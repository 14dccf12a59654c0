#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ordsep/powerset.hpp"
#include "ordsep/presentation.hpp"

namespace ordsep {

/// Letter-to-element map. Alphabet order is declaration order.
struct LetterMap {
  std::vector<std::pair<std::string, Elem>> letters;

  Elem image(const std::string& letter) const;
  bool has(const std::string& letter) const;
};

/// A named accepting set.
struct AcceptSet {
  std::string name;
  Subset elements;
};

/// Contents of a presentation file: the monoid, an optional letter map and
/// any number of named accepting sets.
struct ParsedFile {
  Presentation pres;
  LetterMap letters;
  std::vector<AcceptSet> accepts;

  const AcceptSet& accept(const std::string& name) const;
};

/// Parse error with position information.
struct ParseError : InputError {
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what),
        line(line) {}
  std::size_t line;
};

ParsedFile parse_presentation(const std::string& text);
ParsedFile load_presentation(const std::string& path);

/// Prints a file that parses back to the same contents.
std::string print_presentation(const ParsedFile& f);

}  // namespace ordsep
