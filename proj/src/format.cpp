#include "ordsep/format.hpp"

#include <fstream>
#include <sstream>

namespace ordsep {

Elem LetterMap::image(const std::string& letter) const {
  for (const auto& [l, e] : letters)
    if (l == letter) return e;
  throw InputError("unknown letter: " + letter);
}

bool LetterMap::has(const std::string& letter) const {
  for (const auto& [l, e] : letters)
    if (l == letter) return true;
  return false;
}

const AcceptSet& ParsedFile::accept(const std::string& name) const {
  for (const auto& a : accepts)
    if (a.name == name) return a;
  throw InputError("no accepting set named " + name);
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

ParsedFile parse_presentation(const std::string& text) {
  std::vector<std::string> names;
  bool have_elements = false;
  std::optional<Elem> unit;
  std::vector<std::optional<Elem>> mul;  // row-major, nullopt = unset
  std::vector<std::optional<Elem>> omega;
  LetterMap letters;
  std::vector<AcceptSet> accepts;

  auto elem = [&](const std::string& id, std::size_t ln) -> Elem {
    for (Elem i = 0; i < names.size(); ++i)
      if (names[i] == id) return i;
    throw ParseError(ln, "unknown element: " + id);
  };

  std::istringstream in(text);
  std::string raw;
  std::size_t ln = 0;
  // Lines after `table:` are rows of the product table, one per left operand.
  std::size_t table_rows_pending = 0;
  Elem table_row = 0;

  while (std::getline(in, raw)) {
    ++ln;
    std::vector<std::string> toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;

    if (table_rows_pending > 0) {
      if (toks.size() != names.size())
        throw ParseError(ln, "table row needs " + std::to_string(names.size()) +
                                 " entries, got " + std::to_string(toks.size()));
      for (Elem j = 0; j < names.size(); ++j) {
        auto& cell = mul[table_row * names.size() + j];
        if (cell) throw ParseError(ln, "duplicate product entry");
        cell = elem(toks[j], ln);
      }
      ++table_row;
      --table_rows_pending;
      continue;
    }

    const std::string& key = toks[0];
    if (key == "elements:") {
      if (have_elements) throw ParseError(ln, "duplicate elements: line");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        for (const auto& n : names)
          if (n == toks[i])
            throw ParseError(ln, "duplicate element name: " + toks[i]);
        names.push_back(toks[i]);
      }
      if (names.empty()) throw ParseError(ln, "empty carrier");
      if (names.size() > 20)
        throw ParseError(ln, "carrier too large (max 20 elements)");
      have_elements = true;
      mul.assign(names.size() * names.size(), std::nullopt);
      omega.assign(names.size(), std::nullopt);
      continue;
    }
    if (!have_elements)
      throw ParseError(ln, "elements: line must come first");

    if (key == "unit:") {
      if (toks.size() != 2) throw ParseError(ln, "unit: needs one element");
      if (unit) throw ParseError(ln, "duplicate unit: line");
      unit = elem(toks[1], ln);
    } else if (key == "table:") {
      if (toks.size() != 1) throw ParseError(ln, "table: takes no arguments");
      table_rows_pending = names.size();
      table_row = 0;
    } else if (key == "mul:") {
      if (toks.size() != 4) throw ParseError(ln, "mul: needs x y z");
      Elem x = elem(toks[1], ln), y = elem(toks[2], ln), z = elem(toks[3], ln);
      auto& cell = mul[x * names.size() + y];
      if (cell) throw ParseError(ln, "duplicate product entry for " + toks[1] +
                                         " " + toks[2]);
      cell = z;
    } else if (key == "omega:") {
      if (toks.size() != 3) throw ParseError(ln, "omega: needs x y");
      Elem x = elem(toks[1], ln);
      if (omega[x])
        throw ParseError(ln, "duplicate omega entry for " + toks[1]);
      omega[x] = elem(toks[2], ln);
    } else if (key == "letters:") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto arrow = toks[i].find("->");
        if (arrow == std::string::npos)
          throw ParseError(ln, "letter mapping must be letter->element");
        std::string l = toks[i].substr(0, arrow);
        if (l.empty()) throw ParseError(ln, "empty letter name");
        if (letters.has(l)) throw ParseError(ln, "duplicate letter: " + l);
        letters.letters.emplace_back(l, elem(toks[i].substr(arrow + 2), ln));
      }
    } else if (key == "accept") {
      if (toks.size() < 2 || toks[1].back() != ':')
        throw ParseError(ln, "expected accept NAME: e1 e2 ...");
      std::string name = toks[1].substr(0, toks[1].size() - 1);
      if (name.empty()) throw ParseError(ln, "empty accept-set name");
      for (const auto& a : accepts)
        if (a.name == name)
          throw ParseError(ln, "duplicate accept set: " + name);
      AcceptSet set{name, {}};
      for (std::size_t i = 2; i < toks.size(); ++i) {
        Elem e = elem(toks[i], ln);
        if (set.elements.contains(e))
          throw ParseError(ln, "duplicate element in accept set: " + toks[i]);
        set.elements.add(e);
      }
      accepts.push_back(std::move(set));
    } else {
      throw ParseError(ln, "unrecognized directive: " + key);
    }
  }

  if (!have_elements) throw ParseError(ln, "missing elements: line");
  if (table_rows_pending > 0)
    throw ParseError(ln, "table: block ended after " +
                             std::to_string(table_row) + " of " +
                             std::to_string(names.size()) + " rows");
  if (!unit) throw ParseError(ln, "missing unit: line");
  for (Elem x = 0; x < names.size(); ++x) {
    if (!omega[x])
      throw ParseError(ln, "missing omega entry for " + names[x]);
    for (Elem y = 0; y < names.size(); ++y)
      if (!mul[x * names.size() + y])
        throw ParseError(ln, "missing product entry for " + names[x] + " " +
                                 names[y]);
  }

  std::vector<Elem> mul_v(mul.size()), omega_v(omega.size());
  for (std::size_t i = 0; i < mul.size(); ++i) mul_v[i] = *mul[i];
  for (std::size_t i = 0; i < omega.size(); ++i) omega_v[i] = *omega[i];
  return {Presentation(std::move(names), *unit, std::move(mul_v),
                       std::move(omega_v)),
          std::move(letters), std::move(accepts)};
}

ParsedFile load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string print_presentation(const ParsedFile& f) {
  const Presentation& p = f.pres;
  std::ostringstream out;
  out << "elements:";
  for (const auto& n : p.names()) out << " " << n;
  out << "\nunit: " << p.name(p.unit()) << "\ntable:\n";
  for (Elem x = 0; x < p.size(); ++x) {
    for (Elem y = 0; y < p.size(); ++y)
      out << (y ? " " : "") << p.name(p.product(x, y));
    out << "\n";
  }
  for (Elem x = 0; x < p.size(); ++x)
    out << "omega: " << p.name(x) << " " << p.name(p.omega(x)) << "\n";
  if (!f.letters.letters.empty()) {
    out << "letters:";
    for (const auto& [l, e] : f.letters.letters)
      out << " " << l << "->" << p.name(e);
    out << "\n";
  }
  for (const auto& a : f.accepts) {
    out << "accept " << a.name << ":";
    for (Elem e : elements_of(a.elements, p.size())) out << " " << p.name(e);
    out << "\n";
  }
  return out.str();
}

}  // namespace ordsep
