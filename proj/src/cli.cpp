#include "ordsep/cli.hpp"

#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordsep/decision.hpp"
#include "ordsep/witness.hpp"

namespace ordsep {

namespace {

using nlohmann::json;

json subset_json(const Presentation& p, Subset s) {
  json arr = json::array();
  for (Elem e : elements_of(s, p.size())) arr.push_back(p.name(e));
  return arr;
}

ParsedFile load_valid(const std::string& path, bool check_axioms = true) {
  ParsedFile f = load_presentation(path);
  if (check_axioms) {
    ValidationReport r = f.pres.validate();
    if (!r.ok())
      throw InputError(path + ": presentation violates axiom '" +
                       r.violations.front().axiom + "'");
  }
  return f;
}

LanguageRecognizer make_recognizer(const ParsedFile& f,
                                   const std::string& name,
                                   const std::string& flag) {
  const AcceptSet* a = nullptr;
  if (!name.empty()) {
    a = &f.accept(name);
  } else if (f.accepts.size() == 1) {
    a = &f.accepts.front();
  } else {
    throw InputError("file declares " + std::to_string(f.accepts.size()) +
                     " accept sets; choose one with " + flag);
  }
  return {f.pres, f.letters, a->elements, a->name};
}

const char* deriv_rule_name(Derivation::Rule r) {
  switch (r) {
    case Derivation::Rule::Refl: return "Refl";
    case Derivation::Rule::StructEq: return "StructEq";
    case Derivation::Rule::ConcatCong: return "ConcatCong";
    case Derivation::Rule::OmegaSeqCong: return "OmegaSeqCong";
    case Derivation::Rule::Pump: return "Pump";
    case Derivation::Rule::Trans: return "Trans";
  }
  return "?";
}

json deriv_json(const Deriv& d) {
  json j;
  j["rule"] = deriv_rule_name(d->rule);
  j["lhs"] = print_word_expr(d->lhs);
  j["rhs"] = print_word_expr(d->rhs);
  j["k"] = d->k;
  if (d->rule == Derivation::Rule::Pump) j["n"] = d->pump_n;
  if (d->rule == Derivation::Rule::OmegaSeqCong) {
    auto blocks = [](const std::vector<Expr>& es) {
      json arr = json::array();
      for (const Expr& e : es) arr.push_back(print_word_expr(e));
      return arr;
    };
    j["left_prefix"] = blocks(d->left_prefix);
    j["left_period"] = blocks(d->left_period);
    j["right_prefix"] = blocks(d->right_prefix);
    j["right_period"] = blocks(d->right_period);
  }
  if (!d->premises.empty()) {
    json prem = json::array();
    for (const Deriv& p : d->premises) prem.push_back(deriv_json(p));
    j["premises"] = std::move(prem);
  }
  return j;
}

// The human format is rendered from the structured record.
void render_human(const json& j, std::ostream& out, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_object() || (it->is_array() && !it->empty() &&
                              (it->front().is_object() || it->front().is_array()))) {
        out << pad << it.key() << ":\n";
        render_human(*it, out, indent + 2);
      } else if (it->is_array()) {
        out << pad << it.key() << ":";
        for (const auto& v : *it)
          out << " " << (v.is_string() ? v.get<std::string>() : v.dump());
        out << "\n";
      } else {
        out << pad << it.key() << ": "
            << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      out << pad << "-\n";
      render_human(v, out, indent + 2);
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

json sat_json(const Presentation& p, const SaturationResult& sat) {
  json arr = json::array();
  for (std::size_t i = 0; i < sat.members.size(); ++i) {
    json m;
    m["index"] = i;
    m["set"] = subset_json(p, sat.members[i]);
    m["rule"] = rule_name(sat.provenance[i].rule);
    if (sat.provenance[i].left >= 0) m["left"] = sat.provenance[i].left;
    if (sat.provenance[i].right >= 0) m["right"] = sat.provenance[i].right;
    arr.push_back(std::move(m));
  }
  return arr;
}

struct Cli {
  std::ostream& out;

  int emit(const json& j, bool as_json) {
    if (as_json)
      out << j.dump(2) << "\n";
    else
      render_human(j, out, 0);
    return 0;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"decision procedures for FO-separability of ordinal-word "
               "languages given by finite ordinal monoids"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "structured output instead of human text");

  std::string file, left_file, right_file, target_file;
  std::vector<std::string> cover_files;
  std::string left_accept, right_accept, target_accept;
  std::string expr_text, letter, ordinal_text;
  unsigned k = 1;
  std::size_t cap = 12;

  auto* c_validate = app.add_subcommand("validate", "check the monoid axioms");
  c_validate->add_option("file", file)->required();

  auto* c_greens = app.add_subcommand("greens", "divisibility class structure");
  c_greens->add_option("file", file)->required();

  auto* c_aperiodic =
      app.add_subcommand("aperiodic", "test x^pi = x^{pi+1} for all x");
  c_aperiodic->add_option("file", file)->required();

  auto* c_saturate = app.add_subcommand(
      "saturate", "closure of the letter singletons with provenance");
  c_saturate->add_option("file", file)->required();

  auto* c_separate =
      app.add_subcommand("separate", "decide FO-separability of two languages");
  c_separate->add_option("left", left_file)->required();
  c_separate->add_option("right", right_file)->required();
  c_separate->add_option("--left-accept", left_accept);
  c_separate->add_option("--right-accept", right_accept);

  auto* c_cover = app.add_subcommand(
      "cover", "decide FO-coverability of a language by finitely many others");
  c_cover->add_option("target", target_file)->required();
  c_cover->add_option("covers", cover_files);
  c_cover->add_option("--target-accept", target_accept);

  auto* c_pointlikes =
      app.add_subcommand("pointlikes", "FO-pointlike subsets of the monoid");
  c_pointlikes->add_option("file", file)->required();

  auto* c_witness = app.add_subcommand(
      "witness", "indistinguishable word pair for an inseparable instance");
  c_witness->add_option("left", left_file)->required();
  c_witness->add_option("right", right_file)->required();
  c_witness->add_option("--left-accept", left_accept);
  c_witness->add_option("--right-accept", right_accept);
  c_witness->add_option("--k", k, "quantifier depth")->required();

  auto* c_eval =
      app.add_subcommand("eval", "evaluate a word expression in the monoid");
  c_eval->add_option("file", file)->required();
  c_eval->add_option("expr", expr_text)->required();

  auto* c_approx = app.add_subcommand(
      "approx", "one-letter upper bound in the power monoid of subsets");
  c_approx->add_option("file", file)->required();
  c_approx->add_option("--letter", letter)->required();
  c_approx->add_option("--ordinal", ordinal_text)->required();
  c_approx->add_option("--cap", cap, "max base size for the power view");

  // Let the shared --json flag apply no matter where it appears.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Cli cli{out};
  try {
    if (*c_validate) {
      ParsedFile f = load_valid(file, false);
      ValidationReport r = f.pres.validate();
      json j;
      j["command"] = "validate";
      j["ok"] = r.ok();
      json vs = json::array();
      for (const auto& v : r.violations)
        vs.push_back({{"axiom", v.axiom},
                      {"witness", v.witness},
                      {"detail", v.detail}});
      j["violations"] = std::move(vs);
      return cli.emit(j, as_json);
    }

    if (*c_greens) {
      ParsedFile f = load_valid(file);
      GreenSummary g = greens(f.pres);
      json j;
      j["command"] = "greens";
      json els = json::array();
      for (Elem x = 0; x < f.pres.size(); ++x)
        els.push_back({{"element", f.pres.name(x)},
                       {"j", g.j_class[x]},
                       {"l", g.l_class[x]},
                       {"r", g.r_class[x]},
                       {"h", g.h_class[x]}});
      j["elements"] = std::move(els);
      json cls = json::array();
      for (const auto& c : g.j_classes) {
        json names = json::array();
        for (Elem x : c.members) names.push_back(f.pres.name(x));
        cls.push_back({{"members", std::move(names)},
                       {"regular", c.regular},
                       {"omega_stable", c.omega_stable},
                       {"h_trivial", c.h_trivial}});
      }
      j["j_classes"] = std::move(cls);
      return cli.emit(j, as_json);
    }

    if (*c_aperiodic) {
      ParsedFile f = load_valid(file);
      AperiodicityResult r = is_aperiodic(f.pres);
      json j;
      j["command"] = "aperiodic";
      j["aperiodic"] = r.aperiodic;
      if (r.counterexample) j["counterexample"] = f.pres.name(*r.counterexample);
      return cli.emit(j, as_json);
    }

    if (*c_saturate) {
      ParsedFile f = load_valid(file);
      SaturationResult sat = saturate(f.pres, letter_seeds(f.letters));
      json j;
      j["command"] = "saturate";
      j["members"] = sat_json(f.pres, sat);
      return cli.emit(j, as_json);
    }

    if (*c_separate) {
      ParsedFile lf = load_valid(left_file), rf = load_valid(right_file);
      LanguageRecognizer K = make_recognizer(lf, left_accept, "--left-accept");
      LanguageRecognizer L =
          make_recognizer(rf, right_accept, "--right-accept");
      SeparationOutcome o = separate(K, L);
      std::string diag;
      if (!check_certificate(K.pres, o, K.accepting, L.accepting, &diag))
        throw InternalError("separation certificate failed to re-check: " +
                            diag);
      json j;
      j["command"] = "separate";
      j["left"] = K.name;
      j["right"] = L.name;
      j["verdict"] = o.separable ? "yes" : "no";
      j["closure_size"] = o.sat.members.size();
      if (!o.separable) {
        j["blocking"] = subset_json(K.pres, o.sat.members[o.blocking]);
        j["mark_left"] = K.pres.name(o.mark_left);
        j["mark_right"] = K.pres.name(o.mark_right);
      }
      j["certificate_ok"] = true;
      return cli.emit(j, as_json);
    }

    if (*c_cover) {
      ParsedFile tf = load_valid(target_file);
      LanguageRecognizer L =
          make_recognizer(tf, target_accept, "--target-accept");
      std::vector<ParsedFile> cfs;
      std::vector<LanguageRecognizer> Ks;
      for (const std::string& p : cover_files) {
        cfs.push_back(load_valid(p));
        Ks.push_back(make_recognizer(cfs.back(), "", "(one accept set per cover file)"));
      }
      CoverOutcome o = cover(L, Ks);
      std::vector<Subset> fks;
      for (const auto& kr : Ks) fks.push_back(kr.accepting);
      std::string diag;
      if (!check_certificate(L.pres, o, L.accepting, fks, &diag))
        throw InternalError("covering certificate failed to re-check: " +
                            diag);
      json j;
      j["command"] = "cover";
      j["target"] = L.name;
      j["verdict"] = o.coverable ? "yes" : "no";
      if (o.trivial) j["trivial"] = true;
      j["closure_size"] = o.sat.members.size();
      if (!o.coverable) {
        j["blocking"] = subset_json(L.pres, o.sat.members[o.blocking]);
        json marks = json::array();
        for (Elem m : o.marks) marks.push_back(L.pres.name(m));
        j["marks"] = std::move(marks);
      }
      j["certificate_ok"] = true;
      return cli.emit(j, as_json);
    }

    if (*c_pointlikes) {
      ParsedFile f = load_valid(file);
      std::vector<Subset> pl = pointlikes(f.pres, f.letters);
      json j;
      j["command"] = "pointlikes";
      j["count"] = pl.size();
      json sets = json::array();
      for (Subset s : pl) sets.push_back(subset_json(f.pres, s));
      j["sets"] = std::move(sets);
      return cli.emit(j, as_json);
    }

    if (*c_witness) {
      ParsedFile lf = load_valid(left_file), rf = load_valid(right_file);
      LanguageRecognizer K = make_recognizer(lf, left_accept, "--left-accept");
      LanguageRecognizer L =
          make_recognizer(rf, right_accept, "--right-accept");
      WitnessPair w = witness_pair(K, L, k);
      std::string diag;
      if (!check_derivation(w.deriv, &diag))
        throw InternalError("emitted derivation failed its own check: " +
                            diag);
      json j;
      j["command"] = "witness";
      j["k"] = k;
      j["left_word"] = print_word_expr(w.left);
      j["right_word"] = print_word_expr(w.right);
      j["left_value"] = K.pres.name(eval_expr(w.left, K.pres, K.letters));
      j["right_value"] = K.pres.name(eval_expr(w.right, K.pres, K.letters));
      j["derivation_ok"] = true;
      j["derivation"] = deriv_json(w.deriv);
      return cli.emit(j, as_json);
    }

    if (*c_eval) {
      ParsedFile f = load_valid(file);
      Expr e = parse_word_expr(expr_text);
      Elem v = eval_expr(e, f.pres, f.letters);
      json j;
      j["command"] = "eval";
      j["expr"] = print_word_expr(e);
      j["value"] = f.pres.name(v);
      json acc = json::object();
      for (const auto& a : f.accepts) acc[a.name] = a.elements.contains(v);
      j["accepts"] = std::move(acc);
      return cli.emit(j, as_json);
    }

    if (*c_approx) {
      ParsedFile f = load_valid(file);
      if (f.pres.size() > cap)
        throw InputError("base monoid larger than the power-view cap");
      CnfOrdinal o = parse_ordinal(ordinal_text);
      PowerMonoid pm =
          power_presentation_reachable(f.pres, letter_seeds(f.letters));
      MergeMonoidView view = pm.view();
      Elem a = pm.index_of(Subset::single(f.letters.image(letter)));
      Elem r = approximate_one_letter(view, a, o);
      json j;
      j["command"] = "approx";
      j["letter"] = letter;
      j["ordinal"] = print_ordinal(o);
      j["result"] = subset_json(f.pres, pm.carrier[r]);
      return cli.emit(j, as_json);
    }

    throw InternalError("no subcommand dispatched");
  } catch (const InternalError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ordsep
