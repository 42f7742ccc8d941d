#include "commands.hpp"

#include "gres/derived.hpp"
#include "gres/errors.hpp"
#include "gres/triple.hpp"

#include <sstream>

namespace gres::cli {

namespace {

std::string str_field(const Json& c, const char* key) {
  if (!c.contains(key) || !c.at(key).is_string()) throw ParseError(std::string("command needs a string field '") + key + "'");
  return c.at(key).get<std::string>();
}

int int_field(const Json& c, const char* key, int fallback) {
  if (!c.contains(key)) return fallback;
  if (!c.at(key).is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return c.at(key).get<int>();
}

Json modules_json(const std::vector<FgModule>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(module_json(m));
  return out;
}

Json report_json(const ResolutionReport& r) {
  return Json{{"termwise_injective", r.termwise_injective}, {"g_equivalence", r.g_equivalence}, {"valid", r.valid()},
              {"failures", r.failures}};
}

const Comodule& comodule(const Document& d, const Json& c, const char* key, const std::string& coalgebra) {
  const std::string name = str_field(c, key);
  const Comodule& m = lookup(d.comodules, name, "comodule");
  if (d.comodule_owner.at(name) != coalgebra)
    throw ParseError("comodule '" + name + "' is over '" + d.comodule_owner.at(name) + "', not '" + coalgebra + "'");
  return m;
}

Json page_json(const SpectralPage& p) {
  Json entries = Json::array();
  for (const auto& [k, m] : p.entries)  // std::map order: s ascending, then t
    if (!m.is_zero()) entries.push_back(Json{{"s", k.first}, {"t", k.second}, {"module", module_json(m)}});
  Json diffs = Json::array();
  for (const auto& [k, f] : p.differentials)
    if (!f.is_zero()) diffs.push_back(Json{{"s", k.first}, {"t", k.second}});
  return Json{{"r", p.r}, {"entries", entries}, {"nonzero_differentials", diffs}};
}

Json run_resolve(const Document& d, const Json& c, const Settings& s) {
  const auto& cls = lookup(d.classes, str_field(c, "class"), "class");
  const auto& a = lookup(d.modules, str_field(c, "module"), "module");
  const int s_max = int_field(c, "s_max", s.truncation);
  const std::string method = c.contains("method") ? str_field(c, "method") : "step";
  Json out{{"class", cls.str()}, {"module", module_json(a)}, {"method", method}};
  if (method == "step") {
    Resolution r = step_resolution(cls, a, s_max);
    std::vector<FgModule> terms;
    for (int n = r.complex.lo(); n <= r.complex.hi(); ++n) terms.push_back(r.complex.term(n));
    out["terms"] = modules_json(terms);
    out["terminates"] = r.complex.bounded();
    // Dold-Kan levels grow quickly, so validation stops at level 3.
    const int check = std::min(r.complex.hi() + (r.complex.bounded() ? 1 : 0), 3);
    out["validated_through"] = check;
    out["validation"] = report_json(validate_weak_resolution(cls, r.cosimplicial(check)));
  } else if (method == "triple") {
    AugmentedCosimplicialModule y = triple_resolution(CodensityTriple(cls, s.max_generators), a, s_max);
    std::vector<FgModule> levels;
    for (int n = 0; n <= y.body.n_max(); ++n) levels.push_back(y.body.level(n));
    out["terms"] = modules_json(levels);
    out["terminates"] = false;
    out["validated_through"] = s_max;
    out["validation"] = report_json(validate_weak_resolution(cls, y));
  } else {
    throw ParseError("unknown resolution method '" + method + "'");
  }
  return out;
}

Json run_derive(const Document& d, const Json& c, const Settings& s) {
  const auto& cls = lookup(d.classes, str_field(c, "class"), "class");
  const auto& a = lookup(d.modules, str_field(c, "module"), "module");
  if (!c.contains("functor")) throw ParseError("derive needs a functor");
  FunctorPtr t = functor_ref(d, c.at("functor"));
  DerivedResult r = derived_functor(cls, *t, a, int_field(c, "s_max", s.truncation));
  return Json{{"class", cls.str()}, {"functor", t->name()}, {"module", module_json(a)}, {"values", modules_json(r.values)}};
}

Json run_pi(const Document& d, const Json& c, const Settings& s) {
  const std::string name = str_field(c, "object");
  const auto& x = lookup(d.cosimplicial, name, "cosimplicial object");
  const int s_max = int_field(c, "s_max", std::min(s.truncation, x.n_max() - 1));
  std::vector<FgModule> values;
  for (int k = 0; k <= s_max; ++k) values.push_back(cohomotopy(x, k));
  return Json{{"object", name}, {"values", modules_json(values)}};
}

Json run_classify(const Document& d, const Json& c) {
  const auto& cls = lookup(d.classes, str_field(c, "class"), "class");
  const std::string name = str_field(c, "map");
  MapClassification m = classify_map(cls, lookup(d.chain_maps, name, "chain map"));
  return Json{{"class", cls.str()},
              {"map", name},
              {"g_equivalence", m.g_equivalence},
              {"g_cofibration", m.g_cofibration},
              {"g_fibration", m.g_fibration}};
}

Json run_complete(const Document& d, const Json& c) {
  const auto& cls = lookup(d.classes, str_field(c, "class"), "class");
  const auto& a = lookup(d.modules, str_field(c, "module"), "module");
  Completion l = completion(cls, a);
  CompletenessResult k = completeness_classify(cls, a, int_field(c, "cap", 4));
  return Json{{"class", cls.str()},
              {"module", module_json(a)},
              {"completion", module_json(l.module)},
              {"alpha_iso", is_isomorphism(l.alpha)},
              {"completeness", k.str()},
              {"iterates", modules_json(k.iterates)}};
}

Json run_ss(const Document& d, const Json& c) {
  const std::string name = str_field(c, "input");
  const int r_max = int_field(c, "r_max", 3);
  SpectralSequence ss;
  if (d.bicomplexes.count(name))
    ss = ss_pages(d.bicomplexes.at(name), r_max);
  else if (d.filtered.count(name))
    ss = ss_pages(d.filtered.at(name), r_max);
  else
    ss = ss_pages(lookup(d.bicosimplicial, name, "spectral sequence input"), r_max);
  Json pages = Json::array();
  for (const auto& p : ss.pages) pages.push_back(page_json(p));
  Json abutment = Json::array();
  for (const auto& a : ss.abutment) {
    Json graded = Json::array();
    for (const auto& [sdeg, m] : a.graded)
      if (!m.is_zero()) graded.push_back(Json{{"s", sdeg}, {"module", module_json(m)}});
    abutment.push_back(Json{{"degree", a.degree},
                            {"homology", module_json(a.homology)},
                            {"graded", graded},
                            {"graded_match", a.graded_match},
                            {"consistent", a.consistent},
                            {"split", a.split}});
  }
  return Json{{"input", name}, {"pages", pages}, {"e_inf", page_json(ss.e_inf)}, {"stabilization", ss.stabilization},
              {"abutment", abutment}};
}

Json run_cotor(const Document& d, const Json& c, bool collapse) {
  const std::string cname = str_field(c, "coalgebra");
  const Coalgebra& co = lookup(d.coalgebras, cname, "coalgebra");
  const Comodule& ma = comodule(d, c, "left", cname);
  const Comodule& mb = comodule(d, c, "right", cname);
  const int s_max = int_field(c, "s_max", 4);
  Json out{{"coalgebra", cname}, {"left", str_field(c, "left")}, {"right", str_field(c, "right")}};
  if (!collapse) {
    out["values"] = modules_json(cotor(co, ma, mb, s_max));
    return out;
  }
  CollapseReport r = collapses_strongly(co, ma, mb, lookup(d.modules, str_field(c, "expected"), "module"), s_max);
  out["collapses"] = r.collapses;
  out["verified_through"] = s_max;
  out["values"] = modules_json(r.cotor);
  return out;
}

Json run_ez(const Document& d, const Json& c) {
  const std::string name = str_field(c, "object");
  EzReport r = ez_compare(lookup(d.bicosimplicial, name, "bicosimplicial object"), int_field(c, "degree", 3));
  return Json{{"object", name}, {"iso", r.iso}, {"diagonal", modules_json(r.diagonal)}, {"total", modules_json(r.total)}};
}

Json run_validate(const Document& d, const Json& c) {
  const auto& cls = lookup(d.classes, str_field(c, "class"), "class");
  const std::string name = str_field(c, "object");
  const auto& x = lookup(d.cosimplicial, name, "cosimplicial object");
  const auto& base = lookup(d.modules, str_field(c, "base"), "module");
  const auto& aug = lookup(d.maps, str_field(c, "augmentation"), "map");
  AugmentedCosimplicialModule y(base, aug, x);
  return Json{{"class", cls.str()}, {"object", name}, {"validation", report_json(validate_weak_resolution(cls, y))}};
}

Json run_one(const Document& d, const Json& c, const Settings& s) {
  if (!c.is_object()) throw ParseError("each command must be an object");
  const std::string op = str_field(c, "op");
  Json body;
  if (op == "resolve")
    body = run_resolve(d, c, s);
  else if (op == "derive")
    body = run_derive(d, c, s);
  else if (op == "pi")
    body = run_pi(d, c, s);
  else if (op == "classify")
    body = run_classify(d, c);
  else if (op == "complete")
    body = run_complete(d, c);
  else if (op == "ss")
    body = run_ss(d, c);
  else if (op == "cotor")
    body = run_cotor(d, c, false);
  else if (op == "collapse")
    body = run_cotor(d, c, true);
  else if (op == "ez")
    body = run_ez(d, c);
  else if (op == "validate")
    body = run_validate(d, c);
  else
    throw ParseError("unknown command '" + op + "'");
  Json out{{"op", op}};
  out.update(body);
  return out;
}

std::string names_line(const Json& modules) {
  std::string out;
  for (std::size_t i = 0; i < modules.size(); ++i) out += (i ? ", " : "") + modules[i].at("name").get<std::string>();
  return out;
}

void render_table(std::ostream& os, const char* label, const Json& values) {
  os << "  s  " << label << "\n";
  for (std::size_t s = 0; s < values.size(); ++s) os << "  " << s << "  " << values[s].at("name").get<std::string>() << "\n";
}

void render_validation(std::ostream& os, const Json& v) {
  os << "  valid: " << (v.at("valid").get<bool>() ? "yes" : "no") << "\n";
  for (const auto& f : v.at("failures")) os << "  failure: " << f.get<std::string>() << "\n";
}

std::string yes(const Json& b) { return b.get<bool>() ? "yes" : "no"; }

}  // namespace

Json run_commands(const Document& d, const Settings& settings) {
  Json results = Json::array();
  for (std::size_t i = 0; i < d.commands.size(); ++i) {
    const Json& c = d.commands[i];
    const std::string where = "command " + std::to_string(i + 1) + (c.is_object() && c.contains("op") ? " (" + c.at("op").dump() + ")" : "");
    try {
      results.push_back(run_one(d, c, settings));
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    } catch (const InvariantViolation& e) {
      throw DeclarationError(where, e.what());
    } catch (const gres::Error& e) {
      throw CommandError(where + ": " + e.what());
    }
  }
  return results;
}

std::string render(const Json& results) {
  std::ostringstream os;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Json& r = results[i];
    const std::string op = r.at("op").get<std::string>();
    os << "[" << i + 1 << "] " << op;
    if (op == "resolve") {
      os << " " << r.at("method").get<std::string>() << " resolution of " << r.at("module").at("name").get<std::string>()
         << " for " << r.at("class").get<std::string>() << "\n";
      os << "  terms: " << names_line(r.at("terms")) << (r.at("terminates").get<bool>() ? " (terminates)" : " ...") << "\n";
      os << "  validated through level " << r.at("validated_through").get<int>() << "\n";
      render_validation(os, r.at("validation"));
    } else if (op == "derive") {
      os << " " << r.at("functor").get<std::string>() << " of " << r.at("module").at("name").get<std::string>() << " for "
         << r.at("class").get<std::string>() << "\n";
      render_table(os, "R^s", r.at("values"));
    } else if (op == "pi") {
      os << " " << r.at("object").get<std::string>() << "\n";
      render_table(os, "pi^s", r.at("values"));
    } else if (op == "classify") {
      os << " " << r.at("map").get<std::string>() << " for " << r.at("class").get<std::string>() << "\n";
      os << "  equivalence: " << yes(r.at("g_equivalence")) << "\n  cofibration: " << yes(r.at("g_cofibration"))
         << "\n  fibration: " << yes(r.at("g_fibration")) << "\n";
    } else if (op == "complete") {
      os << " " << r.at("module").at("name").get<std::string>() << " for " << r.at("class").get<std::string>() << "\n";
      os << "  completion: " << r.at("completion").at("name").get<std::string>() << "\n";
      os << "  class: " << r.at("completeness").get<std::string>() << "\n";
      os << "  iterates: " << names_line(r.at("iterates")) << "\n";
    } else if (op == "ss") {
      os << " " << r.at("input").get<std::string>() << "\n";
      auto page = [&](const Json& p, const std::string& label) {
        os << "  " << label << ":";
        if (p.at("entries").empty()) os << " 0";
        for (const auto& e : p.at("entries"))
          os << " (" << e.at("s").get<int>() << "," << e.at("t").get<int>() << ")=" << e.at("module").at("name").get<std::string>();
        os << "\n";
      };
      for (const auto& p : r.at("pages")) page(p, "E_" + std::to_string(p.at("r").get<int>()));
      page(r.at("e_inf"), "E_inf");
      os << "  stable from page " << r.at("stabilization").get<int>() << "\n";
      for (const auto& a : r.at("abutment")) {
        os << "  H(t-s=" << a.at("degree").get<int>() << ") = " << a.at("homology").at("name").get<std::string>()
           << "  graded match: " << yes(a.at("graded_match")) << "  split: " << yes(a.at("split")) << "\n";
      }
    } else if (op == "cotor" || op == "collapse") {
      os << " over " << r.at("coalgebra").get<std::string>() << " with " << r.at("left").get<std::string>() << ", "
         << r.at("right").get<std::string>() << "\n";
      render_table(os, "Cotor_s", r.at("values"));
      if (op == "collapse")
        os << "  collapses strongly: " << yes(r.at("collapses")) << " (verified for s <= "
           << r.at("verified_through").get<int>() << " only)\n";
    } else if (op == "ez") {
      os << " " << r.at("object").get<std::string>() << "\n";
      os << "  s  diagonal  total\n";
      for (std::size_t s = 0; s < r.at("diagonal").size(); ++s)
        os << "  " << s << "  " << r.at("diagonal")[s].at("name").get<std::string>() << "  "
           << r.at("total")[s].at("name").get<std::string>() << "\n";
      os << "  iso: " << yes(r.at("iso")) << "\n";
    } else if (op == "validate") {
      os << " " << r.at("object").get<std::string>() << " for " << r.at("class").get<std::string>() << "\n";
      render_validation(os, r.at("validation"));
    }
  }
  return os.str();
}

}  // namespace gres::cli
