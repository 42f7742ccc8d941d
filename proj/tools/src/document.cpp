#include "document.hpp"

#include "gres/errors.hpp"
#include "gres/triple.hpp"

#include <algorithm>
#include <functional>

namespace gres::cli {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

int integer_or(const Json& j, const char* key, int fallback, const std::string& where) {
  return j.contains(key) ? integer(j.at(key), where + "." + key) : fallback;
}

Integer big(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError(where + ": expected an integer");
}

Matrix matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": matrix must be an array of rows");
  if (j.size() != rows && !(rows == 0 && j.empty()))
    throw ParseError(where + ": matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j.at(r);
    if (!row.is_array() || row.size() != cols)
      throw ParseError(where + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = big(row.at(c), where);
  }
  return m;
}

Orientation orientation(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) return Orientation::cosimplicial;
  const std::string s = text(j.at(key), where + "." + key);
  if (s == "cosimplicial") return Orientation::cosimplicial;
  if (s == "simplicial") return Orientation::simplicial;
  throw ParseError(where + ": unknown orientation '" + s + "'");
}

template <class T, class F>
std::vector<T> names(const Json& j, const std::string& where, F&& resolve) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of names");
  std::vector<T> out;
  for (const auto& e : j) out.push_back(resolve(text(e, where)));
  return out;
}

template <class T, class F>
std::vector<std::vector<T>> name_grid(const Json& j, const std::string& where, F&& resolve) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of arrays");
  std::vector<std::vector<T>> out;
  for (const auto& row : j) out.push_back(names<T>(row, where, resolve));
  return out;
}

/// Runs one declaration, turning library constructor failures into DeclarationError.
template <class F>
void declare(const std::string& name, F&& build) {
  try {
    build();
  } catch (const ParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("declaration '" + name + "': " + e.what());
  } catch (const gres::Error& e) {
    throw DeclarationError(name, e.what());
  }
}

void for_each(const Json& doc, const char* section, const std::function<void(const std::string&, const Json&)>& f) {
  if (!doc.contains(section)) return;
  const Json& s = doc.at(section);
  if (!s.is_object()) throw ParseError(std::string("section '") + section + "' must be an object");
  for (const auto& [name, j] : s.items()) declare(name, [&] { f(name, j); });
}

void parse_modules(Document& d, const Json& doc) {
  for_each(doc, "modules", [&](const std::string& name, const Json& j) {
    const BaseRing ring = ring_ref(d, field(j, "ring", name));
    std::vector<Integer> orders;
    if (j.contains("orders"))
      for (const auto& o : j.at("orders")) orders.push_back(big(o, name + ".orders"));
    const int free = integer_or(j, "free", 0, name);
    for (int i = 0; i < free; ++i) orders.push_back(ring.free_order());
    d.modules.emplace(name, FgModule(ring, std::move(orders)));
  });
}

void parse_maps(Document& d, const Json& doc) {
  for_each(doc, "maps", [&](const std::string& name, const Json& j) {
    const FgModule& src = lookup(d.modules, text(field(j, "source", name), name), "module");
    const FgModule& dst = lookup(d.modules, text(field(j, "target", name), name), "module");
    if (j.contains("identity") && j.at("identity") == true) {
      d.maps.emplace(name, ModuleMap(src, dst, Matrix::identity(src.ngens())));
      return;
    }
    Matrix m = matrix(field(j, "matrix", name), dst.ngens(), src.ngens(), name);
    const Integer den = j.contains("denominator") ? big(j.at("denominator"), name) : Integer(1);
    d.maps.emplace(name, ModuleMap(src, dst, std::move(m), den));
  });
}

void parse_complexes(Document& d, const Json& doc) {
  for_each(doc, "complexes", [&](const std::string& name, const Json& j) {
    auto terms = names<FgModule>(field(j, "terms", name), name, [&](const std::string& n) { return lookup(d.modules, n, "module"); });
    auto diffs = names<ModuleMap>(j.contains("differentials") ? j.at("differentials") : Json::array(), name,
                                  [&](const std::string& n) { return lookup(d.maps, n, "map"); });
    const BaseRing ring = j.contains("ring") ? ring_ref(d, j.at("ring"))
                          : terms.empty()    ? throw ParseError(name + ": an empty complex needs a ring")
                                             : terms.front().ring();
    const bool open = j.contains("open_above") && j.at("open_above") == true;
    d.complexes.emplace(name, CochainComplex(ring, integer_or(j, "lo", 0, name), std::move(terms), std::move(diffs), !open));
  });
  for_each(doc, "chain_maps", [&](const std::string& name, const Json& j) {
    const auto& src = lookup(d.complexes, text(field(j, "source", name), name), "complex");
    const auto& dst = lookup(d.complexes, text(field(j, "target", name), name), "complex");
    auto comps = names<ModuleMap>(field(j, "components", name), name, [&](const std::string& n) { return lookup(d.maps, n, "map"); });
    d.chain_maps.emplace(name, CochainMap(src, dst, std::move(comps)));
  });
}

void parse_classes(Document& d, const Json& doc) {
  for_each(doc, "classes", [&](const std::string& name, const Json& j) {
    if (j.contains("cogenerators")) {
      auto mods = names<FgModule>(j.at("cogenerators"), name, [&](const std::string& n) { return lookup(d.modules, n, "module"); });
      d.classes.emplace(name, InjectiveClass::cogenerators(std::move(mods)));
      return;
    }
    const BaseRing ring = ring_ref(d, field(j, "ring", name));
    const std::string mode = text(field(j, "mode", name), name);
    if (mode == "all_objects")
      d.classes.emplace(name, InjectiveClass::all_objects(ring));
    else if (mode == "field_absolute")
      d.classes.emplace(name, InjectiveClass::field_absolute(ring));
    else
      throw ParseError(name + ": unknown class mode '" + mode + "'");
  });
  for_each(doc, "functors", [&](const std::string& name, const Json& j) { d.functors.emplace(name, functor_ref(d, j)); });
}

void parse_coalgebras(Document& d, const Json& doc) {
  for_each(doc, "coalgebras", [&](const std::string& name, const Json& j) {
    const std::string kind = j.contains("kind") ? text(j.at("kind"), name) : "explicit";
    if (kind == "tensor") {
      auto fs = names<Coalgebra>(field(j, "factors", name), name, [&](const std::string& n) { return lookup(d.coalgebras, n, "coalgebra"); });
      if (fs.size() != 2) throw ParseError(name + ": a tensor coalgebra needs two factors");
      d.coalgebras.emplace(name, Coalgebra::tensor(fs[0], fs[1]));
      return;
    }
    const BaseRing ring = ring_ref(d, field(j, "ring", name));
    if (kind == "trivial") {
      d.coalgebras.emplace(name, Coalgebra::trivial(ring));
    } else if (kind == "exterior") {
      d.coalgebras.emplace(name, Coalgebra::exterior(ring));
    } else if (kind == "group_like") {
      d.coalgebras.emplace(name, Coalgebra::group_like(ring, static_cast<std::size_t>(integer(field(j, "points", name), name))));
    } else if (kind == "explicit") {
      const Json& delta = field(j, "comultiplication", name);
      if (!delta.is_array() || delta.empty() || !delta.at(0).is_array()) throw ParseError(name + ": bad comultiplication");
      const std::size_t dim = delta.at(0).size();
      const FgModule c = FgModule::free(ring, dim);
      d.coalgebras.emplace(name, Coalgebra(ring, ModuleMap(c, FgModule::free(ring, dim * dim), matrix(delta, dim * dim, dim, name)),
                                           ModuleMap(c, FgModule::free(ring, 1), matrix(field(j, "counit", name), 1, dim, name))));
    } else {
      throw ParseError(name + ": unknown coalgebra kind '" + kind + "'");
    }
  });
  for_each(doc, "comodules", [&](const std::string& name, const Json& j) {
    const std::string owner = text(field(j, "coalgebra", name), name);
    const Coalgebra& c = lookup(d.coalgebras, owner, "coalgebra");
    const std::string side_name = text(field(j, "side", name), name);
    if (side_name != "right" && side_name != "left") throw ParseError(name + ": side must be 'right' or 'left'");
    const Side side = side_name == "right" ? Side::right : Side::left;
    const std::string kind = j.contains("kind") ? text(j.at("kind"), name) : "explicit";
    if (kind == "group_like") {
      d.comodules.emplace(name, Comodule::at_group_like(c, side, static_cast<std::size_t>(integer(field(j, "point", name), name))));
    } else if (kind == "regular") {
      d.comodules.emplace(name, Comodule::regular(c, side));
    } else if (kind == "trivial") {
      d.comodules.emplace(name, Comodule::trivial(c, side, static_cast<std::size_t>(integer(field(j, "dim", name), name))));
    } else if (kind == "explicit") {
      const std::size_t dim = static_cast<std::size_t>(integer(field(j, "dim", name), name));
      Matrix rho = matrix(field(j, "coaction", name), dim * c.dim(), dim, name);
      d.comodules.emplace(name, Comodule(c, side, ModuleMap(FgModule::free(c.ring(), dim), FgModule::free(c.ring(), dim * c.dim()), std::move(rho))));
    } else {
      throw ParseError(name + ": unknown comodule kind '" + kind + "'");
    }
    d.comodule_owner.emplace(name, owner);
  });
}

void parse_cosimplicial(Document& d, const Json& doc, const Settings& settings) {
  for_each(doc, "cosimplicial", [&](const std::string& name, const Json& j) {
    if (j.contains("denormalize")) {
      const auto& c = lookup(d.complexes, text(j.at("denormalize"), name), "complex");
      d.cosimplicial.emplace(name, denormalize(c, integer(field(j, "n_max", name), name), orientation(j, "orientation", name)));
    } else if (j.contains("constant")) {
      const auto& m = lookup(d.modules, text(j.at("constant"), name), "module");
      d.cosimplicial.emplace(name, CosimplicialModule::constant(m, integer(field(j, "n_max", name), name), orientation(j, "orientation", name)));
    } else if (j.contains("apply")) {
      FunctorPtr t = functor_ref(d, j.at("apply"));
      d.cosimplicial.emplace(name, apply_levelwise(lookup(d.cosimplicial, text(field(j, "to", name), name), "cosimplicial object"), *t));
    } else if (j.contains("resolution")) {
      const auto& cls = lookup(d.classes, text(j.at("resolution"), name), "class");
      const auto& a = lookup(d.modules, text(field(j, "module", name), name), "module");
      const int n_max = integer_or(j, "n_max", settings.truncation, name);
      const std::string method = j.contains("method") ? text(j.at("method"), name) : "step";
      if (method == "step")
        d.cosimplicial.emplace(name, step_resolution(cls, a, n_max).cosimplicial(n_max).body);
      else if (method == "triple")
        d.cosimplicial.emplace(name, triple_resolution(CodensityTriple(cls, settings.max_generators), a, n_max).body);
      else
        throw ParseError(name + ": unknown resolution method '" + method + "'");
    } else if (j.contains("cobar")) {
      const Json& c = j.at("cobar");
      d.cosimplicial.emplace(name, cobar_complex(lookup(d.coalgebras, text(field(c, "coalgebra", name), name), "coalgebra"),
                                                 lookup(d.comodules, text(field(c, "left", name), name), "comodule"),
                                                 lookup(d.comodules, text(field(c, "right", name), name), "comodule"),
                                                 integer(field(j, "n_max", name), name)));
    } else {
      auto resolve_module = [&](const std::string& n) { return lookup(d.modules, n, "module"); };
      auto resolve_map = [&](const std::string& n) { return lookup(d.maps, n, "map"); };
      auto levels = names<FgModule>(field(j, "levels", name), name, resolve_module);
      if (levels.empty()) throw ParseError(name + ": a cosimplicial object needs at least one level");
      const BaseRing ring = levels.front().ring();
      d.cosimplicial.emplace(name, CosimplicialModule(orientation(j, "orientation", name), ring, std::move(levels),
                                                      name_grid<ModuleMap>(field(j, "cofaces", name), name, resolve_map),
                                                      name_grid<ModuleMap>(field(j, "codegeneracies", name), name, resolve_map)));
    }
  });
}

void parse_bicomplexes(Document& d, const Json& doc) {
  for_each(doc, "bicomplexes", [&](const std::string& name, const Json& j) {
    auto resolve_module = [&](const std::string& n) { return lookup(d.modules, n, "module"); };
    auto resolve_map = [&](const std::string& n) { return lookup(d.maps, n, "map"); };
    auto entries = name_grid<FgModule>(field(j, "entries", name), name, resolve_module);
    if (entries.empty() || entries.front().empty()) throw ParseError(name + ": a bicomplex needs at least one entry");
    const BaseRing ring = entries.front().front().ring();
    d.bicomplexes.emplace(name, Bicomplex(ring, integer_or(j, "p_lo", 0, name), integer_or(j, "q_lo", 0, name), std::move(entries),
                                          name_grid<ModuleMap>(field(j, "horizontal", name), name, resolve_map),
                                          name_grid<ModuleMap>(field(j, "vertical", name), name, resolve_map)));
  });
  for_each(doc, "filtered", [&](const std::string& name, const Json& j) {
    const auto& c = lookup(d.complexes, text(field(j, "complex", name), name), "complex");
    std::vector<std::vector<int>> filtration;
    for (const auto& row : field(j, "filtration", name)) {
      filtration.emplace_back();
      for (const auto& p : row) filtration.back().push_back(integer(p, name + ".filtration"));
    }
    if (filtration.size() != c.length()) throw DeclarationError(name, "filtration needs one row per term");
    for (std::size_t k = 0; k < filtration.size(); ++k)
      if (filtration[k].size() != c.term(c.lo() + static_cast<int>(k)).ngens())
        throw DeclarationError(name, "filtration row " + std::to_string(k) + " needs one entry per generator");
    d.filtered.emplace(name, FilteredComplex{c, std::move(filtration)});
  });
  for_each(doc, "bicosimplicial", [&](const std::string& name, const Json& j) {
    if (j.contains("denormalize")) {
      const auto& b = lookup(d.bicomplexes, text(j.at("denormalize"), name), "bicomplex");
      d.bicosimplicial.emplace(name, denormalize(b, integer(field(j, "m_max", name), name), integer(field(j, "n_max", name), name),
                                                 orientation(j, "horizontal", name), orientation(j, "vertical", name)));
    } else if (j.contains("external_tensor")) {
      auto xs = names<CosimplicialModule>(j.at("external_tensor"), name,
                                          [&](const std::string& n) { return lookup(d.cosimplicial, n, "cosimplicial object"); });
      if (xs.size() != 2) throw ParseError(name + ": external_tensor needs two objects");
      d.bicosimplicial.emplace(name, external_tensor(xs[0], xs[1]));
    } else if (j.contains("vertically_constant")) {
      const auto& x = lookup(d.cosimplicial, text(j.at("vertically_constant"), name), "cosimplicial object");
      d.bicosimplicial.emplace(name, vertically_constant(x, integer(field(j, "n_max", name), name), orientation(j, "vertical", name)));
    } else {
      throw ParseError(name + ": unknown bicosimplicial construction");
    }
  });
}

}  // namespace

BaseRing ring_ref(const Document& d, const Json& j) {
  const std::string s = text(j, "ring");
  if (auto it = d.rings.find(s); it != d.rings.end()) return it->second;
  try {
    return BaseRing::parse(s);
  } catch (const gres::Error& e) {
    throw ParseError(e.what());
  }
}

FunctorPtr functor_ref(const Document& d, const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "identity") return identity_functor();
    if (s == "square") return square_functor();
    return lookup(d.functors, s, "functor");
  }
  if (j.is_object() && j.size() == 1) {
    const auto& [key, value] = *j.items().begin();
    if (key == "hom") return hom_functor(lookup(d.modules, text(value, "hom"), "module"));
    if (key == "tensor") return tensor_functor(lookup(d.modules, text(value, "tensor"), "module"));
    if (key == "compose" && value.is_array() && value.size() == 2)
      return compose(functor_ref(d, value.at(0)), functor_ref(d, value.at(1)));
  }
  throw ParseError("unrecognized functor " + j.dump());
}

Json module_json(const FgModule& m) {
  Json factors = Json::array();
  for (const auto& o : m.canonical_form()) {
    const Integer v = m.ring().is_field() ? m.ring().free_order() : o;
    factors.push_back(v.convert_to<long long>());
  }
  return Json{{"name", m.str()}, {"ring", m.ring().name()}, {"orders", factors}};
}

FgModule module_from_json(const Json& j) {
  BaseRing ring = BaseRing::parse(j.at("ring").get<std::string>());
  std::vector<Integer> orders;
  for (const auto& o : j.at("orders")) orders.emplace_back(o.get<long long>());
  return FgModule(ring, std::move(orders));
}

Document parse_document(const Json& doc, const Settings& settings) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  if (!doc.contains("format") || doc.at("format") != 1) throw ParseError("document must declare \"format\": 1");
  static const char* known[] = {"format",      "rings",        "modules",    "maps",      "complexes",
                                "chain_maps",  "classes",      "functors",   "coalgebras", "comodules",
                                "cosimplicial", "bicomplexes", "filtered",   "bicosimplicial", "commands"};
  for (const auto& [key, value] : doc.items())
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) throw ParseError("unknown section '" + key + "'");
  Document d;
  for_each(doc, "rings", [&](const std::string& name, const Json& j) { d.rings.emplace(name, ring_ref(d, j)); });
  parse_modules(d, doc);
  parse_maps(d, doc);
  parse_complexes(d, doc);
  parse_classes(d, doc);
  parse_coalgebras(d, doc);
  parse_cosimplicial(d, doc, settings);
  parse_bicomplexes(d, doc);
  if (doc.contains("commands")) {
    if (!doc.at("commands").is_array()) throw ParseError("commands must be an array");
    d.commands = doc.at("commands");
  }
  return d;
}

}  // namespace gres::cli
