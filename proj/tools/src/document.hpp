#pragma once

#include "gres/bicomplex.hpp"
#include "gres/cobar.hpp"
#include "gres/functor.hpp"
#include "gres/injective.hpp"
#include "gres/spectral.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace gres::cli {

using Json = nlohmann::ordered_json;

/// Malformed input: bad syntax, missing fields, unknown names. Exit status 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A declared structure failed its constructor checks. Exit status 3.
class DeclarationError : public std::runtime_error {
 public:
  DeclarationError(const std::string& declaration, const std::string& what)
      : std::runtime_error("declaration '" + declaration + "': " + what), declaration_(declaration) {}
  const std::string& declaration() const { return declaration_; }

 private:
  std::string declaration_;
};

struct Settings {
  std::uint64_t max_generators = std::uint64_t(1) << 16;
  int truncation = 6;
};

/// Every declaration of a document, built and checked.
struct Document {
  std::map<std::string, BaseRing> rings;
  std::map<std::string, FgModule> modules;
  std::map<std::string, ModuleMap> maps;
  std::map<std::string, CochainComplex> complexes;
  std::map<std::string, CochainMap> chain_maps;
  std::map<std::string, CosimplicialModule> cosimplicial;
  std::map<std::string, Bicomplex> bicomplexes;
  std::map<std::string, FilteredComplex> filtered;
  std::map<std::string, BicosimplicialModule> bicosimplicial;
  std::map<std::string, InjectiveClass> classes;
  std::map<std::string, FunctorPtr> functors;
  std::map<std::string, Coalgebra> coalgebras;
  std::map<std::string, Comodule> comodules;
  std::map<std::string, std::string> comodule_owner;  // comodule -> coalgebra
  Json commands = Json::array();
};

/// Declarations are built section by section in a fixed order, each in document order.
Document parse_document(const Json& doc, const Settings& settings = {});

/// Looks up a declaration, raising ParseError for unknown names.
template <class T>
const T& lookup(const std::map<std::string, T>& table, const std::string& name, const char* kind) {
  auto it = table.find(name);
  if (it == table.end()) throw ParseError(std::string("unknown ") + kind + " '" + name + "'");
  return it->second;
}

BaseRing ring_ref(const Document& d, const Json& j);
/// A functor given by name or inline as {"hom": M}, {"tensor": M}, "identity", "square"
/// or {"compose": [outer, inner]}.
FunctorPtr functor_ref(const Document& d, const Json& j);

/// Canonical machine form of a module: ring and invariant factors.
Json module_json(const FgModule& m);
FgModule module_from_json(const Json& j);

}  // namespace gres::cli
