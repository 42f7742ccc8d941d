#pragma once

#include "gres/cosimplicial.hpp"
#include "gres/module.hpp"

#include <memory>
#include <optional>
#include <string>

namespace gres {

/// An endofunctor of finitely generated modules over one ring.
class Functor {
 public:
  virtual ~Functor() = default;
  virtual FgModule apply(const FgModule& m) const = 0;
  virtual ModuleMap apply(const ModuleMap& f) const = 0;
  virtual bool additive() const = 0;
  virtual std::string name() const = 0;
};

using FunctorPtr = std::shared_ptr<const Functor>;

FunctorPtr identity_functor();
/// Hom(M0, -).
FunctorPtr hom_functor(const FgModule& m0);
/// - (x) M0.
FunctorPtr tensor_functor(const FgModule& m0);
/// M (x) M, which is not additive.
FunctorPtr square_functor();
/// outer after inner.
FunctorPtr compose(FunctorPtr outer, FunctorPtr inner);

/// T(id) = id and T(g f) = T(g) T(f); returns the first failure.
std::optional<std::string> check_functor_laws(const Functor& t, const ModuleMap& f, const ModuleMap& g);

/// T applied to every level, coface and codegeneracy.
CosimplicialModule apply_levelwise(const CosimplicialModule& x, const Functor& t);

}  // namespace gres
