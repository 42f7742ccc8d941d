#include "gres/functor.hpp"

#include "gres/errors.hpp"
#include "gres/hom.hpp"
#include "gres/tensor.hpp"

namespace gres {

namespace {

class Identity final : public Functor {
 public:
  FgModule apply(const FgModule& m) const override { return m; }
  ModuleMap apply(const ModuleMap& f) const override { return f; }
  bool additive() const override { return true; }
  std::string name() const override { return "id"; }
};

class HomFrom final : public Functor {
 public:
  explicit HomFrom(FgModule m0) : m0_(std::move(m0)) {}
  FgModule apply(const FgModule& m) const override { return HomModule(m0_, m).module(); }
  ModuleMap apply(const ModuleMap& f) const override {
    return postcomposition(f, HomModule(m0_, f.domain()), HomModule(m0_, f.codomain()));
  }
  bool additive() const override { return true; }
  std::string name() const override { return "hom(" + m0_.str() + ",-)"; }

 private:
  FgModule m0_;
};

class TensorWith final : public Functor {
 public:
  explicit TensorWith(FgModule m0) : m0_(std::move(m0)) {}
  FgModule apply(const FgModule& m) const override { return TensorProduct(m, m0_).module(); }
  ModuleMap apply(const ModuleMap& f) const override {
    return tensor_map(TensorProduct(f.domain(), m0_), TensorProduct(f.codomain(), m0_), f, ModuleMap::identity(m0_));
  }
  bool additive() const override { return true; }
  std::string name() const override { return "tensor(" + m0_.str() + ")"; }

 private:
  FgModule m0_;
};

class Square final : public Functor {
 public:
  FgModule apply(const FgModule& m) const override { return TensorProduct(m, m).module(); }
  ModuleMap apply(const ModuleMap& f) const override {
    return tensor_map(TensorProduct(f.domain(), f.domain()), TensorProduct(f.codomain(), f.codomain()), f, f);
  }
  bool additive() const override { return false; }
  std::string name() const override { return "square"; }
};

class Composite final : public Functor {
 public:
  Composite(FunctorPtr outer, FunctorPtr inner) : outer_(std::move(outer)), inner_(std::move(inner)) {}
  FgModule apply(const FgModule& m) const override { return outer_->apply(inner_->apply(m)); }
  ModuleMap apply(const ModuleMap& f) const override { return outer_->apply(inner_->apply(f)); }
  bool additive() const override { return outer_->additive() && inner_->additive(); }
  std::string name() const override { return "compose(" + outer_->name() + "," + inner_->name() + ")"; }

 private:
  FunctorPtr outer_, inner_;
};

}  // namespace

FunctorPtr identity_functor() { return std::make_shared<Identity>(); }
FunctorPtr hom_functor(const FgModule& m0) { return std::make_shared<HomFrom>(m0); }
FunctorPtr tensor_functor(const FgModule& m0) { return std::make_shared<TensorWith>(m0); }
FunctorPtr square_functor() { return std::make_shared<Square>(); }

FunctorPtr compose(FunctorPtr outer, FunctorPtr inner) {
  if (!outer || !inner) throw DomainError("compose: null functor");
  return std::make_shared<Composite>(std::move(outer), std::move(inner));
}

std::optional<std::string> check_functor_laws(const Functor& t, const ModuleMap& f, const ModuleMap& g) {
  if (!(f.codomain() == g.domain())) throw DomainError("check_functor_laws: maps do not compose");
  for (const auto& m : {f.domain(), f.codomain(), g.codomain()})
    if (!(t.apply(ModuleMap::identity(m)) == ModuleMap::identity(t.apply(m))))
      return t.name() + " does not preserve the identity of " + m.str();
  if (!(t.apply(g * f) == t.apply(g) * t.apply(f))) return t.name() + " does not preserve composition";
  return std::nullopt;
}

CosimplicialModule apply_levelwise(const CosimplicialModule& x, const Functor& t) {
  LevelFunctor lf;
  lf.on_object = [&t](const FgModule& m) { return t.apply(m); };
  lf.on_map = [&t](const ModuleMap& f, const FgModule&, const FgModule&) { return t.apply(f); };
  return apply_levelwise(x, lf);
}

}  // namespace gres
