#include "discocat/predicate.hpp"

#include "discocat/errors.hpp"
#include "discocat/frobenius.hpp"

namespace discocat {

void Relation::insert(std::size_t left, std::size_t right) {
  if (left >= rows_.size() || right >= rows_.size()) throw LookupError("relation pair outside the universe");
  rows_[left].set(right);
}

Subset relationalImage(const Relation& r, const Subset& t) {
  Subset out(r.universeSize());
  for (auto i = t.find_first(); i != Subset::npos; i = t.find_next(i)) out |= r.row(i);
  return out;
}

Subset inverseImage(const Relation& r, const Subset& t) {
  Subset out(r.universeSize());
  for (std::size_t i = 0; i < r.universeSize(); ++i) {
    if (r.row(i).intersects(t)) out.set(i);
  }
  return out;
}

SetModel::SetModel(const RelationalModel& model) : universe_(model.universe()), has_(model.size()) {
  const std::size_t n = model.size();
  for (const auto& [name, members] : model.nouns()) {
    Subset set(n);
    for (std::size_t m : members) set.set(m);
    unary_.emplace(name, std::move(set));
  }
  for (const auto& [name, pairs] : model.verbs()) {
    Relation r(n);
    for (const auto& p : pairs) {
      if (p.weight != 0.0) r.insert(p.left, p.right);
    }
    binary_.emplace(name, std::move(r));
  }
  for (const auto& p : model.ownership()) {
    if (p.weight != 0.0) has_.insert(p.left, p.right);
  }
}

const Subset& SetModel::unary(const std::string& name) const {
  const auto it = unary_.find(name);
  if (it == unary_.end()) throw LookupError("undeclared unary predicate '" + name + "'");
  return it->second;
}

const Relation& SetModel::binary(const std::string& name) const {
  const auto it = binary_.find(name);
  if (it == binary_.end()) throw LookupError("undeclared binary predicate '" + name + "'");
  return it->second;
}

Subset possSubjIntersection(const SetModel& model, const std::string& poss, const std::string& subj,
                            const std::string& verb, const std::string& obj) {
  const Subset modified = inverseImage(model.binary(verb), model.unary(obj)) & model.unary(subj);
  return model.unary(poss) & inverseImage(model.has(), modified);
}

Subset possObjIntersection(const SetModel& model, const std::string& poss, const std::string& subj,
                           const std::string& verb, const std::string& obj) {
  const Subset modified = relationalImage(model.binary(verb), model.unary(subj)) & model.unary(obj);
  return model.unary(poss) & inverseImage(model.has(), modified);
}

Subset subjRelIntersection(const Subset& head, const Relation& verb, const Subset& obj) {
  return head & inverseImage(verb, obj);
}

Subset objRelIntersection(const Subset& head, const Relation& verb, const Subset& subj) {
  return head & relationalImage(verb, subj);
}

Subset possSubjViaHas(const SetModel& model, const std::string& poss, const std::string& subj,
                      const std::string& verb, const std::string& obj) {
  const Subset x = subjRelIntersection(model.unary(subj), model.binary(verb), model.unary(obj));
  return subjRelIntersection(model.unary(poss), model.has(), x);
}

Subset possObjViaHas(const SetModel& model, const std::string& poss, const std::string& subj,
                     const std::string& verb, const std::string& obj) {
  const Subset x = objRelIntersection(model.unary(obj), model.binary(verb), model.unary(subj));
  return subjRelIntersection(model.unary(poss), model.has(), x);
}

Tensor embed(const Subset& set, const Space& space) {
  if (set.size() != space.dim) throw ShapeError("subset size does not match the space");
  std::vector<double> data(space.dim, 0.0);
  for (auto i = set.find_first(); i != Subset::npos; i = set.find_next(i)) data[i] = 1.0;
  return Tensor::vector(space, std::move(data));
}

Tensor embed(const Relation& relation, const Space& space) {
  const std::size_t n = relation.universeSize();
  if (n != space.dim) throw ShapeError("relation size does not match the space");
  std::vector<double> data(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = relation.row(i);
    for (auto j = row.find_first(); j != Subset::npos; j = row.find_next(j)) data[i * n + j] = 1.0;
  }
  return Tensor::matrix(space, space, std::move(data));
}

bool containsViaMu(const Tensor& set, std::size_t element) {
  const Tensor e = Tensor::basis(set.leg(0), element);
  return maxAbsDiff(frobMu(e, set), e) == 0.0;
}

Tensor intersectViaMu(const Tensor& a, const Tensor& b) { return frobMu(a, b); }

}  // namespace discocat
