#include "discocat/pregroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "discocat/errors.hpp"

namespace discocat {

bool cancels(const AtomicType& left, const AtomicType& right) {
  return left.base == right.base && right.order == left.order + 1;
}

PregroupType PregroupType::operator*(const PregroupType& other) const {
  std::vector<AtomicType> atoms = atoms_;
  atoms.insert(atoms.end(), other.atoms_.begin(), other.atoms_.end());
  return PregroupType(std::move(atoms));
}

namespace {

AtomicType parseAtom(std::string_view token, const Alphabet& alphabet) {
  const auto caret = token.find('^');
  std::string_view base = token.substr(0, caret);
  if (base.empty()) throw ParseError("empty base symbol in '" + std::string(token) + "'");
  if (!alphabet.contains(base)) {
    throw ParseError("unknown base symbol '" + std::string(base) + "'");
  }
  AtomicType atom{std::string(base), 0};
  if (caret == std::string_view::npos) return atom;

  std::string_view suffix = token.substr(caret + 1);
  if (suffix.size() >= 2 && suffix.front() == '{' && suffix.back() == '}') {
    suffix = suffix.substr(1, suffix.size() - 2);
  }
  if (suffix.empty()) throw ParseError("malformed adjoint suffix in '" + std::string(token) + "'");
  const char direction = suffix.front();
  if (direction != 'l' && direction != 'r') {
    throw ParseError("malformed adjoint suffix in '" + std::string(token) + "'");
  }
  if (!std::all_of(suffix.begin(), suffix.end(), [&](char c) { return c == direction; })) {
    throw ParseError("mixed adjoint suffix in '" + std::string(token) + "'");
  }
  const int count = static_cast<int>(suffix.size());
  atom.order = direction == 'l' ? -count : count;
  return atom;
}

}  // namespace

PregroupType parseType(std::string_view text, const Alphabet& alphabet) {
  std::vector<AtomicType> atoms;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) atoms.push_back(parseAtom(token, alphabet));
  return PregroupType(std::move(atoms));
}

std::string to_string(const AtomicType& atom) {
  if (atom.order == 0) return atom.base;
  const char direction = atom.order < 0 ? 'l' : 'r';
  return atom.base + "^" + std::string(static_cast<std::size_t>(std::abs(atom.order)), direction);
}

std::string to_string(const PregroupType& type) {
  std::string out;
  for (const auto& atom : type.atoms()) {
    if (!out.empty()) out += ' ';
    out += to_string(atom);
  }
  return out;
}

bool isValidPlan(const PregroupType& type, const ReductionPlan& plan) {
  const std::size_t n = type.size();
  std::vector<int> owner(n, -1);
  for (std::size_t k = 0; k < plan.links.size(); ++k) {
    const auto [i, j] = plan.links[k];
    if (i >= j || j >= n) return false;
    if (!cancels(type[i], type[j])) return false;
    if (owner[i] != -1 || owner[j] != -1) return false;
    owner[i] = owner[j] = static_cast<int>(k);
  }
  for (std::size_t r : plan.residual) {
    if (r >= n || owner[r] != -1) return false;
    owner[r] = -2;
  }
  if (std::any_of(owner.begin(), owner.end(), [](int o) { return o == -1; })) return false;
  if (!std::is_sorted(plan.residual.begin(), plan.residual.end())) return false;

  // Every position strictly inside a cup must belong to a cup nested inside it.
  for (const auto& [i, j] : plan.links) {
    for (std::size_t p = i + 1; p < j; ++p) {
      if (owner[p] == -2) return false;
      const auto [a, b] = plan.links[static_cast<std::size_t>(owner[p])];
      if (a < i || b > j) return false;
    }
  }
  return true;
}

PregroupType residualType(const PregroupType& type, const ReductionPlan& plan) {
  std::vector<AtomicType> atoms;
  atoms.reserve(plan.residual.size());
  for (std::size_t r : plan.residual) atoms.push_back(type[r]);
  return PregroupType(std::move(atoms));
}

ReductionPlan reduceGreedy(const PregroupType& type) {
  ReductionPlan plan;
  std::vector<std::size_t> stack;
  for (std::size_t j = 0; j < type.size(); ++j) {
    if (!stack.empty() && cancels(type[stack.back()], type[j])) {
      plan.links.emplace_back(stack.back(), j);
      stack.pop_back();
    } else {
      stack.push_back(j);
    }
  }
  std::sort(plan.links.begin(), plan.links.end());
  plan.residual = std::move(stack);
  return plan;
}

namespace {

class ReductionSearch {
 public:
  ReductionSearch(const PregroupType& type, const PregroupType& target)
      : type_(type), target_(target) {}

  bool run(std::size_t pos) {
    const std::size_t remaining = type_.size() - pos;
    // Each remaining atom either pushes (+1) or cancels (-1).
    if (target_.size() + remaining < stack_.size()) return false;
    if (target_.size() > stack_.size() + remaining) return false;
    if (pos == type_.size()) return matchesTarget();

    const std::string key = memoKey(pos);
    if (failed_.count(key)) return false;

    if (!stack_.empty() && cancels(type_[stack_.back()], type_[pos])) {
      const std::size_t top = stack_.back();
      stack_.pop_back();
      links_.emplace_back(top, pos);
      if (run(pos + 1)) return true;
      links_.pop_back();
      stack_.push_back(top);
    }
    stack_.push_back(pos);
    if (run(pos + 1)) return true;
    stack_.pop_back();

    failed_.insert(key);
    return false;
  }

  ReductionPlan plan() const {
    ReductionPlan plan{links_, stack_};
    std::sort(plan.links.begin(), plan.links.end());
    return plan;
  }

 private:
  bool matchesTarget() const {
    if (stack_.size() != target_.size()) return false;
    for (std::size_t k = 0; k < stack_.size(); ++k) {
      if (!(type_[stack_[k]] == target_[k])) return false;
    }
    return true;
  }

  // The outcome of the remaining search depends only on the position and on
  // the atoms left open on the stack.
  std::string memoKey(std::size_t pos) const {
    std::string key = std::to_string(pos) + ":";
    for (std::size_t s : stack_) key += std::to_string(s) + ",";
    return key;
  }

  const PregroupType& type_;
  const PregroupType& target_;
  std::vector<std::size_t> stack_;
  std::vector<std::pair<std::size_t, std::size_t>> links_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<ReductionPlan> searchReduction(const PregroupType& type, const PregroupType& target) {
  ReductionSearch search(type, target);
  if (!search.run(0)) return std::nullopt;
  return search.plan();
}

}  // namespace discocat
