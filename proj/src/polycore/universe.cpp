#include "polycore/universe.hpp"

#include <algorithm>
#include <set>

#include "polycore/errors.hpp"

namespace bbs::polycore {

std::string c_name(CIndex key) {
  return "c[" + std::to_string(key.i) + "," + std::to_string(key.j) + "]";
}

std::shared_ptr<const VariableUniverse> VariableUniverse::make(std::vector<std::string> x_names,
                                                               std::vector<CIndex> c_keys,
                                                               std::optional<std::string> t_name) {
  std::shared_ptr<VariableUniverse> u(new VariableUniverse());
  std::sort(c_keys.begin(), c_keys.end(), [](CIndex a, CIndex b) {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  });
  if (std::adjacent_find(c_keys.begin(), c_keys.end()) != c_keys.end())
    throw UniverseMismatch("duplicate c-variable key");
  for (CIndex k : c_keys)
    if (k.i < 1 || k.j < 1) throw UniverseMismatch("c-variable key must be 1-based: " + c_name(k));

  u->x_count_ = x_names.size();
  u->names_ = std::move(x_names);
  for (CIndex k : c_keys) u->names_.push_back(c_name(k));
  u->c_keys_ = std::move(c_keys);
  if (t_name) {
    u->t_index_ = u->names_.size();
    u->names_.push_back(*t_name);
  }
  for (size_t v = 0; v < u->names_.size(); ++v) {
    if (u->names_[v].empty()) throw UniverseMismatch("empty variable name");
    if (!u->by_name_.emplace(u->names_[v], v).second)
      throw UniverseMismatch("duplicate variable name '" + u->names_[v] + "'");
  }
  return u;
}

std::vector<std::string> VariableUniverse::default_x_names(size_t n) {
  if (n <= 3) {
    static const char* const kShort[] = {"x", "y", "z"};
    return std::vector<std::string>(kShort, kShort + n);
  }
  std::vector<std::string> names;
  for (size_t k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
  return names;
}

VariableUniverse::Block VariableUniverse::block(size_t v) const {
  if (v < x_count_) return Block::X;
  if (v < x_count_ + c_keys_.size()) return Block::C;
  return Block::T;
}

CIndex VariableUniverse::c_key(size_t v) const {
  if (block(v) != Block::C) throw UniverseMismatch("'" + name(v) + "' is not a c-variable");
  return c_keys_[v - x_count_];
}

std::optional<size_t> VariableUniverse::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

size_t VariableUniverse::index(std::string_view name) const {
  auto v = find(name);
  if (!v) throw UniverseMismatch("unknown variable '" + std::string(name) + "'");
  return *v;
}

std::optional<size_t> VariableUniverse::find_c(CIndex key) const {
  auto it = std::lower_bound(c_keys_.begin(), c_keys_.end(), key, [](CIndex a, CIndex b) {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  });
  if (it == c_keys_.end() || *it != key) return std::nullopt;
  return x_count_ + static_cast<size_t>(it - c_keys_.begin());
}

size_t VariableUniverse::c_index(CIndex key) const {
  auto v = find_c(key);
  if (!v) throw UniverseMismatch("unknown variable '" + c_name(key) + "'");
  return *v;
}

UniversePtr sub_universe(const VariableUniverse& u, const std::vector<size_t>& keep) {
  std::vector<bool> kept(u.size(), false);
  for (size_t v : keep) kept.at(v) = true;
  std::vector<std::string> xs;
  std::vector<CIndex> cs;
  std::optional<std::string> t;
  for (size_t v = 0; v < u.size(); ++v) {
    if (!kept[v]) continue;
    switch (u.block(v)) {
      case VariableUniverse::Block::X: xs.push_back(u.name(v)); break;
      case VariableUniverse::Block::C: cs.push_back(u.c_key(v)); break;
      case VariableUniverse::Block::T: t = u.name(v); break;
    }
  }
  return VariableUniverse::make(std::move(xs), std::move(cs), std::move(t));
}

UniversePtr with_parameter(const VariableUniverse& u, const std::string& t_name) {
  if (u.has_t()) throw UniverseMismatch("universe already has a deformation parameter");
  std::vector<std::string> xs(u.names().begin(), u.names().begin() + static_cast<long>(u.x_count()));
  return VariableUniverse::make(std::move(xs), u.c_keys(), t_name);
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (!same_universe(a, b)) throw UniverseMismatch("operands live in different variable universes");
}

}  // namespace bbs::polycore
