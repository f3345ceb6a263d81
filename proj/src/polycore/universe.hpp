#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bbs::polycore {

// 1-based grid position of a scheme coordinate c[i,j]: i indexes the order
// ideal, j the border.
struct CIndex {
  int i = 0;
  int j = 0;
  friend bool operator==(const CIndex&, const CIndex&) = default;
  friend auto operator<=>(const CIndex&, const CIndex&) = default;
};

std::string c_name(CIndex key);

// Named variables of a polynomial ring. Index order is the canonical display
// order: x-block, then the c-block sorted by (j, i), then the deformation
// parameter.
class VariableUniverse {
 public:
  enum class Block { X, C, T };

  static std::shared_ptr<const VariableUniverse> make(std::vector<std::string> x_names,
                                                      std::vector<CIndex> c_keys = {},
                                                      std::optional<std::string> t_name = {});

  // x1..xn, or x, y, z when n <= 3.
  static std::vector<std::string> default_x_names(size_t n);

  size_t size() const { return names_.size(); }
  size_t x_count() const { return x_count_; }
  size_t c_count() const { return c_keys_.size(); }
  bool has_t() const { return t_index_.has_value(); }
  size_t t_index() const { return *t_index_; }

  const std::string& name(size_t v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  Block block(size_t v) const;
  CIndex c_key(size_t v) const;  // v must be in the c-block

  std::optional<size_t> find(std::string_view name) const;
  size_t index(std::string_view name) const;  // throws UniverseMismatch
  std::optional<size_t> find_c(CIndex key) const;
  size_t c_index(CIndex key) const;  // throws UniverseMismatch

  const std::vector<CIndex>& c_keys() const { return c_keys_; }

  bool operator==(const VariableUniverse& other) const { return names_ == other.names_; }

 private:
  VariableUniverse() = default;

  std::vector<std::string> names_;
  size_t x_count_ = 0;
  std::vector<CIndex> c_keys_;  // sorted by (j, i); parallel to the c-block
  std::optional<size_t> t_index_;
  std::map<std::string, size_t, std::less<>> by_name_;
};

using UniversePtr = std::shared_ptr<const VariableUniverse>;

// The universe restricted to `keep` (block structure and names preserved).
UniversePtr sub_universe(const VariableUniverse& u, const std::vector<size_t>& keep);
// Adds a deformation parameter `t_name` to u.
UniversePtr with_parameter(const VariableUniverse& u, const std::string& t_name);

bool same_universe(const UniversePtr& a, const UniversePtr& b);
void require_same_universe(const UniversePtr& a, const UniversePtr& b);

}  // namespace bbs::polycore
