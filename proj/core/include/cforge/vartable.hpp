#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cforge::sym {

enum class VarRole { coordinate, velocity, momentum, extended, multiplier };

/// Registry of variable names with roles. The creation order is the total
/// order everything else (monomial order, pivot choice, report layout)
/// derives from; tables are immutable once built and shared by value handle.
class VarTable {
 public:
  struct Entry {
    std::string name;
    VarRole role;
  };

  static std::shared_ptr<const VarTable> create(std::vector<Entry> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::string& name(int i) const { return entries_.at(i).name; }
  VarRole role(int i) const { return entries_.at(i).role; }

  std::optional<int> find(const std::string& name) const;
  int index_of(const std::string& name) const;

  std::vector<int> indices_with_role(VarRole role) const;

 private:
  explicit VarTable(std::vector<Entry> entries);
  std::vector<Entry> entries_;
  std::unordered_map<std::string, int> by_name_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

}  // namespace cforge::sym
