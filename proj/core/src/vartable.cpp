#include "cforge/vartable.hpp"

namespace cforge::sym {

VarTable::VarTable(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (int i = 0; i < static_cast<int>(entries_.size()); ++i) {
    const auto& nm = entries_[i].name;
    if (nm.empty()) throw std::invalid_argument("variable name must not be empty");
    if (!by_name_.emplace(nm, i).second)
      throw std::invalid_argument("duplicate variable name: " + nm);
  }
}

std::shared_ptr<const VarTable> VarTable::create(std::vector<Entry> entries) {
  return std::shared_ptr<const VarTable>(new VarTable(std::move(entries)));
}

std::optional<int> VarTable::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

int VarTable::index_of(const std::string& name) const {
  auto idx = find(name);
  if (!idx) throw std::invalid_argument("unknown variable name: " + name);
  return *idx;
}

std::vector<int> VarTable::indices_with_role(VarRole role) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (entries_[i].role == role) out.push_back(i);
  return out;
}

}  // namespace cforge::sym
