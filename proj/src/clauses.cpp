#include "coringlab/clauses.hpp"

namespace coringlab {

void ClauseTable::add(std::string id, bool value, std::string note) {
  clauses.push_back(Clause{std::move(id), value, true, std::move(note)});
}

void ClauseTable::add_ungrounded(std::string id, std::optional<bool> value, std::string note) {
  clauses.push_back(Clause{std::move(id), value, false, std::move(note)});
}

bool ClauseTable::agreement() const {
  std::optional<bool> first;
  for (const auto& c : clauses) {
    if (!c.grounded || !c.value) continue;
    if (!first) first = c.value;
    else if (*first != *c.value) return false;
  }
  return true;
}

std::optional<bool> ClauseTable::value(const std::string& id) const {
  for (const auto& c : clauses) {
    if (c.id == id) return c.value;
  }
  return std::nullopt;
}

}  // namespace coringlab
