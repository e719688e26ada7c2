#pragma once

#include <optional>
#include <string>
#include <vector>

namespace coringlab {

struct Clause {
  std::string id;
  std::optional<bool> value;  // empty when not evaluated
  bool grounded = true;       // takes part in the agreement check
  std::string note;
  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Verdicts of the clauses of one equivalence theorem. `agreement` holds when
/// every grounded, evaluated clause has the same value.
struct ClauseTable {
  std::string theorem;
  std::vector<Clause> clauses;
  std::vector<std::string> notes;

  void add(std::string id, bool value, std::string note = {});
  void add_ungrounded(std::string id, std::optional<bool> value, std::string note);
  bool agreement() const;
  std::optional<bool> value(const std::string& id) const;
  friend bool operator==(const ClauseTable&, const ClauseTable&) = default;
};

}  // namespace coringlab
