#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gamesec {

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Index of a level into its lattice's element table.
using LevelId = int;

/// Finite join-semilattice (L, join, bottom) with an explicit join table.
/// Immutable after construction; safe to share across threads.
class SecurityLattice {
public:
  /// Parses the line-oriented declaration format:
  ///   elements: <id> <id> ...
  ///   bottom: <id>
  ///   join: <id> <id> = <id>     (zero or more)
  /// Joins with bottom and self-joins are implied; all other unordered
  /// pairs must be declared. Throws LatticeError on syntax errors,
  /// contradictory entries, missing bottom, or a non-total table.
  static SecurityLattice parse(const std::string& text);
  static SecurityLattice parse_file(const std::string& path);

  int size() const { return static_cast<int>(names_.size()); }
  LevelId bottom() const { return bottom_; }
  const std::string& name(LevelId l) const;
  LevelId level(const std::string& id) const;  // throws on unknown element
  std::optional<LevelId> find(const std::string& id) const;

  LevelId join(LevelId a, LevelId b) const;
  bool leq(LevelId a, LevelId b) const { return join(a, b) == b; }

  /// Algebraic laws checked exhaustively: commutativity, associativity,
  /// idempotence, bottom as unit. Empty result means the table is valid.
  std::vector<std::string> law_violations() const;

  /// Stable identity string (elements + table); used as a cache key.
  const std::string& fingerprint() const { return fingerprint_; }

private:
  SecurityLattice() = default;
  LevelId at(LevelId a, LevelId b) const { return table_[a * size() + b]; }

  std::vector<std::string> names_;
  LevelId bottom_ = 0;
  std::vector<LevelId> table_;  // size*size, row-major
  std::string fingerprint_;
};

}  // namespace gamesec
