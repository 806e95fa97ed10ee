#pragma once

#include <vector>

#include "graphideal/monomial.hpp"

namespace graphideal {

/// Monomial order over a fixed variable universe. Three kinds:
///   - grevlex: graded reverse lexicographic on one precedence list,
///   - lex: lexicographic on one precedence list,
///   - block_elimination: two blocks compared grevlex-by-grevlex, every
///     monomial touching the front block beating every monomial in the back
///     block alone (the standard elimination setup).
/// Precedence lists run from the greatest variable to the least.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block_elimination };

  static MonomialOrder grevlex(std::vector<VarIndex> precedence);
  static MonomialOrder lex(std::vector<VarIndex> precedence);
  static MonomialOrder block_elimination(std::vector<VarIndex> front,
                                         std::vector<VarIndex> back);

  Kind kind() const { return kind_; }
  const std::vector<std::vector<VarIndex>>& blocks() const { return blocks_; }

  /// >0 if a comes after b in the order (a is the larger monomial), 0 if
  /// equal, <0 otherwise. PreconditionError on variables outside the order.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && blocks_ == o.blocks_;
  }

 private:
  MonomialOrder(Kind kind, std::vector<std::vector<VarIndex>> blocks);

  Kind kind_;
  std::vector<std::vector<VarIndex>> blocks_;
  std::vector<int> block_of_;  // indexed by variable; -1 = not in the order
  std::vector<int> rank_of_;   // position in its precedence list, 0 = greatest
};

}  // namespace graphideal
