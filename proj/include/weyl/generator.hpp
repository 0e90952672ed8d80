#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace weyl {

enum class GenKind : unsigned char { position, momentum };

// One canonical symbol Q_k or P_k. Indices are 1-based and bounded by the
// ambient number of degrees of freedom. The declaration order of the kind
// enum gives the canonical symbol order Q_1 < ... < Q_f < P_1 < ... < P_f.
struct Generator {
  GenKind kind;
  int index;  // 1..f

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator Q(int index = 1) { return {GenKind::position, index}; }
inline Generator P(int index = 1) { return {GenKind::momentum, index}; }

// Slot of a generator inside a 2f direction/assignment vector ordered
// (Q_1..Q_f, P_1..P_f).
inline int direction_slot(Generator g, int dof) {
  return g.kind == GenKind::position ? g.index - 1 : dof + g.index - 1;
}

// Compact "Q1"/"P2" form used in diagnostics and JSON.
inline std::string to_string(Generator g) {
  return std::string(1, g.kind == GenKind::position ? 'Q' : 'P') +
         std::to_string(g.index);
}

inline void check_index(Generator g, int dof) {
  if (g.index < 1 || g.index > dof)
    throw std::out_of_range("generator " + to_string(g) +
                            " out of range for dof " + std::to_string(dof));
}

}  // namespace weyl
