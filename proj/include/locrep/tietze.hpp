#pragma once

#include <optional>

#include "locrep/presentation.hpp"

namespace locrep {

inline constexpr int kTietzeIterationCap = 1000;

// One Tietze pass: if any relator is not cyclically reduced, empty, or a
// rotation/inverse of another, normalizes the relator list; otherwise
// eliminates one generator occurring exactly once in some relator (shortest
// relator first, highest generator index first) and renumbers.  Returns
// nullopt at a fixed point.
std::optional<GroupPresentation> tietze_step(const GroupPresentation& p);

// tietze_step to a fixed point or the iteration cap.
GroupPresentation tietze_simplify(const GroupPresentation& p, int max_iterations = kTietzeIterationCap);

}  // namespace locrep
