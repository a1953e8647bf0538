#pragma once

#include <cstdint>

#include "locrep/finite_group.hpp"
#include "locrep/presentation.hpp"

namespace locrep {

inline constexpr std::uint64_t kDefaultHomBudget = 10'000'000;

// Number of generator assignments into g under which every relator evaluates
// to the identity.  Throws BudgetExceeded when |g|^generators exceeds the
// budget.  `jobs` splits the choices for x_1 across threads.
std::uint64_t count_homs(const GroupPresentation& p, const FiniteGroupTable& g,
                         std::uint64_t budget = kDefaultHomBudget, int jobs = 1);

}  // namespace locrep
