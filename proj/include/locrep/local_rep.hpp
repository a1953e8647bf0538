#pragma once

#include <string>
#include <vector>

#include "locrep/autf2.hpp"

namespace locrep {

// A local representation of B_n on F_n, given by its n-1 cores.  Adjacent
// cores always form a valid quad.  n = 1 (no cores) is allowed so that the
// trivial 1-strand braid can be closed.
class LocalRep {
 public:
  // Throws PreconditionError if some adjacent pair is not a valid quad.
  explicit LocalRep(std::vector<AutF2> cores);

  // n - 1 copies of `core`; throws unless (core, core) is valid when n >= 3.
  static LocalRep constant(const AutF2& core, int n);
  // Constant path at the classical Artin core (aba^-1, a).
  static LocalRep artin(int n);

  int strands() const { return static_cast<int>(cores_.size()) + 1; }
  const std::vector<AutF2>& cores() const { return cores_; }
  // 1-based, as the braid generator index.
  const AutF2& core(int i) const { return cores_.at(static_cast<std::size_t>(i - 1)); }
  const AutF2& inverse_core(int i) const { return inverse_cores_.at(static_cast<std::size_t>(i - 1)); }

  // First n - 1 cores.
  LocalRep restrict_to(int n) const;
  // Appends one core; throws if (last core, next) is not valid.
  LocalRep extend(const AutF2& next) const;

  bool operator==(const LocalRep& other) const { return cores_ == other.cores_; }

 private:
  std::vector<AutF2> cores_;
  std::vector<AutF2> inverse_cores_;
};

// "(A,B);(C,D);..." or "B_1 (trivial)" when there are no cores.
std::string to_string(const LocalRep& rep);

}  // namespace locrep
