#pragma once

#include <string>
#include <vector>

#include "locrep/autf2.hpp"
#include "locrep/local_rep.hpp"

namespace locrep {

enum class S1Status { Holds, HoldsUpToInversion, Fails, Unknown };

const char* to_string(S1Status s);

struct S1Report {
  S1Status status = S1Status::Unknown;
  std::string witness;
};

// Examines <a, b | (b)core = b> and <a, b | (b)core^-1 = b>.  Holds when both
// are infinite cyclic with a = b; HoldsUpToInversion when a = b^-1 in at
// least one and neither fails; Fails when some quotient is provably not
// infinite cyclic generated by a = b^{+-1}; Unknown otherwise.
S1Report check_S1(const AutF2& core);

// Per-core S1 reports plus whether the rep extends along an outgoing edge.
struct StabilizationReport {
  std::vector<S1Report> cores;
  bool extends = false;
  // Every core holds (possibly up to inversion) and the rep extends.
  bool ok() const;
  // Every core holds with a = b and the rep extends.
  bool strict() const;
};

StabilizationReport check_stabilization(const LocalRep& rep);

}  // namespace locrep
