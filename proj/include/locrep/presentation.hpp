#pragma once

#include <string>
#include <vector>

#include "locrep/braid.hpp"
#include "locrep/local_rep.hpp"
#include "locrep/word.hpp"

namespace locrep {

// <x_1, ..., x_n | relators>.
struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;

  GroupPresentation() = default;
  // Throws std::invalid_argument if a relator uses a generator beyond n.
  GroupPresentation(int generators, std::vector<Word> relators);

  bool operator==(const GroupPresentation&) const = default;
};

// "gens: n; relators: w1, w2, ...".
std::string to_string(const GroupPresentation& p);

// Closed-braid group: relators (x_i)[rep(b)] x_i^-1 for i = 1..n.  Empty
// relators are dropped unless keep_trivial is set.
GroupPresentation presentation(const LocalRep& rep, const BraidWord& b, bool keep_trivial = false);

// g^-1 b g.
BraidWord markov_conjugate(const BraidWord& b, const BraidWord& g);

// b sigma_n^{sign} on n + 1 strands.
BraidWord markov_stabilize(const BraidWord& b, int sign);

}  // namespace locrep
