#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "locrep/endo.hpp"
#include "locrep/local_rep.hpp"

namespace locrep {

// A word in the Artin generators of B_n: +i is sigma_i, -i its inverse.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// Whitespace- or comma-separated signed generator indices, e.g. "1 1 1" or
// "-2,1".  Throws ParseError on bad tokens or indices outside 1..n-1.
BraidWord parse_braid(std::string_view text, int strands);

// Cancels adjacent sigma_i sigma_i^-1 pairs only.
BraidWord free_reduce_braid(const BraidWord& b);

// Concatenation on the same strand count.
BraidWord operator*(const BraidWord& u, const BraidWord& v);

// Reverse word with every sign flipped.
BraidWord inverse(const BraidWord& b);

// "1 1 -2"; the empty braid prints as "".
std::string to_string(const BraidWord& b);

// T^i(core) for sign +1, T^i(core^-1) for sign -1.
Endo local_endo(const LocalRep& rep, int i, int sign);

// Right action of the braid: letters applied in word order.
Endo endo_of_braid(const LocalRep& rep, const BraidWord& b);

// Checks s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} and s_i s_j = s_j s_i for
// |i - j| >= 2 on the generator images.
bool verify_braid_relations(const LocalRep& rep);

// As above, for an arbitrary core sequence that need not form a valid rep.
bool verify_braid_relations(const std::vector<AutF2>& cores);

}  // namespace locrep
