#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "locrep/finite_group.hpp"
#include "locrep/homs.hpp"
#include "locrep/presentation.hpp"

namespace locrep {

// Isomorphism-invariant summary of a finitely presented group.  Equal
// fingerprints are only consistent with isomorphism; unequal ones prove the
// groups differ.
struct Fingerprint {
  std::vector<std::int64_t> abelianization;  // Smith diagonal
  std::map<std::string, std::uint64_t> hom_counts;

  bool operator==(const Fingerprint&) const = default;
};

// Computed on the Tietze-simplified presentation.
Fingerprint fingerprint(const GroupPresentation& p, const std::vector<FiniteGroupTable>& groups,
                        std::uint64_t budget = kDefaultHomBudget, int jobs = 1);

Fingerprint fingerprint(const LocalRep& rep, const BraidWord& b,
                        const std::vector<FiniteGroupTable>& groups,
                        std::uint64_t budget = kDefaultHomBudget, int jobs = 1);

// Same abelian group (trivial factors ignored) and same hom counts.
bool consistent_with_isomorphic(const Fingerprint& x, const Fingerprint& y);

// "Z + Z/3; S3=18, Z2=2".
std::string to_string(const Fingerprint& f);

}  // namespace locrep
