#include "locrep/fingerprint.hpp"

#include "locrep/abelian.hpp"
#include "locrep/tietze.hpp"

namespace locrep {

Fingerprint fingerprint(const GroupPresentation& p, const std::vector<FiniteGroupTable>& groups,
                        std::uint64_t budget, int jobs) {
  GroupPresentation s = tietze_simplify(p);
  Fingerprint f;
  f.abelianization = abelianization(s);
  for (const auto& g : groups) f.hom_counts[g.name()] = count_homs(s, g, budget, jobs);
  return f;
}

Fingerprint fingerprint(const LocalRep& rep, const BraidWord& b,
                        const std::vector<FiniteGroupTable>& groups, std::uint64_t budget, int jobs) {
  return fingerprint(presentation(rep, b), groups, budget, jobs);
}

bool consistent_with_isomorphic(const Fingerprint& x, const Fingerprint& y) {
  return invariant_factors(x.abelianization) == invariant_factors(y.abelianization) &&
         x.hom_counts == y.hom_counts;
}

std::string to_string(const Fingerprint& f) {
  std::string out = describe_abelian(f.abelianization);
  bool first = true;
  for (const auto& [name, count] : f.hom_counts) {
    out += first ? "; " : ", ";
    out += name + "=" + std::to_string(count);
    first = false;
  }
  return out;
}

}  // namespace locrep
