#include "locrep/presentation.hpp"

#include <stdexcept>

#include "locrep/errors.hpp"

namespace locrep {

GroupPresentation::GroupPresentation(int gens, std::vector<Word> rels)
    : generators(gens), relators(std::move(rels)) {
  if (generators < 0) throw std::invalid_argument("negative generator count");
  for (const auto& r : relators) {
    if (r.max_generator() > generators) {
      throw std::invalid_argument("relator " + to_string(r, WordStyle::Indexed) +
                                  " uses a generator beyond x" + std::to_string(generators));
    }
  }
}

std::string to_string(const GroupPresentation& p) {
  WordStyle style = p.generators <= 2 ? WordStyle::Compact : WordStyle::Indexed;
  std::string out = "gens: " + std::to_string(p.generators) + "; relators: ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(p.relators[i], style);
  }
  return out;
}

GroupPresentation presentation(const LocalRep& rep, const BraidWord& b, bool keep_trivial) {
  Endo e = endo_of_braid(rep, b);
  std::vector<Word> relators;
  for (int i = 1; i <= e.rank(); ++i) {
    Word r = e.image(i) * invert(Word::generator(i));
    if (keep_trivial || !r.empty()) relators.push_back(std::move(r));
  }
  return GroupPresentation(e.rank(), std::move(relators));
}

BraidWord markov_conjugate(const BraidWord& b, const BraidWord& g) {
  if (b.strands() != g.strands()) throw StrandMismatch("conjugator on a different strand count");
  return inverse(g) * b * g;
}

BraidWord markov_stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  auto letters = b.letters();
  letters.push_back(sign * b.strands());
  return BraidWord(b.strands() + 1, std::move(letters));
}

}  // namespace locrep
