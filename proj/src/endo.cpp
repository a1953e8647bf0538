#include "locrep/endo.hpp"

#include <stdexcept>

#include "locrep/errors.hpp"

namespace locrep {

Endo::Endo(std::vector<Word> images) : images_(std::move(images)) {
  for (const auto& w : images_) {
    if (w.max_generator() > rank()) {
      throw std::invalid_argument("endomorphism image " + to_string(w, WordStyle::Indexed) +
                                  " leaves F_" + std::to_string(rank()));
    }
  }
}

Endo Endo::identity(int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int k = 1; k <= rank; ++k) images.push_back(Word::generator(k));
  return Endo(std::move(images));
}

Endo Endo::local(int rank, int i, const AutF2& core) {
  if (i < 1 || i >= rank) {
    throw std::out_of_range("local position " + std::to_string(i) + " outside 1.." +
                            std::to_string(rank - 1));
  }
  const Word embed[] = {Word::generator(i), Word::generator(i + 1)};
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int k = 1; k <= rank; ++k) images.push_back(Word::generator(k));
  images[static_cast<std::size_t>(i - 1)] = substitute(core.image_a(), embed);
  images[static_cast<std::size_t>(i)] = substitute(core.image_b(), embed);
  return Endo(std::move(images));
}

bool Endo::is_identity() const { return *this == identity(rank()); }

Endo compose(const Endo& f, const Endo& g) {
  if (f.rank() != g.rank()) throw StrandMismatch("composing endomorphisms of different rank");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(f.rank()));
  for (const auto& w : f.images()) images.push_back(substitute(w, g.images()));
  return Endo(std::move(images));
}

Word apply(const Endo& f, const Word& w) { return substitute(w, f.images()); }

std::string to_string(const Endo& f) {
  std::string out;
  for (int k = 1; k <= f.rank(); ++k) {
    if (k > 1) out += "; ";
    out += "x" + std::to_string(k) + " -> " + to_string(f.image(k), WordStyle::Indexed);
  }
  return out;
}

}  // namespace locrep
