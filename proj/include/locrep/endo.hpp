#pragma once

#include <span>
#include <string>
#include <vector>

#include "locrep/autf2.hpp"
#include "locrep/word.hpp"

namespace locrep {

// Endomorphism of F_n given by the images of x_1..x_n.  Endomorphisms act on
// the right, so compose(f, g) first applies f and then g.
class Endo {
 public:
  explicit Endo(std::vector<Word> images);

  static Endo identity(int rank);

  // T^i(core): core acting on x_i, x_{i+1}, identity elsewhere (1-based i).
  static Endo local(int rank, int i, const AutF2& core);

  int rank() const { return static_cast<int>(images_.size()); }
  const Word& image(int generator) const { return images_.at(static_cast<std::size_t>(generator - 1)); }
  std::span<const Word> images() const { return images_; }

  bool is_identity() const;

  bool operator==(const Endo&) const = default;

 private:
  std::vector<Word> images_;
};

// x -> (x f) g.
Endo compose(const Endo& f, const Endo& g);

// Image of w under f.
Word apply(const Endo& f, const Word& w);

// "x1 -> ...; x2 -> ...".
std::string to_string(const Endo& f);

}  // namespace locrep
