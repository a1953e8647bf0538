#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locrep/word.hpp"

namespace locrep {

// Elementary Nielsen moves on an ordered pair (u, v).  Listed in the order in
// which nielsen_reduce tries them.
enum class NielsenMove {
  InvertFirst,       // (u^-1, v)
  InvertSecond,      // (u, v^-1)
  LeftFirst,         // (v u, v)
  LeftFirstInv,      // (v^-1 u, v)
  RightFirst,        // (u v, v)
  RightFirstInv,     // (u v^-1, v)
  LeftSecond,        // (u, u v)
  LeftSecondInv,     // (u, u^-1 v)
  RightSecond,       // (u, v u)
  RightSecondInv,    // (u, v u^-1)
  Swap,              // (v, u)
};

const char* to_string(NielsenMove m);

std::pair<Word, Word> apply_move(NielsenMove m, const Word& u, const Word& v);

struct NielsenResult {
  std::pair<Word, Word> pair;
  std::vector<NielsenMove> moves;
};

// Greedy Nielsen reduction: applies the first move (in enum order) that
// strictly shortens |u| + |v| until none does.
NielsenResult nielsen_reduce(const Word& a_image, const Word& b_image);

// Commutator criterion: a -> A, b -> B is an automorphism of F_2 iff
// [A, B] is conjugate to [a, b] or its inverse.
bool is_basis(const Word& a_image, const Word& b_image);

// Independent basis test via Nielsen reduction to {a^±1, b^±1}.
bool is_basis_nielsen(const Word& a_image, const Word& b_image);

// Determinant of the abelianized 2x2 exponent-sum matrix.
int abelian_determinant(const Word& a_image, const Word& b_image);

// An automorphism of F_2 = <a, b>, stored as (image of a, image of b).
// Automorphisms act on the right: x . (phi psi) = (x . phi) . psi.
class AutF2 {
 public:
  // Identity.
  AutF2();
  // Throws PreconditionError unless (a_image, b_image) is a basis.
  AutF2(Word a_image, Word b_image);

  // "A,B" with compact word syntax, e.g. "abA,a".
  static AutF2 parse(std::string_view text);

  const Word& image_a() const { return images_[0]; }
  const Word& image_b() const { return images_[1]; }
  // images()[0] = image of a, images()[1] = image of b.
  std::span<const Word> images() const { return images_; }

  bool operator==(const AutF2&) const = default;
  std::strong_ordering operator<=>(const AutF2& other) const {
    if (auto c = images_[0] <=> other.images_[0]; c != 0) return c;
    return images_[1] <=> other.images_[1];
  }

 private:
  struct Unchecked {};
  AutF2(Unchecked, Word a, Word b) : images_{std::move(a), std::move(b)} {}

  std::array<Word, 2> images_;

  friend AutF2 compose(const AutF2& phi, const AutF2& psi);
  friend AutF2 invert_aut(const AutF2& phi);
};

// x -> (x phi) psi.
AutF2 compose(const AutF2& phi, const AutF2& psi);

AutF2 invert_aut(const AutF2& phi);

inline bool aut_equal(const AutF2& phi, const AutF2& psi) { return phi == psi; }

// "(A,B)".
std::string to_string(const AutF2& phi);

// Image of an arbitrary word over {a, b} under phi.
Word apply(const AutF2& phi, const Word& w);

}  // namespace locrep
