#include "locrep/autf2.hpp"

#include <cstdlib>
#include <stdexcept>
#include <tuple>

#include "locrep/errors.hpp"

namespace locrep {

namespace {

constexpr NielsenMove kMoveOrder[] = {
    NielsenMove::InvertFirst,  NielsenMove::InvertSecond,   NielsenMove::LeftFirst,
    NielsenMove::LeftFirstInv, NielsenMove::RightFirst,     NielsenMove::RightFirstInv,
    NielsenMove::LeftSecond,   NielsenMove::LeftSecondInv,  NielsenMove::RightSecond,
    NielsenMove::RightSecondInv, NielsenMove::Swap,
};

const Word& commutator_ab() {
  static const Word w{kA, kB, -kA, -kB};
  return w;
}

void require_rank2(const Word& w) {
  if (w.max_generator() > 2) {
    throw RankError("automorphism images must be words over {a, b}: " + to_string(w));
  }
}

}  // namespace

const char* to_string(NielsenMove m) {
  switch (m) {
    case NielsenMove::InvertFirst: return "invert-first";
    case NielsenMove::InvertSecond: return "invert-second";
    case NielsenMove::LeftFirst: return "left-first";
    case NielsenMove::LeftFirstInv: return "left-first-inv";
    case NielsenMove::RightFirst: return "right-first";
    case NielsenMove::RightFirstInv: return "right-first-inv";
    case NielsenMove::LeftSecond: return "left-second";
    case NielsenMove::LeftSecondInv: return "left-second-inv";
    case NielsenMove::RightSecond: return "right-second";
    case NielsenMove::RightSecondInv: return "right-second-inv";
    case NielsenMove::Swap: return "swap";
  }
  return "?";
}

std::pair<Word, Word> apply_move(NielsenMove m, const Word& u, const Word& v) {
  switch (m) {
    case NielsenMove::InvertFirst: return {invert(u), v};
    case NielsenMove::InvertSecond: return {u, invert(v)};
    case NielsenMove::LeftFirst: return {v * u, v};
    case NielsenMove::LeftFirstInv: return {invert(v) * u, v};
    case NielsenMove::RightFirst: return {u * v, v};
    case NielsenMove::RightFirstInv: return {u * invert(v), v};
    case NielsenMove::LeftSecond: return {u, u * v};
    case NielsenMove::LeftSecondInv: return {u, invert(u) * v};
    case NielsenMove::RightSecond: return {u, v * u};
    case NielsenMove::RightSecondInv: return {u, v * invert(u)};
    case NielsenMove::Swap: return {v, u};
  }
  throw std::logic_error("unknown Nielsen move");
}

NielsenResult nielsen_reduce(const Word& a_image, const Word& b_image) {
  NielsenResult out{{a_image, b_image}, {}};
  auto& [u, v] = out.pair;
  for (;;) {
    std::size_t total = u.length() + v.length();
    bool moved = false;
    for (NielsenMove m : kMoveOrder) {
      auto next = apply_move(m, u, v);
      if (next.first.length() + next.second.length() < total) {
        u = std::move(next.first);
        v = std::move(next.second);
        out.moves.push_back(m);
        moved = true;
        break;
      }
    }
    if (!moved) return out;
  }
}

bool is_basis(const Word& a_image, const Word& b_image) {
  Word c = a_image * b_image * invert(a_image) * invert(b_image);
  return is_conjugate(c, commutator_ab()) || is_conjugate(c, invert(commutator_ab()));
}

bool is_basis_nielsen(const Word& a_image, const Word& b_image) {
  auto [u, v] = nielsen_reduce(a_image, b_image).pair;
  return u.length() == 1 && v.length() == 1 && std::abs(u.front()) != std::abs(v.front()) &&
         std::abs(u.front()) <= 2 && std::abs(v.front()) <= 2;
}

int abelian_determinant(const Word& a_image, const Word& b_image) {
  return exponent_sum(a_image, kA) * exponent_sum(b_image, kB) -
         exponent_sum(a_image, kB) * exponent_sum(b_image, kA);
}

AutF2::AutF2() : images_{Word::generator(kA), Word::generator(kB)} {}

AutF2::AutF2(Word a_image, Word b_image) : images_{std::move(a_image), std::move(b_image)} {
  require_rank2(images_[0]);
  require_rank2(images_[1]);
  if (!is_basis(images_[0], images_[1])) {
    throw PreconditionError("(" + to_string(images_[0]) + "," + to_string(images_[1]) +
                            ") is not a basis of F_2");
  }
}

AutF2 AutF2::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("core must be written \"A,B\": \"" + std::string(text) + "\"");
  }
  return AutF2(Word::parse(text.substr(0, comma)), Word::parse(text.substr(comma + 1)));
}

AutF2 compose(const AutF2& phi, const AutF2& psi) {
  Word a = substitute(phi.image_a(), psi.images());
  Word b = substitute(phi.image_b(), psi.images());
  if (!is_basis(a, b)) {
    throw std::logic_error("composition of automorphisms is not a basis: " + to_string(a) + "," +
                           to_string(b));
  }
  return AutF2(AutF2::Unchecked{}, std::move(a), std::move(b));
}

AutF2 invert_aut(const AutF2& phi) {
  auto reduced = nielsen_reduce(phi.image_a(), phi.image_b());
  // Replaying the moves on the formal pair (a, b) yields words Q with
  // Q_i(phi(a), phi(b)) equal to the reduced pair entries.
  Word qa = Word::generator(kA);
  Word qb = Word::generator(kB);
  for (NielsenMove m : reduced.moves) {
    std::tie(qa, qb) = apply_move(m, qa, qb);
  }
  const auto& [u, v] = reduced.pair;
  if (u.length() != 1 || v.length() != 1 || std::abs(u.front()) == std::abs(v.front())) {
    throw PreconditionError("invert_aut: " + to_string(phi) + " is not an automorphism");
  }
  std::array<Word, 2> inv;
  inv[static_cast<std::size_t>(std::abs(u.front()) - 1)] = u.front() > 0 ? qa : invert(qa);
  inv[static_cast<std::size_t>(std::abs(v.front()) - 1)] = v.front() > 0 ? qb : invert(qb);
  return AutF2(AutF2::Unchecked{}, std::move(inv[0]), std::move(inv[1]));
}

std::string to_string(const AutF2& phi) {
  return "(" + to_string(phi.image_a(), WordStyle::Compact) + "," +
         to_string(phi.image_b(), WordStyle::Compact) + ")";
}

Word apply(const AutF2& phi, const Word& w) { return substitute(w, phi.images()); }

}  // namespace locrep
