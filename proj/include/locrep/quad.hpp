#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "locrep/autf2.hpp"
#include "locrep/word.hpp"

namespace locrep {

// Images (tau(a), tau(b), kappa(a), kappa(b)) of a pair of cores acting at
// positions 1 and 2 of F_3.
struct Quad {
  Word A;
  Word B;
  Word C;
  Word D;

  Quad() = default;
  Quad(Word a, Word b, Word c, Word d);
  Quad(const AutF2& tau, const AutF2& kappa);

  // "A,B,C,D" in compact word syntax.
  static Quad parse(std::string_view text);

  bool operator==(const Quad&) const = default;
  // Lexicographic in (A, B, C, D) under the shortlex word order.
  std::strong_ordering operator<=>(const Quad& other) const;
};

std::string to_string(const Quad& q);

// One braid-relation equation in F_3 = <x, y, z>, both sides reduced.
struct EquationCheck {
  Word lhs;
  Word rhs;
  bool holds() const { return lhs == rhs; }
};

struct QuadReport {
  bool tau_is_basis = false;
  bool kappa_is_basis = false;
  EquationCheck top;     // images of x
  EquationCheck middle;  // images of y
  EquationCheck bottom;  // images of z

  bool valid() const {
    return tau_is_basis && kappa_is_basis && top.holds() && middle.holds() && bottom.holds();
  }
  // Names of failing conditions, e.g. "M" or "Aut(tau)".
  std::string failures() const;
};

// Evaluates the three braid-relation word equations and both basis tests.
QuadReport check_quad(const Word& A, const Word& B, const Word& C, const Word& D);
inline QuadReport check_quad(const Quad& q) { return check_quad(q.A, q.B, q.C, q.D); }

// Only the three equations, cheapest-reject-first (bottom, top, middle).
bool satisfies_braid_equations(const Quad& q);

bool is_valid_quad(const Quad& q);

// Same question asked through the braid relation s1 s2 s1 = s2 s1 s2 on the
// embedded endomorphisms of F_3.
bool check_pair_via_braid(const AutF2& tau, const AutF2& kappa);

// The three commuting natural symmetries.  Each requires a valid quad.
Quad inverse_rep(const Quad& q);
Quad swap_dual(const Quad& q);
Quad backward_dual(const Quad& q);

// Bitmask of natural symmetries.
enum Symmetry : unsigned {
  kIdentitySymmetry = 0,
  kInverse = 1,
  kSwap = 2,
  kBackward = 4,
};

// Applies the symmetries selected in `mask` (order is irrelevant).
Quad apply_symmetry(const Quad& q, unsigned mask);

// Least element of the symmetry orbit under the quad order.
Quad canonicalize(const Quad& q);

}  // namespace locrep
