#include "locrep/quad.hpp"

#include <array>

#include "locrep/endo.hpp"
#include "locrep/errors.hpp"

namespace locrep {

namespace {

const Word kX = Word::generator(1);
const Word kY = Word::generator(2);
const Word kZ = Word::generator(3);

// W(u, v): substitute u for a and v for b.
Word eval(const Word& w, const Word& u, const Word& v) {
  const std::array<Word, 2> images{u, v};
  return substitute(w, images);
}

EquationCheck top_equation(const Quad& q) {
  Word a_xy = eval(q.A, kX, kY);
  Word b_xy = eval(q.B, kX, kY);
  return {eval(q.A, a_xy, eval(q.C, b_xy, kZ)), eval(q.A, kX, eval(q.C, kY, kZ))};
}

EquationCheck middle_equation(const Quad& q) {
  Word a_xy = eval(q.A, kX, kY);
  Word b_xy = eval(q.B, kX, kY);
  Word c_yz = eval(q.C, kY, kZ);
  Word d_yz = eval(q.D, kY, kZ);
  return {eval(q.B, a_xy, eval(q.C, b_xy, kZ)), eval(q.C, eval(q.B, kX, c_yz), d_yz)};
}

EquationCheck bottom_equation(const Quad& q) {
  Word b_xy = eval(q.B, kX, kY);
  Word c_yz = eval(q.C, kY, kZ);
  Word d_yz = eval(q.D, kY, kZ);
  return {eval(q.D, b_xy, kZ), eval(q.D, eval(q.B, kX, c_yz), d_yz)};
}

void require_valid(const Quad& q, const char* op) {
  if (!is_valid_quad(q)) {
    throw PreconditionError(std::string(op) + ": " + to_string(q) +
                            " does not define a local representation");
  }
}

}  // namespace

Quad::Quad(Word a, Word b, Word c, Word d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {}

Quad::Quad(const AutF2& tau, const AutF2& kappa)
    : A(tau.image_a()), B(tau.image_b()), C(kappa.image_a()), D(kappa.image_b()) {}

Quad Quad::parse(std::string_view text) {
  std::array<Word, 4> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    auto comma = text.find(',', start);
    if ((k < 3) == (comma == std::string_view::npos)) {
      throw ParseError("quad must be written \"A,B,C,D\": \"" + std::string(text) + "\"");
    }
    auto end = k < 3 ? comma : text.size();
    parts[k] = Word::parse(text.substr(start, end - start));
    if (parts[k].max_generator() > 2) throw RankError("quad words must be over {a, b}");
    start = end + 1;
  }
  return Quad(parts[0], parts[1], parts[2], parts[3]);
}

std::strong_ordering Quad::operator<=>(const Quad& other) const {
  if (auto c = A <=> other.A; c != 0) return c;
  if (auto c = B <=> other.B; c != 0) return c;
  if (auto c = C <=> other.C; c != 0) return c;
  return D <=> other.D;
}

std::string to_string(const Quad& q) {
  auto s = [](const Word& w) { return to_string(w, WordStyle::Compact); };
  return s(q.A) + "," + s(q.B) + "," + s(q.C) + "," + s(q.D);
}

std::string QuadReport::failures() const {
  std::string out;
  auto add = [&out](const char* name) {
    if (!out.empty()) out += ",";
    out += name;
  };
  if (!top.holds()) add("T");
  if (!middle.holds()) add("M");
  if (!bottom.holds()) add("B");
  if (!tau_is_basis) add("Aut(tau)");
  if (!kappa_is_basis) add("Aut(kappa)");
  return out;
}

QuadReport check_quad(const Word& A, const Word& B, const Word& C, const Word& D) {
  for (const Word* w : {&A, &B, &C, &D}) {
    if (w->max_generator() > 2) throw RankError("quad words must be over {a, b}");
  }
  Quad q(A, B, C, D);
  QuadReport r;
  r.tau_is_basis = is_basis(A, B);
  r.kappa_is_basis = is_basis(C, D);
  r.top = top_equation(q);
  r.middle = middle_equation(q);
  r.bottom = bottom_equation(q);
  return r;
}

bool satisfies_braid_equations(const Quad& q) {
  return bottom_equation(q).holds() && top_equation(q).holds() && middle_equation(q).holds();
}

bool is_valid_quad(const Quad& q) {
  return is_basis(q.A, q.B) && is_basis(q.C, q.D) && satisfies_braid_equations(q);
}

bool check_pair_via_braid(const AutF2& tau, const AutF2& kappa) {
  Endo s1 = Endo::local(3, 1, tau);
  Endo s2 = Endo::local(3, 2, kappa);
  return compose(compose(s1, s2), s1) == compose(compose(s2, s1), s2);
}

Quad inverse_rep(const Quad& q) {
  require_valid(q, "inverse_rep");
  AutF2 tau = invert_aut(AutF2(q.A, q.B));
  AutF2 kappa = invert_aut(AutF2(q.C, q.D));
  return Quad(tau, kappa);
}

Quad swap_dual(const Quad& q) {
  require_valid(q, "swap_dual");
  return Quad(swap_letters(q.D), swap_letters(q.C), swap_letters(q.B), swap_letters(q.A));
}

Quad backward_dual(const Quad& q) {
  require_valid(q, "backward_dual");
  return Quad(reverse(q.A), reverse(q.B), reverse(q.C), reverse(q.D));
}

Quad apply_symmetry(const Quad& q, unsigned mask) {
  Quad out = q;
  if (mask & kInverse) out = inverse_rep(out);
  if (mask & kSwap) out = swap_dual(out);
  if (mask & kBackward) out = backward_dual(out);
  return out;
}

Quad canonicalize(const Quad& q) {
  Quad best = q;
  for (unsigned mask = 1; mask < 8; ++mask) {
    Quad img = apply_symmetry(q, mask);
    if (img < best) best = std::move(img);
  }
  return best;
}

}  // namespace locrep
