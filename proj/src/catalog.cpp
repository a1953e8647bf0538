#include "locrep/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "locrep/errors.hpp"

namespace locrep {

namespace {

// a^r b^e a^-r as a word; negative r conjugates the other way.
Word conj_power(int r, Letter b_letter) {
  Word ar = power(Word::generator(kA), r);
  return ar * Word{b_letter} * invert(ar);
}

Quad base_quad(Family f, int r) {
  const Word a{kA}, A{-kA}, b{kB}, B{-kB};
  auto w = [](std::string_view s) { return Word::parse(s); };
  switch (f) {
    case Family::T: return {a, b, a, b};
    case Family::TPrime: return {a, B, A, b};
    case Family::A1: return {conj_power(r, kB), a, conj_power(r, kB), a};
    case Family::A2: return {conj_power(r, kB), a, conj_power(r, -kB), A};
    case Family::A3: return {conj_power(r, -kB), A, conj_power(-r, -kB), A};
    case Family::B1: return {B, a, B, a};
    case Family::B2: return {B, a, b, A};
    case Family::C1: return {w("aBa"), a, w("aBa"), a};
    case Family::C2: return {w("aBa"), a, w("aba"), A};
    case Family::C3: return {w("aba"), A, w("aba"), A};
    case Family::D1: return {w("ABa"), w("bba"), w("ABa"), w("bba")};
    case Family::D2: return {w("abA"), w("bbA"), w("ABa"), w("bba")};
    case Family::D3: return {w("ABa"), w("bba"), w("Aba"), w("Abb")};
    case Family::D4: return {w("abA"), w("bbA"), w("Aba"), w("Abb")};
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

bool has_parameter(Family f) { return f == Family::A1 || f == Family::A2 || f == Family::A3; }

const char* tag(Family f) {
  switch (f) {
    case Family::T: return "T";
    case Family::TPrime: return "T'";
    case Family::A1: return "A1";
    case Family::A2: return "A2";
    case Family::A3: return "A3";
    case Family::B1: return "B1";
    case Family::B2: return "B2";
    case Family::C1: return "C1";
    case Family::C2: return "C2";
    case Family::C3: return "C3";
    case Family::D1: return "D1";
    case Family::D2: return "D2";
    case Family::D3: return "D3";
    case Family::D4: return "D4";
  }
  return "?";
}

Component component_of(Family f) {
  switch (f) {
    case Family::T: return Component::T;
    case Family::TPrime: return Component::TPrime;
    case Family::A1:
    case Family::A2:
    case Family::A3: return Component::A;
    case Family::B1:
    case Family::B2: return Component::B;
    case Family::C1:
    case Family::C2:
    case Family::C3: return Component::C;
    default: return Component::D;
  }
}

const char* tag(Component c) {
  switch (c) {
    case Component::T: return "T";
    case Component::TPrime: return "T'";
    case Component::A: return "A";
    case Component::B: return "B";
    case Component::C: return "C";
    case Component::D: return "D";
  }
  return "?";
}

std::string decoration_string(unsigned mask) {
  std::string s;
  if (mask & kInverse) s += "-";
  if (mask & kSwap) s += "s";
  if (mask & kBackward) s += "bw";
  return s;
}

std::string to_string(const FamilyId& id) {
  std::string s = tag(id.family);
  if (has_parameter(id.family)) s += ":r=" + std::to_string(id.r);
  if (id.decoration != 0) s += ":" + decoration_string(id.decoration);
  return s;
}

FamilyId FamilyId::parse(std::string_view text) {
  FamilyId id;
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  bool found = false;
  for (Family f : kAllFamilies) {
    if (head == tag(f)) {
      id.family = f;
      found = true;
    }
  }
  if (head == "Tp") {
    id.family = Family::TPrime;
    found = true;
  }
  if (!found) throw ParseError("unknown family tag \"" + std::string(head) + "\"");

  while (colon != std::string_view::npos) {
    std::size_t start = colon + 1;
    colon = text.find(':', start);
    std::string_view part = text.substr(start, colon == std::string_view::npos ? colon : colon - start);
    if (part.starts_with("r=")) {
      auto digits = part.substr(2);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id.r);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || id.r < 0) {
        throw ParseError("bad parameter in family id \"" + std::string(text) + "\"");
      }
      if (!has_parameter(id.family)) {
        throw ParseError("family " + std::string(tag(id.family)) + " takes no parameter");
      }
      continue;
    }
    std::size_t i = 0;
    while (i < part.size()) {
      unsigned bit = 0;
      std::size_t len = 1;
      if (part[i] == '-') {
        bit = kInverse;
      } else if (part[i] == 's') {
        bit = kSwap;
      } else if (part.substr(i, 2) == "bw") {
        bit = kBackward;
        len = 2;
      }
      if (bit == 0 || (id.decoration & bit)) {
        throw ParseError("bad decoration \"" + std::string(part) + "\"");
      }
      id.decoration |= bit;
      i += len;
    }
  }
  return id;
}

Quad catalog(const FamilyId& id) {
  if (id.r < 0) throw std::invalid_argument("family parameter r must be >= 0");
  if (id.r != 0 && !has_parameter(id.family)) {
    throw std::invalid_argument(std::string("family ") + tag(id.family) + " takes no parameter");
  }
  if (id.decoration > 7) throw std::invalid_argument("decoration mask out of range");
  return apply_symmetry(base_quad(id.family, id.r), id.decoration);
}

std::vector<std::pair<FamilyId, Quad>> catalog_entries(int max_r) {
  std::vector<std::pair<FamilyId, Quad>> out;
  for (Family f : kAllFamilies) {
    int top = has_parameter(f) ? max_r : 0;
    for (int r = 0; r <= top; ++r) {
      for (unsigned mask : kDecorationOrder) {
        FamilyId id{f, r, mask};
        out.emplace_back(id, catalog(id));
      }
    }
  }
  return out;
}

namespace {

int parameter_bound(std::size_t total_length) { return static_cast<int>(total_length) / 2 + 1; }

}  // namespace

std::vector<FamilyId> identify(const Quad& q) {
  std::vector<FamilyId> out;
  int max_r = parameter_bound(q.A.length() + q.B.length() + q.C.length() + q.D.length());
  for (const auto& [id, quad] : catalog_entries(max_r)) {
    if (quad == q) out.push_back(id);
  }
  return out;
}

std::vector<AutF2> outgoing_cores(const AutF2& core) {
  std::vector<AutF2> out;
  int max_r = parameter_bound(core.image_a().length() + core.image_b().length());
  for (const auto& [id, quad] : catalog_entries(max_r)) {
    if (quad.A == core.image_a() && quad.B == core.image_b()) out.emplace_back(quad.C, quad.D);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<AutF2> incoming_cores(const AutF2& core) {
  std::vector<AutF2> out;
  int max_r = parameter_bound(core.image_a().length() + core.image_b().length());
  for (const auto& [id, quad] : catalog_entries(max_r)) {
    if (quad.C == core.image_a() && quad.D == core.image_b()) out.emplace_back(quad.A, quad.B);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace locrep
