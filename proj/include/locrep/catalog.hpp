#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locrep/autf2.hpp"
#include "locrep/quad.hpp"

namespace locrep {

// The fourteen families of the classification of local Aut(F_3) braid
// representations.  A1..A3 carry a parameter r >= 0.
enum class Family { T, TPrime, A1, A2, A3, B1, B2, C1, C2, C3, D1, D2, D3, D4 };

inline constexpr std::array<Family, 14> kAllFamilies = {
    Family::T,  Family::TPrime, Family::A1, Family::A2, Family::A3, Family::B1, Family::B2,
    Family::C1, Family::C2,     Family::C3, Family::D1, Family::D2, Family::D3, Family::D4};

// Symmetry masks in the order used when several labels describe one quad:
// fewer decorations first.
inline constexpr std::array<unsigned, 8> kDecorationOrder = {0, 1, 2, 4, 3, 5, 6, 7};

bool has_parameter(Family f);
const char* tag(Family f);

// Connected components of the graph of cores.
enum class Component { T, TPrime, A, B, C, D };
Component component_of(Family f);
const char* tag(Component c);

struct FamilyId {
  Family family = Family::T;
  int r = 0;
  unsigned decoration = 0;  // Symmetry mask

  // "A1:r=2", "D2:-s", "A2:r=1:-sbw".
  static FamilyId parse(std::string_view text);

  bool operator==(const FamilyId&) const = default;
};

std::string to_string(const FamilyId& id);

// Decoration suffix "-", "s", "bw" in this order; empty for none.
std::string decoration_string(unsigned mask);

// The quad listed for `id.family` (with parameter r), with the decoration's
// symmetries applied.  Throws std::invalid_argument for r < 0, or r != 0 on a
// family without parameter.
Quad catalog(const FamilyId& id);

// Every decorated family id (r bounded by the word lengths) whose catalog
// quad equals q, in family order and then kDecorationOrder.
std::vector<FamilyId> identify(const Quad& q);

// Cores kappa such that (core, kappa) is a valid quad, sorted.  Uses the
// catalog, which is complete by the classification.
std::vector<AutF2> outgoing_cores(const AutF2& core);

// Cores tau such that (tau, core) is a valid quad, sorted.
std::vector<AutF2> incoming_cores(const AutF2& core);

// All undecorated and decorated quads of every family with 0 <= r <= max_r.
std::vector<std::pair<FamilyId, Quad>> catalog_entries(int max_r);

}  // namespace locrep
