#include "locrep/stabilization.hpp"

#include "locrep/abelian.hpp"
#include "locrep/gamma.hpp"
#include "locrep/tietze.hpp"

namespace locrep {

const char* to_string(S1Status s) {
  switch (s) {
    case S1Status::Holds: return "holds";
    case S1Status::HoldsUpToInversion: return "holds-up-to-inversion";
    case S1Status::Fails: return "fails";
    case S1Status::Unknown: return "unknown";
  }
  return "?";
}

namespace {

S1Report examine(const Word& b_image) {
  Word relator = b_image * invert(Word::generator(kB));
  GroupPresentation p(2, {relator});
  S1Report out;
  std::string rel = to_string(relator, WordStyle::Compact);
  if (relator.empty()) {
    out.status = S1Status::Fails;
    out.witness = "relator empty, quotient free of rank 2";
    return out;
  }
  auto diag = invariant_factors(abelianization(p));
  if (diag != std::vector<std::int64_t>{0}) {
    out.status = S1Status::Fails;
    out.witness = "relator " + rel + ", abelianization " + describe_abelian(diag) + " is not Z";
    return out;
  }
  GroupPresentation s = tietze_simplify(p);
  if (s.generators != 1 || !s.relators.empty()) {
    out.status = S1Status::Unknown;
    out.witness = "relator " + rel + ", simplifies only to " + to_string(s);
    return out;
  }
  // The quotient is Z, so a = b^{+-1} can be read off the abelian relation.
  int ea = exponent_sum(relator, kA);
  int eb = exponent_sum(relator, kB);
  if (ea == -eb && (ea == 1 || ea == -1)) {
    out.status = S1Status::Holds;
    out.witness = "relator " + rel + ", quotient Z with a = b";
  } else if (ea == eb && (ea == 1 || ea == -1)) {
    out.status = S1Status::HoldsUpToInversion;
    out.witness = "relator " + rel + ", quotient Z with a = b^-1";
  } else {
    out.status = S1Status::Fails;
    out.witness = "relator " + rel + ", quotient Z but a is not b^{+-1}";
  }
  return out;
}

}  // namespace

S1Report check_S1(const AutF2& core) {
  S1Report fwd = examine(core.image_b());
  S1Report inv = examine(invert_aut(core).image_b());
  S1Report out;
  auto is = [&](S1Status s) { return fwd.status == s || inv.status == s; };
  if (is(S1Status::Fails)) {
    out.status = S1Status::Fails;
  } else if (fwd.status == S1Status::Holds && inv.status == S1Status::Holds) {
    out.status = S1Status::Holds;
  } else if (is(S1Status::HoldsUpToInversion) && !is(S1Status::Unknown)) {
    out.status = S1Status::HoldsUpToInversion;
  } else {
    out.status = S1Status::Unknown;
  }
  out.witness = "core: " + fwd.witness + "; inverse core: " + inv.witness;
  return out;
}

bool StabilizationReport::ok() const {
  if (!extends) return false;
  for (const auto& r : cores) {
    if (r.status != S1Status::Holds && r.status != S1Status::HoldsUpToInversion) return false;
  }
  return true;
}

bool StabilizationReport::strict() const {
  if (!extends) return false;
  for (const auto& r : cores) {
    if (r.status != S1Status::Holds) return false;
  }
  return true;
}

StabilizationReport check_stabilization(const LocalRep& rep) {
  StabilizationReport out;
  for (const auto& c : rep.cores()) out.cores.push_back(check_S1(c));
  out.extends = can_extend(rep);
  return out;
}

}  // namespace locrep
