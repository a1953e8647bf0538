#include "locrep/json_io.hpp"

#include "locrep/errors.hpp"

namespace locrep {

using nlohmann::json;

namespace {

std::string word_text(const Word& w, int generators) {
  return to_string(w, generators <= 2 ? WordStyle::Compact : WordStyle::Indexed);
}

json equation_json(const EquationCheck& e) {
  return {{"holds", e.holds()},
          {"lhs", to_string(e.lhs, WordStyle::Compact)},
          {"rhs", to_string(e.rhs, WordStyle::Compact)}};
}

}  // namespace

json to_json(const GroupPresentation& p) {
  json rels = json::array();
  for (const auto& r : p.relators) rels.push_back(word_text(r, p.generators));
  return {{"generators", p.generators}, {"relators", rels}};
}

GroupPresentation presentation_from_json(const json& j) {
  std::vector<Word> rels;
  for (const auto& r : j.at("relators")) rels.push_back(Word::parse(r.get<std::string>()));
  return GroupPresentation(j.at("generators").get<int>(), std::move(rels));
}

json to_json(const Fingerprint& f) {
  json counts = json::object();
  for (const auto& [name, n] : f.hom_counts) counts[name] = n;
  return {{"abelianization", f.abelianization}, {"hom_counts", counts}};
}

Fingerprint fingerprint_from_json(const json& j) {
  Fingerprint f;
  f.abelianization = j.at("abelianization").get<std::vector<std::int64_t>>();
  for (const auto& [name, n] : j.at("hom_counts").items()) f.hom_counts[name] = n.get<std::uint64_t>();
  return f;
}

json invariant_json(const GroupPresentation& p, const GroupPresentation& simplified,
                    const Fingerprint& f) {
  json out = to_json(p);
  json fp = to_json(f);
  out["abelianization"] = fp["abelianization"];
  out["hom_counts"] = fp["hom_counts"];
  out["simplified"] = to_json(simplified);
  return out;
}

json classify_json(int max_len, const std::set<Quad>& classes) {
  json arr = json::array();
  for (const auto& q : classes) {
    json ids = json::array();
    for (const auto& id : identify(q)) ids.push_back(to_string(id));
    arr.push_back({{"quad", to_string(q)}, {"families", ids}});
  }
  return {{"max_len", max_len}, {"count", classes.size()}, {"classes", arr}};
}

std::set<Quad> classes_from_json(const json& j) {
  std::set<Quad> out;
  for (const auto& c : j.at("classes")) out.insert(Quad::parse(c.at("quad").get<std::string>()));
  return out;
}

json verify_json(const Quad& q, const QuadReport& r, const std::vector<FamilyId>& ids) {
  json fams = json::array();
  for (const auto& id : ids) fams.push_back(to_string(id));
  return {{"quad", to_string(q)},
          {"valid", r.valid()},
          {"tau_basis", r.tau_is_basis},
          {"kappa_basis", r.kappa_is_basis},
          {"equations",
           {{"T", equation_json(r.top)}, {"M", equation_json(r.middle)}, {"B", equation_json(r.bottom)}}},
          {"families", fams}};
}

}  // namespace locrep
