#include "locrep/local_rep.hpp"

#include "locrep/errors.hpp"
#include "locrep/quad.hpp"

namespace locrep {

LocalRep::LocalRep(std::vector<AutF2> cores) : cores_(std::move(cores)) {
  for (std::size_t i = 0; i + 1 < cores_.size(); ++i) {
    Quad q(cores_[i], cores_[i + 1]);
    if (!is_valid_quad(q)) {
      throw PreconditionError("cores " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                              " do not form a local representation: " + to_string(q));
    }
  }
  inverse_cores_.reserve(cores_.size());
  for (const auto& c : cores_) inverse_cores_.push_back(invert_aut(c));
}

LocalRep LocalRep::constant(const AutF2& core, int n) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  return LocalRep(std::vector<AutF2>(static_cast<std::size_t>(n - 1), core));
}

LocalRep LocalRep::artin(int n) { return constant(AutF2::parse("abA,a"), n); }

LocalRep LocalRep::restrict_to(int n) const {
  if (n < 1 || n > strands()) {
    throw StrandMismatch("cannot restrict a rep of B_" + std::to_string(strands()) + " to B_" +
                         std::to_string(n));
  }
  return LocalRep(std::vector<AutF2>(cores_.begin(), cores_.begin() + (n - 1)));
}

LocalRep LocalRep::extend(const AutF2& next) const {
  auto cores = cores_;
  cores.push_back(next);
  return LocalRep(std::move(cores));
}

std::string to_string(const LocalRep& rep) {
  if (rep.cores().empty()) return "B_1 (trivial)";
  std::string out;
  for (const auto& c : rep.cores()) {
    if (!out.empty()) out += ";";
    out += to_string(c);
  }
  return out;
}

}  // namespace locrep
