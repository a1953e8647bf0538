#include "locrep/homs.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "locrep/errors.hpp"

namespace locrep {

namespace {

struct CompiledRelator {
  std::vector<int> gens;      // 0-based generator index per letter
  std::vector<bool> inverse;  // letter is an inverse
};

class Counter {
 public:
  Counter(const GroupPresentation& p, const FiniteGroupTable& g)
      : g_(g), n_(static_cast<std::size_t>(p.generators)), by_depth_(n_) {
    for (const auto& r : p.relators) {
      if (r.empty()) continue;
      CompiledRelator c;
      for (Letter l : r.letters()) {
        c.gens.push_back(std::abs(l) - 1);
        c.inverse.push_back(l < 0);
      }
      by_depth_[static_cast<std::size_t>(r.max_generator() - 1)].push_back(std::move(c));
    }
  }

  std::size_t generators() const { return n_; }

  // Count completions with x_1 fixed to `first`.
  std::uint64_t count_from(int first) const {
    std::vector<int> assign(n_, 0);
    assign[0] = first;
    return descend(assign, 0);
  }

 private:
  bool satisfied(const std::vector<int>& assign, std::size_t depth) const {
    for (const auto& rel : by_depth_[depth]) {
      int acc = g_.identity();
      for (std::size_t k = 0; k < rel.gens.size(); ++k) {
        int x = assign[static_cast<std::size_t>(rel.gens[k])];
        acc = g_.mul(acc, rel.inverse[k] ? g_.inverse(x) : x);
      }
      if (acc != g_.identity()) return false;
    }
    return true;
  }

  std::uint64_t descend(std::vector<int>& assign, std::size_t depth) const {
    if (!satisfied(assign, depth)) return 0;
    if (depth + 1 == n_) return 1;
    std::uint64_t total = 0;
    for (int v = 0; v < g_.order(); ++v) {
      assign[depth + 1] = v;
      total += descend(assign, depth + 1);
    }
    return total;
  }

  const FiniteGroupTable& g_;
  std::size_t n_;
  std::vector<std::vector<CompiledRelator>> by_depth_;
};

}  // namespace

std::uint64_t count_homs(const GroupPresentation& p, const FiniteGroupTable& g, std::uint64_t budget,
                         int jobs) {
  std::uint64_t candidates = 1;
  for (int i = 0; i < p.generators; ++i) {
    if (__builtin_mul_overflow(candidates, static_cast<std::uint64_t>(g.order()), &candidates) ||
        candidates > budget) {
      throw BudgetExceeded("hom count into " + g.name() + " needs " + std::to_string(g.order()) +
                           "^" + std::to_string(p.generators) + " candidate tuples, budget is " +
                           std::to_string(budget));
    }
  }
  if (p.generators == 0) return 1;

  Counter counter(p, g);
  if (jobs <= 1) {
    std::uint64_t total = 0;
    for (int v = 0; v < g.order(); ++v) total += counter.count_from(v);
    return total;
  }
  std::atomic<int> next{0};
  std::atomic<std::uint64_t> total{0};
  {
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (int v = next++; v < g.order(); v = next++) total += counter.count_from(v);
      });
    }
  }
  return total.load();
}

}  // namespace locrep
