#include "locrep/finite_group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "locrep/errors.hpp"

namespace locrep {

FiniteGroupTable::FiniteGroupTable(std::string name, int order, std::vector<int> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  if (order_ < 1) throw std::invalid_argument(name_ + ": group order must be positive");
  const auto n = static_cast<std::size_t>(order_);
  if (table_.size() != n * n) throw std::invalid_argument(name_ + ": table must have N*N entries");
  for (int v : table_) {
    if (v < 0 || v >= order_) throw std::invalid_argument(name_ + ": table entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < order_ && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument(name_ + ": no identity element");
  inverse_.assign(n, -1);
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h) {
      if (mul(g, h) == identity_ && mul(h, g) == identity_) {
        inverse_[static_cast<std::size_t>(g)] = h;
        break;
      }
    }
    if (inverse_[static_cast<std::size_t>(g)] < 0) {
      throw std::invalid_argument(name_ + ": element " + std::to_string(g) + " has no inverse");
    }
  }
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      for (int c = 0; c < order_; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw std::invalid_argument(name_ + ": multiplication is not associative");
        }
      }
    }
  }
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<int> t;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t.push_back((i + j) % n);
  }
  return FiniteGroupTable("Z" + std::to_string(n), n, std::move(t));
}

FiniteGroupTable FiniteGroupTable::symmetric(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("symmetric group degree must be 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<int> t;
  std::vector<int> prod(static_cast<std::size_t>(n));
  for (const auto& f : perms) {
    for (const auto& g : perms) {
      // apply f, then g
      for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = g[static_cast<std::size_t>(f[k])];
      t.push_back(index.at(prod));
    }
  }
  return FiniteGroupTable("S" + std::to_string(n), static_cast<int>(perms.size()), std::move(t));
}

FiniteGroupTable FiniteGroupTable::dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral group parameter must be positive");
  // element (s, k) = r^k s^s stored as s * n + k; r^k s * r^m = r^(k-m) s
  auto idx = [n](int s, int k) { return s * n + ((k % n) + n) % n; };
  std::vector<int> t;
  for (int x = 0; x < 2 * n; ++x) {
    for (int y = 0; y < 2 * n; ++y) {
      int s1 = x / n, k1 = x % n, s2 = y / n, k2 = y % n;
      t.push_back(idx(s1 ^ s2, s1 ? k1 - k2 : k1 + k2));
    }
  }
  return FiniteGroupTable("D" + std::to_string(n), 2 * n, std::move(t));
}

namespace {

std::optional<int> suffix_number(std::string_view name) {
  int v = 0;
  auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return v;
}

}  // namespace

FiniteGroupTable FiniteGroupTable::builtin(std::string_view name) {
  if (name.size() >= 2) {
    if (auto k = suffix_number(name)) {
      if (name[0] == 'Z' && *k >= 2 && *k <= 9) return cyclic(*k);
      if (name[0] == 'S' && *k >= 3 && *k <= 4) return symmetric(*k);
      if (name[0] == 'D' && *k >= 3 && *k <= 8) return dihedral(*k);
    }
  }
  throw std::invalid_argument("unknown built-in group \"" + std::string(name) + "\"");
}

FiniteGroupTable FiniteGroupTable::parse(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  long long order = 0;
  if (!(in >> order) || order < 1 || order > 4096) {
    throw ParseError(name + ": expected a group order in 1..4096");
  }
  std::vector<int> t;
  long long v = 0;
  while (in >> v) t.push_back(static_cast<int>(v));
  if (!in.eof()) throw ParseError(name + ": non-integer token in group table");
  if (t.size() != static_cast<std::size_t>(order * order)) {
    throw ParseError(name + ": expected " + std::to_string(order * order) + " table entries, got " +
                     std::to_string(t.size()));
  }
  return FiniteGroupTable(std::move(name), static_cast<int>(order), std::move(t));
}

FiniteGroupTable FiniteGroupTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group table file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  return parse(buf.str(), name);
}

FiniteGroupTable FiniteGroupTable::resolve(std::string_view spec) {
  try {
    return builtin(spec);
  } catch (const std::invalid_argument&) {
    if (spec.find('/') == std::string_view::npos && spec.find('.') == std::string_view::npos) throw;
  }
  return from_file(std::string(spec));
}

std::vector<FiniteGroupTable> default_groups() {
  std::vector<FiniteGroupTable> out;
  for (int k = 2; k <= 6; ++k) out.push_back(FiniteGroupTable::cyclic(k));
  out.push_back(FiniteGroupTable::symmetric(3));
  out.push_back(FiniteGroupTable::symmetric(4));
  out.push_back(FiniteGroupTable::dihedral(4));
  out.push_back(FiniteGroupTable::dihedral(5));
  return out;
}

}  // namespace locrep
