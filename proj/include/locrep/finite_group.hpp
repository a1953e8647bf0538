#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace locrep {

// A finite group given by its Cayley table on elements 0..order-1.
class FiniteGroupTable {
 public:
  // Row-major table, mul[i * order + j] = i * j.  Validates closure,
  // associativity, identity and inverses; throws std::invalid_argument.
  FiniteGroupTable(std::string name, int order, std::vector<int> table);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int i, int j) const { return table_[static_cast<std::size_t>(i * order_ + j)]; }
  int inverse(int i) const { return inverse_[static_cast<std::size_t>(i)]; }

  static FiniteGroupTable cyclic(int n);
  static FiniteGroupTable symmetric(int n);
  // Symmetries of the regular n-gon, order 2n.
  static FiniteGroupTable dihedral(int n);

  // "Z2".."Z9", "S3", "S4", "D3".."D8".
  static FiniteGroupTable builtin(std::string_view name);
  // N, then N*N 0-based entries; whitespace separated.
  static FiniteGroupTable parse(std::string_view text, std::string name);
  static FiniteGroupTable from_file(const std::string& path);
  // A built-in name, or otherwise a path to a table file.
  static FiniteGroupTable resolve(std::string_view spec);

 private:
  std::string name_;
  int order_;
  std::vector<int> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

// Z2, Z3, Z4, Z5, Z6, S3, S4, D4, D5.
std::vector<FiniteGroupTable> default_groups();

}  // namespace locrep
