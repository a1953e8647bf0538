#include "locrep/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "locrep/errors.hpp"

namespace locrep {

namespace {

using i64 = std::int64_t;

i64 checked_sub_mul(i64 a, i64 q, i64 b) {
  i64 prod = 0;
  i64 out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw ArithmeticOverflow("Smith normal form entry overflowed 64-bit arithmetic");
  }
  return out;
}

i64 checked_add(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ArithmeticOverflow("Smith normal form entry overflowed 64-bit arithmetic");
  }
  return out;
}

i64 checked_abs(i64 a) {
  if (a == INT64_MIN) throw ArithmeticOverflow("Smith normal form entry overflowed 64-bit arithmetic");
  return a < 0 ? -a : a;
}

// Floor-free quotient used for pivot elimination (truncating is fine: any
// integer multiple keeps the row/column operation unimodular).
i64 quotient(i64 a, i64 b) { return a / b; }

}  // namespace

IntMatrix exponent_matrix(const GroupPresentation& p) {
  IntMatrix m;
  for (const auto& r : p.relators) {
    std::vector<i64> row(static_cast<std::size_t>(p.generators), 0);
    for (Letter l : r.letters()) row[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<i64> smith_diagonal(IntMatrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  std::vector<i64> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero |entry| in the trailing block
    std::size_t pr = rows, pc = cols;
    i64 best = 0;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        i64 v = checked_abs(m[i][j]);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (best == 0) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      i64 q = quotient(m[i][t], m[t][t]);
      for (std::size_t j = t; j < cols; ++j) m[i][j] = checked_sub_mul(m[i][j], q, m[t][j]);
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      i64 q = quotient(m[t][j], m[t][t]);
      for (std::size_t i = t; i < rows; ++i) m[i][j] = checked_sub_mul(m[i][j], q, m[i][t]);
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder exists; pick a new pivot

    // divisibility: fold an offending row into the pivot row and retry
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] = checked_add(m[t][k], m[i][k]);
          divides = false;
          break;
        }
      }
    }
    if (!divides) continue;
    diag.push_back(checked_abs(m[t][t]));
    ++t;
  }
  diag.resize(cols, 0);
  return diag;
}

std::vector<i64> abelianization(const GroupPresentation& p) {
  return smith_diagonal(exponent_matrix(p), static_cast<std::size_t>(p.generators));
}

std::vector<i64> invariant_factors(const std::vector<i64>& diagonal) {
  std::vector<i64> out;
  std::copy_if(diagonal.begin(), diagonal.end(), std::back_inserter(out), [](i64 d) { return d != 1; });
  return out;
}

std::string describe_abelian(const std::vector<i64>& diagonal) {
  std::string out;
  for (i64 d : invariant_factors(diagonal)) {
    if (!out.empty()) out += " + ";
    out += d == 0 ? "Z" : "Z/" + std::to_string(d);
  }
  return out.empty() ? "1" : out;
}

}  // namespace locrep
