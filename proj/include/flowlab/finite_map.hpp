#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace flowlab {

// Total map on a finite label set {0..n-1}, stored as a function table.
struct FiniteMap {
  std::vector<int> table;

  FiniteMap() = default;
  explicit FiniteMap(std::vector<int> t) : table(std::move(t)) {
    for (int v : table)
      if (v < 0 || v >= static_cast<int>(table.size()))
        throw std::invalid_argument("FiniteMap: value out of range");
  }

  static FiniteMap identity(int n) {
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = i;
    return FiniteMap(std::move(t));
  }

  static FiniteMap constant(int n, int value) {
    return FiniteMap(std::vector<int>(n, value));
  }

  int size() const { return static_cast<int>(table.size()); }
  int operator()(int x) const { return table[x]; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (table[i] != i) return false;
    return true;
  }

  bool is_constant() const {
    for (int i = 1; i < size(); ++i)
      if (table[i] != table[0]) return false;
    return true;
  }

  bool operator==(const FiniteMap& o) const = default;
};

// (after ∘ before): apply `before` first
inline FiniteMap compose(const FiniteMap& after, const FiniteMap& before) {
  if (after.size() != before.size())
    throw std::invalid_argument("compose: size mismatch");
  std::vector<int> t(before.table.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = after.table[before.table[i]];
  return FiniteMap(std::move(t));
}

}  // namespace flowlab
