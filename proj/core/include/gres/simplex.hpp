#pragma once

#include <cstddef>
#include <vector>

namespace gres::simplex {

/// A monotone map [m] -> [n], stored as its list of values.
struct Monotone {
  std::vector<int> values;
  int target = 0;

  int source() const { return static_cast<int>(values.size()) - 1; }
  bool is_identity() const;
  bool is_surjective() const;
  bool is_injective() const;
  bool operator==(const Monotone& other) const = default;
  bool operator<(const Monotone& other) const;
};

Monotone identity(int n);
/// delta^i: [n-1] -> [n], the injection missing i.
Monotone coface(int n, int i);
/// sigma^j: [n+1] -> [n], the surjection hitting j twice.
Monotone codegeneracy(int n, int j);
/// a after b.
Monotone compose(const Monotone& a, const Monotone& b);

/// All surjections [n] -> [k] for 0 <= k <= n, ordered by k descending, then lexicographically.
std::vector<Monotone> surjections(int n);
/// All injections [k] -> [n] with k < n.
std::vector<Monotone> proper_injections(int n);

/// theta = mono after epi.
struct EpiMono {
  Monotone epi;
  Monotone mono;
};
EpiMono factor(const Monotone& theta);

/// Generator words: epi = sigma^{j_1} ... applied first; mono = delta^{i}'s applied after.
struct Word {
  enum class Kind { coface, codegeneracy };
  Kind kind;
  int level;  // coface(level, i): [level-1] -> [level]; codegeneracy(level, j): [level+1] -> [level]
  int index;
};
/// Generators in the order they are applied (first to last).
std::vector<Word> decompose(const Monotone& theta);

}  // namespace gres::simplex
