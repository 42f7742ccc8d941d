#include "gres/simplex.hpp"

#include "gres/errors.hpp"

#include <algorithm>

namespace gres::simplex {

bool Monotone::is_identity() const {
  if (source() != target) return false;
  for (int i = 0; i <= target; ++i)
    if (values[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

bool Monotone::is_surjective() const {
  if (values.empty()) return target < 0;
  if (values.front() != 0 || values.back() != target) return false;
  return std::adjacent_find(values.begin(), values.end(), [](int a, int b) { return b > a + 1; }) == values.end();
}

bool Monotone::is_injective() const {
  return std::adjacent_find(values.begin(), values.end(), [](int a, int b) { return a == b; }) == values.end();
}

bool Monotone::operator<(const Monotone& other) const {
  if (target != other.target) return target < other.target;
  return values < other.values;
}

Monotone identity(int n) {
  Monotone m{std::vector<int>(static_cast<std::size_t>(n + 1)), n};
  for (int i = 0; i <= n; ++i) m.values[static_cast<std::size_t>(i)] = i;
  return m;
}

Monotone coface(int n, int i) {
  if (i < 0 || i > n) throw DomainError("coface index out of range");
  Monotone m{{}, n};
  for (int k = 0; k < n; ++k) m.values.push_back(k < i ? k : k + 1);
  return m;
}

Monotone codegeneracy(int n, int j) {
  if (j < 0 || j > n) throw DomainError("codegeneracy index out of range");
  Monotone m{{}, n};
  for (int k = 0; k <= n + 1; ++k) m.values.push_back(k <= j ? k : k - 1);
  return m;
}

Monotone compose(const Monotone& a, const Monotone& b) {
  if (b.target != a.source()) throw DomainError("monotone maps are not composable");
  Monotone m{{}, a.target};
  for (int v : b.values) m.values.push_back(a.values[static_cast<std::size_t>(v)]);
  return m;
}

std::vector<Monotone> surjections(int n) {
  // A surjection [n] -> [k] is determined by its set of jump positions in 1..n.
  std::vector<Monotone> out;
  for (int k = n; k >= 0; --k) {
    std::vector<bool> jumps(static_cast<std::size_t>(n), false);
    std::fill(jumps.begin(), jumps.begin() + k, true);
    std::vector<Monotone> level;
    do {
      Monotone m{{0}, k};
      for (int p = 0; p < n; ++p) m.values.push_back(m.values.back() + (jumps[static_cast<std::size_t>(p)] ? 1 : 0));
      level.push_back(std::move(m));
    } while (std::prev_permutation(jumps.begin(), jumps.end()));
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Monotone> proper_injections(int n) {
  std::vector<Monotone> out;
  for (int k = 0; k < n; ++k) {
    std::vector<bool> pick(static_cast<std::size_t>(n + 1), false);
    std::fill(pick.begin(), pick.begin() + k + 1, true);
    do {
      Monotone m{{}, n};
      for (int v = 0; v <= n; ++v)
        if (pick[static_cast<std::size_t>(v)]) m.values.push_back(v);
      out.push_back(std::move(m));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

EpiMono factor(const Monotone& theta) {
  EpiMono r{{{}, -1}, {{}, theta.target}};
  for (int v : theta.values) {
    if (r.mono.values.empty() || r.mono.values.back() != v) r.mono.values.push_back(v);
    r.epi.values.push_back(static_cast<int>(r.mono.values.size()) - 1);
  }
  r.epi.target = static_cast<int>(r.mono.values.size()) - 1;
  return r;
}

std::vector<Word> decompose(const Monotone& theta) {
  std::vector<Word> words;
  EpiMono f = factor(theta);
  // Peel codegeneracies off the epi: merge the first repeated pair each time.
  std::vector<int> e = f.epi.values;
  for (;;) {
    std::size_t j = 0;
    while (j + 1 < e.size() && e[j] != e[j + 1]) ++j;
    if (j + 1 >= e.size()) break;
    words.push_back({Word::Kind::codegeneracy, static_cast<int>(e.size()) - 2, static_cast<int>(j)});
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  }
  // Then the mono: insert missing values from the smallest up.
  std::vector<int> image = f.mono.values;
  int level = static_cast<int>(image.size()) - 1;
  for (int v = 0; v <= theta.target; ++v) {
    if (std::binary_search(image.begin(), image.end(), v)) continue;
    ++level;
    words.push_back({Word::Kind::coface, level, v});
  }
  return words;
}

}  // namespace gres::simplex
