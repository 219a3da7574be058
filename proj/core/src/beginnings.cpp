#include "wiring/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wiring {

int Beginning::max_part() const {
  int m = 0;
  for (int p : parts) m = std::max(m, p);
  return m;
}

std::vector<MovePair> Beginning::expand() const {
  std::vector<MovePair> moves;
  moves.reserve(parts.size());
  int a = 1;
  for (int p : parts) {
    moves.push_back({a, a + p});
    a += p;
  }
  return moves;
}

namespace {

std::vector<std::vector<int>> dihedral_images(const std::vector<int>& parts) {
  const std::size_t m = parts.size();
  std::vector<std::vector<int>> images;
  images.reserve(2 * m);
  std::vector<int> cur = parts;
  for (std::size_t r = 0; r < m; ++r) {
    images.push_back(cur);
    std::vector<int> rev(cur.rbegin(), cur.rend());
    images.push_back(std::move(rev));
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
  }
  return images;
}

}  // namespace

std::vector<int> dihedral_representative(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("dihedral_representative: empty part sequence");
  auto images = dihedral_images(parts);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());

  const std::vector<int>* best = nullptr;
  for (const auto& im : images) {
    if (im.front() == 1 && im.back() == 1 && (!best || im > *best)) best = &im;
  }
  if (!best) {
    for (const auto& im : images) {
      if ((im.front() == 1 || im.back() == 1) && (!best || im > *best)) best = &im;
    }
  }
  if (!best) {
    for (const auto& im : images) {
      if (!best || im > *best) best = &im;
    }
  }
  return *best;
}

std::vector<Beginning> beginnings(int n) {
  if (n < 3) throw std::invalid_argument("beginnings: n must be at least 3");
  std::set<std::vector<int>> reps;
  // Compositions of n-1 via subset choice of n-2 separators.
  const int total = n - 1;
  const std::uint64_t masks = std::uint64_t{1} << (total - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int bit = 0; bit < total - 1; ++bit) {
      if (mask & (std::uint64_t{1} << bit)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    reps.insert(dihedral_representative(parts));
  }
  std::vector<Beginning> result;
  result.reserve(reps.size());
  for (auto& r : reps) result.push_back(Beginning{r});
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace wiring
