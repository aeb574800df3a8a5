#include "reebforge/poset.hpp"

#include <algorithm>
#include <queue>

#include "reebforge/error.hpp"

namespace reebforge {

Poset::Poset(std::size_t size, std::vector<Relation> relations) : below_(size) {
  std::vector<std::vector<std::size_t>> lower(size);
  std::vector<std::size_t> indegree(size, 0);
  std::vector<std::vector<std::size_t>> upper(size);
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  for (auto [lo, hi] : relations) {
    if (lo >= size || hi >= size) throw Error(ErrorKind::InvalidParams, "poset element out of range");
    if (lo == hi) throw Error(ErrorKind::InvalidParams, "reflexive pair in strict order");
    lower[hi].push_back(lo);
    upper[lo].push_back(hi);
    ++indegree[hi];
  }

  // Kahn's algorithm: processing bottom-up lets each down-set be built from
  // already finished ones.
  std::queue<std::size_t> ready;
  for (std::size_t x = 0; x < size; ++x) {
    if (indegree[x] == 0) ready.push(x);
  }
  std::size_t done = 0;
  while (!ready.empty()) {
    const std::size_t x = ready.front();
    ready.pop();
    ++done;
    auto& down = below_[x];
    for (std::size_t y : lower[x]) {
      down.push_back(y);
      down.insert(down.end(), below_[y].begin(), below_[y].end());
    }
    std::sort(down.begin(), down.end());
    down.erase(std::unique(down.begin(), down.end()), down.end());
    for (std::size_t z : upper[x]) {
      if (--indegree[z] == 0) ready.push(z);
    }
  }
  if (done != size) throw Error(ErrorKind::InvalidParams, "relation contains a cycle");

  // (lo, hi) is a cover iff lo is not below any other lower neighbour of hi.
  for (std::size_t hi = 0; hi < size; ++hi) {
    for (std::size_t lo : lower[hi]) {
      bool implied = false;
      for (std::size_t mid : lower[hi]) {
        if (mid != lo && std::binary_search(below_[mid].begin(), below_[mid].end(), lo)) {
          implied = true;
          break;
        }
      }
      if (!implied) covers_.emplace_back(lo, hi);
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

bool Poset::less(std::size_t a, std::size_t b) const {
  return std::binary_search(below_[b].begin(), below_[b].end(), a);
}

SimplicialComplex Poset::order_complex() const {
  std::vector<Simplex> chains;
  Simplex chain;
  auto extend = [&](auto&& self, std::size_t bottom) -> void {
    chains.push_back(chain);
    for (std::size_t y : below_[bottom]) {
      chain.push_back(static_cast<Vertex>(y));
      self(self, y);
      chain.pop_back();
    }
  };
  for (std::size_t top = 0; top < size(); ++top) {
    chain.assign(1, static_cast<Vertex>(top));
    extend(extend, top);
  }
  return SimplicialComplex::validate(size(), std::move(chains), FaceClosure::Require);
}

}  // namespace reebforge
