#include "mondepth/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "mondepth/linalg.hpp"

namespace mondepth {

SimplicialComplex SimplicialComplex::make(int nvertices,
                                          std::vector<std::uint64_t> faces) {
  if (nvertices < 0 || nvertices > 62)
    throw std::invalid_argument("vertex count out of range");
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (std::uint64_t f : faces)
    if (nvertices < 62 && (f >> nvertices) != 0)
      throw std::invalid_argument("face uses a vertex outside the complex");
  return SimplicialComplex{nvertices, std::move(faces)};
}

std::vector<long> reduced_homology_dims(const SimplicialComplex& c, const Field& f) {
  if (c.is_void()) return {};
  // Bucket faces by dimension; level k holds faces with k vertices (dim k-1).
  int maxpop = 0;
  for (std::uint64_t face : c.faces)
    maxpop = std::max(maxpop, std::popcount(face));
  std::vector<std::vector<std::uint64_t>> level(maxpop + 1);
  for (std::uint64_t face : c.faces) level[std::popcount(face)].push_back(face);
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index(maxpop + 1);
  for (int k = 0; k <= maxpop; ++k)
    for (std::size_t i = 0; i < level[k].size(); ++i) index[k][level[k][i]] = i;

  // rank of the boundary map from k-vertex faces to (k-1)-vertex faces
  std::vector<int> bd_rank(maxpop + 2, 0);
  for (int k = 1; k <= maxpop; ++k) {
    if (level[k].empty() || level[k - 1].empty()) continue;
    IntMat m(level[k - 1].size(), std::vector<Int>(level[k].size(), 0));
    for (std::size_t j = 0; j < level[k].size(); ++j) {
      std::uint64_t face = level[k][j];
      int sign = 1;
      for (std::uint64_t bits = face; bits;) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        std::uint64_t sub = face & ~(std::uint64_t(1) << v);
        auto it = index[k - 1].find(sub);
        if (it == index[k - 1].end())
          throw std::invalid_argument("complex is not downward closed");
        m[it->second][j] = sign;
        sign = -sign;
      }
    }
    bd_rank[k] = rank_over(m, f);
  }

  std::vector<long> dims(maxpop + 1, 0);
  for (int k = 0; k <= maxpop; ++k)
    dims[k] = static_cast<long>(level[k].size()) - bd_rank[k] - bd_rank[k + 1];
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
  return dims;
}

}
