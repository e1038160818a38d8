#ifndef MONDEPTH_SIMPLICIAL_HPP
#define MONDEPTH_SIMPLICIAL_HPP

#include <cstdint>
#include <vector>

#include "mondepth/monomial.hpp"

namespace mondepth {

/// Finite simplicial complex on vertices 0..nvertices-1 (nvertices <= 62),
/// faces stored as sorted bitmasks including the empty face. Downward closure
/// is the caller's responsibility. The void complex (no faces at all) is
/// distinct from the complex whose only face is empty.
struct SimplicialComplex {
  int nvertices = 0;
  std::vector<std::uint64_t> faces;  // sorted, deduplicated

  bool is_void() const { return faces.empty(); }
  static SimplicialComplex make(int nvertices, std::vector<std::uint64_t> faces);
};

/// Reduced homology dimensions over the field: entry i is dim H~_{i-1}, so
/// index 0 reports H~_{-1} (one-dimensional exactly for the empty-face-only
/// complex). Void complex yields an empty vector.
std::vector<long> reduced_homology_dims(const SimplicialComplex& c, const Field& f);

}

#endif
