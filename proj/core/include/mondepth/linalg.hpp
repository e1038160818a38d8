#ifndef MONDEPTH_LINALG_HPP
#define MONDEPTH_LINALG_HPP

#include <optional>
#include <vector>

#include "mondepth/monomial.hpp"

namespace mondepth {

using IntMat = std::vector<std::vector<Int>>;

/// Rank over the rationals, fraction-free Gaussian elimination (Bareiss).
int rank_rational(IntMat a);

/// Rank over F_p of the integer matrix reduced mod p.
int rank_mod_p(const IntMat& a, unsigned long p);

int rank_over(const IntMat& a, const Field& f);

/// Row-style Hermite normal form of the row span: row echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot). Returns the
/// nonzero rows (a canonical lattice basis).
IntMat hermite_normal_form(IntMat a);

/// Integer coordinates of v over an HNF basis, or nullopt when v is outside
/// the spanned lattice.
std::optional<std::vector<Int>> hnf_solve(const IntMat& hnf_basis,
                                          std::vector<Int> v);

/// Integer basis of the rational kernel {x : a x = 0} (column convention);
/// vectors are primitive. ncols must be supplied so the m = 0 case works.
IntMat kernel_basis_rational(IntMat a, std::size_t ncols);

/// HNF together with the unimodular row transform: u * a = h, with the zero
/// rows of h (and their transform rows) kept at the bottom.
struct HnfTransform {
  IntMat h;  // m x n, echelon rows first
  IntMat u;  // m x m unimodular
  int rank = 0;
};
HnfTransform hnf_with_transform(IntMat a);

/// Basis of the left integer kernel {y in Z^m : y a = 0}.
IntMat integer_left_kernel(const IntMat& a);

/// Divide by the gcd of the entries and orient so the first nonzero entry is
/// positive. Zero vectors pass through.
void make_primitive(std::vector<Int>& v);

}

#endif
