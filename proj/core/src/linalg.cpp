#include "mondepth/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace mondepth {

int rank_rational(IntMat a) {
  if (a.empty()) return 0;
  const std::size_t m = a.size(), n = a[0].size();
  Int prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[row]);
    // Bareiss update: a[i][j] := (a[row][col]*a[i][j] - a[i][col]*a[row][j]) / prev
    for (std::size_t i = row + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        Int t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return static_cast<int>(row);
}

int rank_mod_p(const IntMat& a, unsigned long p) {
  if (a.empty()) return 0;
  const std::size_t m = a.size(), n = a[0].size();
  std::vector<std::vector<unsigned long>> r(m, std::vector<unsigned long>(n));
  mpz_class pz(p);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class t = a[i][j] % pz;
      if (t < 0) t += pz;
      r[i][j] = t.get_ui();
    }
  auto inv = [p](unsigned long x) {
    // extended Euclid; p prime, x != 0 mod p
    long long t0 = 0, t1 = 1, r0 = static_cast<long long>(p), r1 = static_cast<long long>(x);
    while (r1 != 0) {
      long long q = r0 / r1;
      long long tmp = r0 - q * r1; r0 = r1; r1 = tmp;
      tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    long long res = t0 % static_cast<long long>(p);
    if (res < 0) res += static_cast<long long>(p);
    return static_cast<unsigned long>(res);
  };
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && r[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(r[piv], r[row]);
    unsigned long ipiv = inv(r[row][col]);
    for (std::size_t i = row + 1; i < m; ++i) {
      if (r[i][col] == 0) continue;
      // r[i] -= (r[i][col]/pivot) * r[row], all mod p (128-bit products)
      unsigned long f = static_cast<unsigned long>(
          (static_cast<unsigned __int128>(r[i][col]) * ipiv) % p);
      for (std::size_t j = col; j < n; ++j) {
        unsigned __int128 sub = static_cast<unsigned __int128>(f) * r[row][j] % p;
        unsigned long v = r[i][j];
        r[i][j] = (v + p - static_cast<unsigned long>(sub)) % p;
      }
    }
    ++row;
  }
  return static_cast<int>(row);
}

int rank_over(const IntMat& a, const Field& f) {
  return f.is_rationals() ? rank_rational(a) : rank_mod_p(a, f.p);
}

IntMat hermite_normal_form(IntMat a) {
  HnfTransform t = hnf_with_transform(std::move(a));
  t.h.resize(t.rank);
  return std::move(t.h);
}

HnfTransform hnf_with_transform(IntMat a) {
  HnfTransform t;
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  t.u.assign(m, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) t.u[i][i] = 1;

  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  auto subtract = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < n; ++j) a[dst][j] -= q * a[src][j];
    for (std::size_t j = 0; j < m; ++j) t.u[dst][j] -= q * t.u[src][j];
  };
  for (std::size_t col = 0; col < n && row < m; ++col) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i)
        if (a[i][col] != 0 &&
            (best == m || cmp(abs(a[i][col]), abs(a[best][col])) < 0))
          best = i;
      if (best == m) break;
      std::swap(a[best], a[row]);
      std::swap(t.u[best], t.u[row]);
      bool more = false;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (a[i][col] == 0) continue;
        subtract(i, row, a[i][col] / a[row][col]);
        if (a[i][col] != 0) more = true;
      }
      if (!more) break;
    }
    if (row < m && a[row][col] != 0) {
      if (a[row][col] < 0) {
        for (std::size_t j = 0; j < n; ++j) a[row][j] = -a[row][j];
        for (std::size_t j = 0; j < m; ++j) t.u[row][j] = -t.u[row][j];
      }
      pivot_col.push_back(col);
      ++row;
    }
  }
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t k = i + 1; k < row; ++k) {
      std::size_t c = pivot_col[k];
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[k][c].get_mpz_t());
      if (q != 0) subtract(i, k, q);
    }
  t.h = std::move(a);
  t.rank = static_cast<int>(row);
  return t;
}

IntMat integer_left_kernel(const IntMat& a) {
  HnfTransform t = hnf_with_transform(a);
  IntMat kernel;
  for (std::size_t i = t.rank; i < t.u.size(); ++i) kernel.push_back(t.u[i]);
  return kernel;
}

std::optional<std::vector<Int>> hnf_solve(const IntMat& hnf_basis,
                                          std::vector<Int> v) {
  std::vector<Int> coeffs;
  coeffs.reserve(hnf_basis.size());
  for (const auto& b : hnf_basis) {
    std::size_t p = 0;
    while (p < b.size() && b[p] == 0) ++p;
    if (p == b.size()) return std::nullopt;  // malformed basis row
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v[p].get_mpz_t(), b[p].get_mpz_t());
    if (r != 0) return std::nullopt;
    if (q != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * b[j];
    coeffs.push_back(q);
  }
  for (const Int& x : v)
    if (x != 0) return std::nullopt;
  return coeffs;
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
}

IntMat kernel_basis_rational(IntMat a, std::size_t ncols) {
  const std::size_t m = a.size(), n = ncols;
  if (m == 0) {
    IntMat id(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  // Fraction-free echelon with column pivot bookkeeping.
  std::vector<std::size_t> pivot_col;
  Int prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[row]);
    for (std::size_t i = row + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        Int t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    pivot_col.push_back(col);
    ++row;
  }
  const std::size_t r = row;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  IntMat basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    // Back-substitute with exact rational bookkeeping: store x as num/den.
    std::vector<Int> num(n, 0), den(n, 1);
    num[free_col] = 1;
    for (std::size_t ii = r; ii-- > 0;) {
      std::size_t pc = pivot_col[ii];
      // a[ii][pc]*x[pc] + sum_{j>pc} a[ii][j]*x[j] = 0
      Int snum = 0, sden = 1;
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (a[ii][j] == 0 || num[j] == 0) continue;
        // snum/sden += a[ii][j]*num[j]/den[j]
        snum = snum * den[j] + sden * a[ii][j] * num[j];
        sden = sden * den[j];
      }
      num[pc] = -snum;
      den[pc] = sden * a[ii][pc];
      if (den[pc] < 0) { den[pc] = -den[pc]; num[pc] = -num[pc]; }
      Int g;
      mpz_gcd(g.get_mpz_t(), num[pc].get_mpz_t(), den[pc].get_mpz_t());
      if (g > 1) {
        mpz_divexact(num[pc].get_mpz_t(), num[pc].get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den[pc].get_mpz_t(), den[pc].get_mpz_t(), g.get_mpz_t());
      }
    }
    // Clear denominators.
    Int lcm = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den[j].get_mpz_t());
    std::vector<Int> vec(n);
    for (std::size_t j = 0; j < n; ++j) {
      Int f;
      mpz_divexact(f.get_mpz_t(), lcm.get_mpz_t(), den[j].get_mpz_t());
      vec[j] = num[j] * f;
    }
    make_primitive(vec);
    basis.push_back(std::move(vec));
  }
  return basis;
}

}
