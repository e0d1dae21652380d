// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include "openbaker/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "openbaker/errors.hpp"

namespace openbaker {
namespace {

inline double cabs1(const Complex& z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Elementary reflector H = I - tau v v^H with v = (1, x) mapping (alpha, x)
// to (beta, 0) with real beta. On return alpha holds beta and x holds v(1:).
Complex make_reflector(Complex& alpha, Complex* x, std::size_t count) {
  double sq = 0.0;
  for (std::size_t i = 0; i < count; ++i) sq += std::norm(x[i]);
  const double xnorm = std::sqrt(sq);
  if (xnorm == 0.0 && alpha.imag() == 0.0) return 0.0;
  const double alphr = alpha.real();
  const double alphi = alpha.imag();
  const double beta = -std::copysign(std::sqrt(alphr * alphr + alphi * alphi + sq), alphr);
  const Complex tau((beta - alphr) / beta, -alphi / beta);
  const Complex scale = 1.0 / (alpha - beta);
  for (std::size_t i = 0; i < count; ++i) x[i] *= scale;
  alpha = beta;
  return tau;
}

// Single-shift QR on an upper Hessenberg matrix, eigenvalues only. Follows
// the structure of LAPACK's xLAHQR: subdiagonals are kept real, deflation
// uses the Ahues-Tisseur criterion, and exceptional shifts kick in when no
// eigenvalue has deflated for a while.
std::vector<Complex> hessenberg_qr(ComplexMatrix& hm, const SolverOptions& options) {
  const std::size_t n = hm.dimension();
  std::vector<Complex> w(n);
  if (n == 0) return w;
  if (n == 1) {
    w[0] = hm(0, 0);
    return w;
  }
  Complex* data = hm.data();
  auto h = [data, n](std::size_t r, std::size_t c) -> Complex& { return data[c * n + r]; };

  const std::ptrdiff_t ilo = 0;
  const auto ihi = static_cast<std::ptrdiff_t>(n) - 1;

  for (std::ptrdiff_t i = ilo + 1; i <= ihi; ++i) {
    Complex& sub = h(i, i - 1);
    if (sub.imag() == 0.0) continue;
    Complex sc = sub / cabs1(sub);
    sc = std::conj(sc) / std::abs(sc);
    sub = std::abs(sub);
    for (std::ptrdiff_t j = i; j <= ihi; ++j) h(i, j) *= sc;
    for (std::ptrdiff_t j = ilo; j <= std::min(ihi, i + 1); ++j) h(j, i) *= std::conj(sc);
  }

  const double safmin = std::numeric_limits<double>::min();
  const double ulp = std::numeric_limits<double>::epsilon();
  const double smlnum = safmin * (static_cast<double>(n) / ulp);
  const std::size_t budget = options.sweeps_per_dimension * n;
  const std::size_t kexsh = std::max<std::size_t>(1, options.exceptional_shift_period);
  constexpr double kExceptional = 0.75;

  std::size_t sweeps = 0;
  std::size_t stalled = 0;
  std::ptrdiff_t i = ihi;
  while (i >= ilo) {
    std::ptrdiff_t l = ilo;
    bool converged = false;
    for (;;) {
      // Look for a single small subdiagonal element.
      std::ptrdiff_t k = i;
      for (; k > l; --k) {
        if (cabs1(h(k, k - 1)) <= smlnum) break;
        double tst = cabs1(h(k - 1, k - 1)) + cabs1(h(k, k));
        if (tst == 0.0) {
          if (k - 2 >= ilo) tst += std::abs(h(k - 1, k - 2).real());
          if (k + 1 <= ihi) tst += std::abs(h(k + 1, k).real());
        }
        if (std::abs(h(k, k - 1).real()) <= ulp * tst) {
          const double ab = std::max(cabs1(h(k, k - 1)), cabs1(h(k - 1, k)));
          const double ba = std::min(cabs1(h(k, k - 1)), cabs1(h(k - 1, k)));
          const double aa = std::max(cabs1(h(k, k)), cabs1(h(k - 1, k - 1) - h(k, k)));
          const double bb = std::min(cabs1(h(k, k)), cabs1(h(k - 1, k - 1) - h(k, k)));
          const double s = aa + ab;
          if (ba * (ab / s) <= std::max(smlnum, ulp * (bb * (aa / s)))) break;
        }
      }
      l = k;
      if (l > ilo) h(l, l - 1) = 0.0;
      if (l >= i) {
        converged = true;
        break;
      }
      if (sweeps >= budget) break;
      ++sweeps;
      ++stalled;

      // Active block rows/columns l..i; nothing outside it is needed.
      const std::ptrdiff_t i1 = l;
      const std::ptrdiff_t i2 = i;

      Complex t;
      if (stalled % (2 * kexsh) == 0) {
        const double s = kExceptional * std::abs(h(i, i - 1).real());
        t = s + h(i, i);
      } else if (stalled % kexsh == 0) {
        const double s = kExceptional * std::abs(h(l + 1, l).real());
        t = s + h(l, l);
      } else {
        // Wilkinson shift from the trailing 2x2 block.
        t = h(i, i);
        const Complex u = std::sqrt(h(i - 1, i)) * std::sqrt(h(i, i - 1));
        double s = cabs1(u);
        if (s != 0.0) {
          const Complex x = 0.5 * (h(i - 1, i - 1) - t);
          const double sx = cabs1(x);
          s = std::max(s, cabs1(x));
          Complex y = s * std::sqrt((x / s) * (x / s) + (u / s) * (u / s));
          if (sx > 0.0) {
            const Complex xs = x / sx;
            if (xs.real() * y.real() + xs.imag() * y.imag() < 0.0) y = -y;
          }
          t -= u * (u / (x + y));
        }
      }

      // Look for two consecutive small subdiagonals to start the bulge lower.
      std::ptrdiff_t m = i - 1;
      Complex v0;
      Complex v1;
      for (;; --m) {
        const Complex h11 = h(m, m);
        const Complex h22 = h(m + 1, m + 1);
        Complex h11s = h11 - t;
        double h21 = h(m + 1, m).real();
        const double s = cabs1(h11s) + std::abs(h21);
        h11s /= s;
        h21 /= s;
        v0 = h11s;
        v1 = h21;
        if (m == l) break;
        const double h10 = h(m, m - 1).real();
        if (std::abs(h10) * std::abs(h21) <= ulp * (cabs1(h11s) * (cabs1(h11) + cabs1(h22)))) break;
      }

      // Single-shift QR sweep chasing the bulge from m down to i.
      for (std::ptrdiff_t kk = m; kk < i; ++kk) {
        if (kk > m) {
          v0 = h(kk, kk - 1);
          v1 = h(kk + 1, kk - 1);
        }
        const Complex t1 = make_reflector(v0, &v1, 1);
        if (kk > m) {
          h(kk, kk - 1) = v0;
          h(kk + 1, kk - 1) = 0.0;
        }
        const Complex v2 = v1;
        const double t2 = (t1 * v2).real();
        const Complex t1c = std::conj(t1);
        const Complex v2c = std::conj(v2);
        for (std::ptrdiff_t j = kk; j <= i2; ++j) {
          Complex* col = data + static_cast<std::size_t>(j) * n;
          const Complex sum = t1c * col[kk] + t2 * col[kk + 1];
          col[kk] -= sum;
          col[kk + 1] -= sum * v2;
        }
        Complex* colk = data + static_cast<std::size_t>(kk) * n;
        Complex* colk1 = colk + n;
        const std::ptrdiff_t last = std::min(kk + 2, i);
        for (std::ptrdiff_t j = i1; j <= last; ++j) {
          const Complex sum = t1 * colk[j] + t2 * colk1[j];
          colk[j] -= sum;
          colk1[j] -= sum * v2c;
        }
        if (kk == m && m > l) {
          // Restore a real subdiagonal after starting the bulge mid-block.
          Complex temp = 1.0 - t1;
          temp /= std::abs(temp);
          h(m + 1, m) *= std::conj(temp);
          if (m + 2 <= i) h(m + 2, m + 1) *= temp;
          for (std::ptrdiff_t j = m; j <= i; ++j) {
            if (j == m + 1) continue;
            for (std::ptrdiff_t jj = j + 1; jj <= i2; ++jj) h(j, jj) *= temp;
            for (std::ptrdiff_t jj = i1; jj < j; ++jj) h(jj, j) *= std::conj(temp);
          }
        }
      }

      Complex temp = h(i, i - 1);
      if (temp.imag() != 0.0) {
        const double rtemp = std::abs(temp);
        h(i, i - 1) = rtemp;
        temp /= rtemp;
        for (std::ptrdiff_t j = i + 1; j <= i2; ++j) h(i, j) *= std::conj(temp);
        for (std::ptrdiff_t j = i1; j < i; ++j) h(j, i) *= temp;
      }
    }
    if (!converged) throw ConvergenceError(n, static_cast<std::size_t>(i));
    w[static_cast<std::size_t>(i)] = h(i, i);
    stalled = 0;
    i = l - 1;
  }
  return w;
}

}  // namespace

void reduce_to_hessenberg(ComplexMatrix& a) {
  const std::size_t n = a.dimension();
  if (n < 3) return;
  Complex* data = a.data();
  std::vector<Complex> w(n);
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    Complex* colk = data + k * n;
    const std::size_t len = n - k - 1;  // reflector acts on rows k+1..n-1
    Complex alpha = colk[k + 1];
    const Complex tau = make_reflector(alpha, colk + k + 2, len - 1);
    colk[k + 1] = alpha;
    v[0] = 1.0;
    for (std::size_t i = 1; i < len; ++i) {
      v[i] = colk[k + 1 + i];
      colk[k + 1 + i] = 0.0;
    }
    if (tau == Complex(0.0)) continue;

    // A <- A H on columns k+1..n-1, all rows.
    std::fill(w.begin(), w.end(), Complex(0.0));
    for (std::size_t j = 0; j < len; ++j) {
      const Complex vj = v[j];
      const Complex* col = data + (k + 1 + j) * n;
      for (std::size_t r = 0; r < n; ++r) w[r] += col[r] * vj;
    }
    for (std::size_t j = 0; j < len; ++j) {
      const Complex scale = tau * std::conj(v[j]);
      Complex* col = data + (k + 1 + j) * n;
      for (std::size_t r = 0; r < n; ++r) col[r] -= w[r] * scale;
    }

    // A <- H^H A on rows k+1..n-1, columns k+1..n-1.
    const Complex tau_conj = std::conj(tau);
    for (std::size_t j = k + 1; j < n; ++j) {
      Complex* col = data + j * n + (k + 1);
      Complex dot = 0.0;
      for (std::size_t i = 0; i < len; ++i) dot += std::conj(v[i]) * col[i];
      const Complex scale = tau_conj * dot;
      for (std::size_t i = 0; i < len; ++i) col[i] -= v[i] * scale;
    }
  }
}

std::vector<Complex> eigenvalues(ComplexMatrix a, const SolverOptions& options) {
  if (a.dimension() > options.max_dimension) {
    throw std::invalid_argument("eigenvalues: dimension " + std::to_string(a.dimension()) +
                                " exceeds the configured cap of " + std::to_string(options.max_dimension));
  }
  if (!a.all_finite()) throw std::invalid_argument("eigenvalues: matrix has non-finite entries");
  reduce_to_hessenberg(a);
  return hessenberg_qr(a, options);
}

}  // namespace openbaker
