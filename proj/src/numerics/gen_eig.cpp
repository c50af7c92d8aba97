#include "specbound/numerics/gen_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specbound/errors.hpp"

namespace specbound::numerics {

namespace {

using Dense = std::vector<double>; // row-major n x n

// Lower Cholesky factor; throws when a pivot is not strictly positive.
Dense cholesky(const SymMatrix& M) {
  const std::size_t n = M.order();
  Dense L(n * n, 0.0);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    scale = std::max(scale, std::abs(M(i, i)));
  for (std::size_t j = 0; j < n; ++j) {
    double d = M(j, j);
    for (std::size_t k = 0; k < j; ++k)
      d -= L[j * n + k] * L[j * n + k];
    if (!(d > 1e-15 * scale))
      throw NumericalError("denominator form is not positive definite (Cholesky breakdown)");
    const double ljj = std::sqrt(d);
    L[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = M(i, j);
      for (std::size_t k = 0; k < j; ++k)
        s -= L[i * n + k] * L[j * n + k];
      L[i * n + j] = s / ljj;
    }
  }
  return L;
}

// C = L^-1 A L^-T
Dense reduce(const SymMatrix& A, const Dense& L) {
  const std::size_t n = A.order();
  Dense X = A.dense();
  // X <- L^-1 X (columnwise forward substitution)
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      double s = X[i * n + c];
      for (std::size_t k = 0; k < i; ++k)
        s -= L[i * n + k] * X[k * n + c];
      X[i * n + c] = s / L[i * n + i];
    }
  // C <- X L^-T, i.e. C^T = L^-1 X^T; rows of C solved as forward substitutions.
  Dense C(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < n; ++i) {
      double s = X[r * n + i];
      for (std::size_t k = 0; k < i; ++k)
        s -= L[i * n + k] * C[r * n + k];
      C[r * n + i] = s / L[i * n + i];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const double m = 0.5 * (C[i * n + j] + C[j * n + i]);
      C[i * n + j] = m;
      C[j * n + i] = m;
    }
  return C;
}

double off_norm(const Dense& C, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        s += C[i * n + j] * C[i * n + j];
  return std::sqrt(s);
}

// Cyclic Jacobi; V accumulates the rotations (columns are eigenvectors).
int jacobi(Dense& C, Dense& V, std::size_t n, const GenEigOptions& opts) {
  V.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    V[i * n + i] = 1.0;
  double total = 0.0;
  for (double v : C)
    total += v * v;
  total = std::sqrt(total);
  if (total == 0.0)
    return 0;
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    if (off_norm(C, n) <= opts.tol * total)
      return sweep;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double cpq = C[p * n + q];
        if (cpq == 0.0)
          continue;
        const double theta = (C[q * n + q] - C[p * n + p]) / (2.0 * cpq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double ckp = C[k * n + p];
          const double ckq = C[k * n + q];
          C[k * n + p] = c * ckp - s * ckq;
          C[k * n + q] = s * ckp + c * ckq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double cpk = C[p * n + k];
          const double cqk = C[q * n + k];
          C[p * n + k] = c * cpk - s * cqk;
          C[q * n + k] = s * cpk + c * cqk;
        }
        C[p * n + q] = 0.0;
        C[q * n + p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = V[k * n + p];
          const double vkq = V[k * n + q];
          V[k * n + p] = c * vkp - s * vkq;
          V[k * n + q] = s * vkp + c * vkq;
        }
      }
  }
  if (off_norm(C, n) <= opts.tol * total)
    return opts.max_sweeps;
  throw NumericalError("Jacobi iteration did not converge");
}

} // namespace

GenEigDecomposition sym_gen_eig_decompose(const SymMatrix& A, const SymMatrix& M,
                                          const GenEigOptions& opts) {
  if (A.order() != M.order())
    throw InputError("sym_gen_eigs: pencil matrices differ in order");
  const std::size_t n = A.order();
  if (n == 0)
    throw InputError("sym_gen_eigs: empty pencil");
  const Dense L = cholesky(M);
  Dense C = reduce(A, L);
  Dense V;
  GenEigDecomposition out;
  out.sweeps = jacobi(C, V, n, opts);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return C[a * n + a] < C[b * n + b]; });
  for (std::size_t idx : order) {
    out.values.push_back(C[idx * n + idx]);
    // v = L^-T y, back substitution.
    std::vector<double> v(n);
    for (std::size_t ii = n; ii-- > 0;) {
      double s = V[ii * n + idx];
      for (std::size_t k = ii + 1; k < n; ++k)
        s -= L[k * n + ii] * v[k];
      v[ii] = s / L[ii * n + ii];
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

std::vector<double> sym_gen_eigs(const SymMatrix& A, const SymMatrix& M,
                                 const GenEigOptions& opts) {
  return sym_gen_eig_decompose(A, M, opts).values;
}

} // namespace specbound::numerics
