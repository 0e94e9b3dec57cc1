#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

/// Dense complex linear algebra for small multipartite Hilbert spaces.
///
/// Tensor-product convention used everywhere in loccert: for kets a (dim da)
/// and b (dim db), tensor(a, b)[i * db + j] = a[i] * b[j]. Party 0 is the
/// slowest-varying index of a global amplitude vector.
namespace loccert {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;

/// Relative singular-value cutoff used by numerical_rank unless overridden.
inline constexpr double kDefaultRankTolerance = 1e-8;

/// The rank-1 operator |ket><bra|.
struct Dyad {
  Ket ket;
  Ket bra;

  Dyad(Ket k, Ket b);

  [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(ket.size()); }
  [[nodiscard]] ComplexMatrix matrix() const;
  /// Tr |ket><bra| = <bra|ket>.
  [[nodiscard]] Complex trace() const;
};

[[nodiscard]] double frobenius_norm(const ComplexMatrix& m);

/// <a|b>, conjugate-linear in the first argument.
[[nodiscard]] Complex inner(const Ket& a, const Ket& b);

[[nodiscard]] Ket tensor(std::span<const Ket> kets);
[[nodiscard]] Ket tensor(const Ket& a, const Ket& b);
[[nodiscard]] ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
[[nodiscard]] ComplexMatrix tensor(std::span<const ComplexMatrix> ops);

/// Number of singular values of the stacked (flattened) inputs exceeding
/// tol_rel times the largest one. Inputs may have any shape but must all have
/// the same number of entries.
[[nodiscard]] std::size_t numerical_rank(std::span<const ComplexMatrix> vectors,
                                         double tol_rel = kDefaultRankTolerance);
[[nodiscard]] std::size_t numerical_rank(std::span<const Dyad> dyads,
                                         double tol_rel = kDefaultRankTolerance);
[[nodiscard]] std::size_t numerical_rank(std::span<const Ket> kets,
                                         double tol_rel = kDefaultRankTolerance);

[[nodiscard]] Ket basis_ket(std::size_t dim, std::size_t index);
[[nodiscard]] bool all_finite(const ComplexMatrix& m);

}  // namespace loccert
