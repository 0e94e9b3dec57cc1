#pragma once

#include <cstddef>
#include <vector>

#include "loccert/linalg.hpp"

namespace loccert {

/// Positive semidefinite product operator Q = Q_0 (x) Q_1 (x) ... (x) Q_{P-1}.
///
/// Built either from unconstrained complex factors (Q_a = L_a^dagger L_a, PSD by
/// construction) or from local PSD operators directly.
class ProductOperator {
 public:
  static ProductOperator from_factors(const std::vector<ComplexMatrix>& factors);
  /// Locals must be square, Hermitian and PSD to within 1e-10 of their scale.
  static ProductOperator from_locals(std::vector<ComplexMatrix> locals);
  static ProductOperator identity(const std::vector<std::size_t>& dims);

  [[nodiscard]] std::size_t parties() const { return locals_.size(); }
  [[nodiscard]] std::vector<std::size_t> dims() const;
  [[nodiscard]] std::size_t total_dim() const;
  [[nodiscard]] const std::vector<ComplexMatrix>& locals() const { return locals_; }
  [[nodiscard]] const ComplexMatrix& local(std::size_t party) const { return locals_.at(party); }

  /// The full D x D matrix (party 0 slowest).
  [[nodiscard]] ComplexMatrix assemble() const;
  [[nodiscard]] double trace() const;
  /// Largest eigenvalue; the product of the local ones.
  [[nodiscard]] double operator_norm() const;
  /// Tr(rho_a^2) of the trace-normalized local on each party.
  [[nodiscard]] std::vector<double> local_purities() const;

  [[nodiscard]] ProductOperator scaled(double c) const;
  [[nodiscard]] ProductOperator with_local(std::size_t party, ComplexMatrix local) const;

 private:
  explicit ProductOperator(std::vector<ComplexMatrix> locals) : locals_(std::move(locals)) {}
  std::vector<ComplexMatrix> locals_;
};

}  // namespace loccert
