#include "loccert/product_operator.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace loccert {

ProductOperator ProductOperator::from_factors(const std::vector<ComplexMatrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("ProductOperator: no factors");
  std::vector<ComplexMatrix> locals;
  locals.reserve(factors.size());
  for (const auto& L : factors) {
    if (L.rows() != L.cols() || L.rows() == 0) {
      throw std::invalid_argument("ProductOperator: factors must be square and non-empty");
    }
    if (!all_finite(L)) throw std::invalid_argument("ProductOperator: non-finite factor");
    ComplexMatrix q = L.adjoint() * L;
    // Exact Hermitian symmetry.
    locals.push_back(0.5 * (q + q.adjoint()));
  }
  return ProductOperator(std::move(locals));
}

ProductOperator ProductOperator::from_locals(std::vector<ComplexMatrix> locals) {
  if (locals.empty()) throw std::invalid_argument("ProductOperator: no local operators");
  for (std::size_t a = 0; a < locals.size(); ++a) {
    auto& q = locals[a];
    if (q.rows() != q.cols() || q.rows() == 0) {
      throw std::invalid_argument("ProductOperator: local " + std::to_string(a) +
                                  " is not square");
    }
    if (!all_finite(q)) throw std::invalid_argument("ProductOperator: non-finite local");
    const double scale = std::max(1.0, q.norm());
    if ((q - q.adjoint()).norm() > 1e-10 * scale) {
      throw std::invalid_argument("ProductOperator: local " + std::to_string(a) +
                                  " is not Hermitian");
    }
    q = 0.5 * (q + q.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(q, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10 * scale) {
      throw std::invalid_argument("ProductOperator: local " + std::to_string(a) +
                                  " is not positive semidefinite");
    }
  }
  return ProductOperator(std::move(locals));
}

ProductOperator ProductOperator::identity(const std::vector<std::size_t>& dims) {
  std::vector<ComplexMatrix> locals;
  for (std::size_t d : dims) {
    const auto n = static_cast<Eigen::Index>(d);
    locals.push_back(ComplexMatrix::Identity(n, n));
  }
  return from_locals(std::move(locals));
}

std::vector<std::size_t> ProductOperator::dims() const {
  std::vector<std::size_t> d;
  for (const auto& q : locals_) d.push_back(static_cast<std::size_t>(q.rows()));
  return d;
}

std::size_t ProductOperator::total_dim() const {
  std::size_t D = 1;
  for (const auto& q : locals_) D *= static_cast<std::size_t>(q.rows());
  return D;
}

ComplexMatrix ProductOperator::assemble() const {
  return tensor(std::span<const ComplexMatrix>(locals_));
}

double ProductOperator::trace() const {
  double t = 1.0;
  for (const auto& q : locals_) t *= q.trace().real();
  return t;
}

double ProductOperator::operator_norm() const {
  double n = 1.0;
  for (const auto& q : locals_) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(q, Eigen::EigenvaluesOnly);
    n *= std::max(0.0, es.eigenvalues().maxCoeff());
  }
  return n;
}

std::vector<double> ProductOperator::local_purities() const {
  std::vector<double> p;
  for (const auto& q : locals_) {
    const double t = q.trace().real();
    p.push_back(q.squaredNorm() / (t * t));
  }
  return p;
}

ProductOperator ProductOperator::scaled(double c) const {
  auto locals = locals_;
  locals.front() *= c;
  return ProductOperator(std::move(locals));
}

ProductOperator ProductOperator::with_local(std::size_t party, ComplexMatrix local) const {
  if (party >= locals_.size()) throw std::invalid_argument("with_local: party out of range");
  auto locals = locals_;
  locals[party] = std::move(local);
  return from_locals(std::move(locals));
}

}  // namespace loccert
