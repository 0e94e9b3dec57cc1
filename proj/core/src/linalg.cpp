#include "loccert/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace loccert {

Dyad::Dyad(Ket k, Ket b) : ket(std::move(k)), bra(std::move(b)) {
  if (ket.size() != bra.size()) {
    throw std::invalid_argument("Dyad: ket and bra dimensions differ (" +
                                std::to_string(ket.size()) + " vs " +
                                std::to_string(bra.size()) + ")");
  }
}

ComplexMatrix Dyad::matrix() const { return ket * bra.adjoint(); }

Complex Dyad::trace() const { return bra.dot(ket); }

double frobenius_norm(const ComplexMatrix& m) { return m.norm(); }

Complex inner(const Ket& a, const Ket& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("inner: dimension mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
  // Eigen's dot() conjugates the first operand.
  return a.dot(b);
}

Ket tensor(const Ket& a, const Ket& b) {
  Ket out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

Ket tensor(std::span<const Ket> kets) {
  if (kets.empty()) throw std::invalid_argument("tensor: empty list of kets");
  Ket out = kets.front();
  for (std::size_t k = 1; k < kets.size(); ++k) out = tensor(out, kets[k]);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix tensor(std::span<const ComplexMatrix> ops) {
  if (ops.empty()) throw std::invalid_argument("tensor: empty list of operators");
  ComplexMatrix out = ops.front();
  for (std::size_t k = 1; k < ops.size(); ++k) out = kron(out, ops[k]);
  return out;
}

namespace {

std::size_t rank_of_rows(const ComplexMatrix& stacked, double tol_rel) {
  if (stacked.rows() == 0 || stacked.cols() == 0) return 0;
  Eigen::BDCSVD<ComplexMatrix> svd(stacked);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || !(sv(0) > 0.0)) return 0;
  const double cutoff = tol_rel * sv(0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return rank;
}

void check_tolerance(double tol_rel) {
  if (!(tol_rel > 0.0)) throw std::invalid_argument("numerical_rank: tol_rel must be > 0");
}

}  // namespace

std::size_t numerical_rank(std::span<const ComplexMatrix> vectors, double tol_rel) {
  check_tolerance(tol_rel);
  if (vectors.empty()) return 0;
  const Eigen::Index n = vectors.front().size();
  ComplexMatrix stacked(static_cast<Eigen::Index>(vectors.size()), n);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != n) {
      throw std::invalid_argument("numerical_rank: entry " + std::to_string(k) + " has " +
                                  std::to_string(vectors[k].size()) + " entries, expected " +
                                  std::to_string(n));
    }
    // Row-major flattening.
    for (Eigen::Index r = 0; r < vectors[k].rows(); ++r) {
      for (Eigen::Index c = 0; c < vectors[k].cols(); ++c) {
        stacked(static_cast<Eigen::Index>(k), r * vectors[k].cols() + c) = vectors[k](r, c);
      }
    }
  }
  return rank_of_rows(stacked, tol_rel);
}

std::size_t numerical_rank(std::span<const Dyad> dyads, double tol_rel) {
  check_tolerance(tol_rel);
  if (dyads.empty()) return 0;
  const Eigen::Index d = dyads.front().ket.size();
  ComplexMatrix stacked(static_cast<Eigen::Index>(dyads.size()), d * d);
  for (std::size_t k = 0; k < dyads.size(); ++k) {
    if (dyads[k].ket.size() != d) {
      throw std::invalid_argument("numerical_rank: dyad " + std::to_string(k) +
                                  " has a different dimension");
    }
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) {
        stacked(static_cast<Eigen::Index>(k), r * d + c) =
            dyads[k].ket(r) * std::conj(dyads[k].bra(c));
      }
    }
  }
  return rank_of_rows(stacked, tol_rel);
}

std::size_t numerical_rank(std::span<const Ket> kets, double tol_rel) {
  check_tolerance(tol_rel);
  if (kets.empty()) return 0;
  const Eigen::Index d = kets.front().size();
  ComplexMatrix stacked(static_cast<Eigen::Index>(kets.size()), d);
  for (std::size_t k = 0; k < kets.size(); ++k) {
    if (kets[k].size() != d) {
      throw std::invalid_argument("numerical_rank: ket " + std::to_string(k) +
                                  " has a different dimension");
    }
    stacked.row(static_cast<Eigen::Index>(k)) = kets[k].transpose();
  }
  return rank_of_rows(stacked, tol_rel);
}

Ket basis_ket(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("basis_ket: index out of range");
  Ket k = Ket::Zero(static_cast<Eigen::Index>(dim));
  k(static_cast<Eigen::Index>(index)) = 1.0;
  return k;
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex v = m.data()[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

}  // namespace loccert
