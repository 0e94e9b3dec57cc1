#include "loccert/error_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace loccert {

ComplexMatrix build_pi(const StateSet& s) {
  const auto D = static_cast<Eigen::Index>(s.total_dim());
  ComplexMatrix pi = ComplexMatrix::Zero(D, D);
  for (std::size_t m = 0; m < s.size(); ++m) {
    const Ket& psi = s.global(m);
    pi += std::sqrt(s.priors()[m]) * (psi * psi.adjoint());
  }
  return pi;
}

namespace {

void require_same_dims(const ProductOperator& q, const StateSet& s, const char* who) {
  if (q.dims() != s.dims()) {
    throw std::invalid_argument(std::string(who) + ": operator and state set dimensions differ");
  }
}

// eta_m <Psi_m|Q|Psi_m> for every member.
std::vector<double> diagonal_weights(const ComplexMatrix& q, const StateSet& s) {
  std::vector<double> c(s.size());
  for (std::size_t m = 0; m < s.size(); ++m) {
    const Ket& psi = s.global(m);
    c[m] = s.priors()[m] * psi.dot(q * psi).real();
  }
  return c;
}

ComplexMatrix combine(const std::vector<double>& c, const StateSet& s) {
  const auto D = static_cast<Eigen::Index>(s.total_dim());
  ComplexMatrix z = ComplexMatrix::Zero(D, D);
  for (std::size_t m = 0; m < s.size(); ++m) {
    const Ket& psi = s.global(m);
    z += c[m] * (psi * psi.adjoint());
  }
  return z;
}

}  // namespace

ComplexMatrix z_star(const ProductOperator& q, const StateSet& s) {
  require_same_dims(q, s, "z_star");
  auto c = diagonal_weights(q.assemble(), s);
  for (double& v : c) v = std::clamp(v, 0.0, 1.0);
  return combine(c, s);
}

DeltaValue delta(const ProductOperator& q, const StateSet& s) {
  require_same_dims(q, s, "delta");
  const double norm = q.operator_norm();
  if (!(norm > 0.0)) return {0.0, true};
  const ProductOperator qn = q.scaled(1.0 / norm);
  const ComplexMatrix pi = build_pi(s);
  const ComplexMatrix qhat = pi * qn.assemble() * pi;
  const double denom = qhat.trace().real();
  if (denom < kDegenerateTraceFloor) return {0.0, true};
  return {(qhat - z_star(qn, s)).norm() / denom, false};
}

double distance_from_identity(const ProductOperator& q) {
  double t = q.trace();
  if (!(t > 0.0)) throw std::invalid_argument("distance_from_identity: Tr Q must be positive");
  double purity = 1.0;
  for (double p : q.local_purities()) purity *= p;
  const double r2 = purity - 1.0 / static_cast<double>(q.total_dim());
  return std::sqrt(std::max(0.0, r2));
}

double max_distance(std::size_t total_dim) {
  if (total_dim == 0) throw std::invalid_argument("max_distance: dimension must be positive");
  const auto D = static_cast<double>(total_dim);
  return std::sqrt((D - 1.0) / D);
}

namespace {

struct LocalState {
  ComplexMatrix rho;  // trace one
  double dim = 1.0;
  double purity = 1.0;
  double lambda_min = 0.0;
  double lambda_max = 1.0;
  Ket top;
};

double distance_squared_of(const std::vector<double>& purities, double inv_dim) {
  double p = 1.0;
  for (double v : purities) p *= v;
  return p - inv_dim;
}

// Smallest u in [lo, hi] with f(u) >= target, for nondecreasing f.
template <typename F>
double bisect(F&& f, double lo, double hi, double target) {
  for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ProductOperator project_to_distance(const ProductOperator& q, double r) {
  const double D = static_cast<double>(q.total_dim());
  const double r_max = max_distance(q.total_dim());
  if (!(r >= 0.0) || r > r_max * (1.0 + 1e-12)) {
    throw std::invalid_argument("project_to_distance: R must lie in [0, sqrt((D-1)/D)]");
  }
  if (!(q.trace() > 0.0)) throw std::invalid_argument("project_to_distance: Tr Q must be positive");
  r = std::min(r, r_max);
  const double target = r * r;
  const double inv_D = 1.0 / D;

  std::vector<LocalState> st;
  for (const auto& local : q.locals()) {
    LocalState ls;
    ls.dim = static_cast<double>(local.rows());
    ls.rho = local / local.trace().real();
    ls.rho = 0.5 * (ls.rho + ls.rho.adjoint()).eval();
    ls.purity = ls.rho.squaredNorm();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(ls.rho);
    ls.lambda_min = es.eigenvalues()(0);
    ls.lambda_max = es.eigenvalues()(es.eigenvalues().size() - 1);
    ls.top = es.eigenvectors().col(es.eigenvectors().cols() - 1);
    st.push_back(std::move(ls));
  }

  // Common mixing line rho_a(t) = (1 - t) I/d + t rho_a.
  auto line_r2 = [&](double t) {
    std::vector<double> p;
    for (const auto& ls : st) p.push_back(1.0 / ls.dim + t * t * (ls.purity - 1.0 / ls.dim));
    return distance_squared_of(p, inv_D);
  };
  double t_max = std::numeric_limits<double>::infinity();
  for (const auto& ls : st) {
    const double gap = 1.0 / ls.dim - ls.lambda_min;
    if (gap > 1e-15) t_max = std::min(t_max, (1.0 / ls.dim) / gap);
  }

  auto on_line = [&](double t) {
    for (auto& ls : st) {
      const auto d = static_cast<Eigen::Index>(ls.dim);
      ls.rho = (1.0 - t) * ComplexMatrix::Identity(d, d) / ls.dim + t * ls.rho;
      ls.purity = ls.rho.squaredNorm();
    }
  };

  const bool reachable_on_line = std::isfinite(t_max) && line_r2(t_max) >= target;
  if (target <= line_r2(1.0)) {
    on_line(bisect(line_r2, 0.0, 1.0, target));
  } else if (reachable_on_line) {
    on_line(bisect(line_r2, 1.0, t_max, target));
  } else {
    if (std::isfinite(t_max)) on_line(t_max);
    // Move parties one at a time toward their top eigenprojector.
    for (std::size_t a = 0; a < st.size(); ++a) {
      auto& ls = st[a];
      const ComplexMatrix proj = ls.top * ls.top.adjoint();
      const double lmax = ls.top.dot(ls.rho * ls.top).real();
      const double p0 = ls.purity;
      auto party_r2 = [&](double u) {
        std::vector<double> p;
        for (std::size_t b = 0; b < st.size(); ++b) {
          p.push_back(b == a ? (1 - u) * (1 - u) * p0 + 2 * u * (1 - u) * lmax + u * u
                             : st[b].purity);
        }
        return distance_squared_of(p, inv_D);
      };
      const double u = party_r2(1.0) >= target ? bisect(party_r2, 0.0, 1.0, target) : 1.0;
      ls.rho = (1.0 - u) * ls.rho + u * proj;
      ls.purity = ls.rho.squaredNorm();
      if (u < 1.0) break;
    }
  }

  std::vector<ComplexMatrix> locals;
  for (auto& ls : st) {
    ComplexMatrix m = ls.dim * ls.rho;
    locals.push_back(0.5 * (m + m.adjoint()));
  }
  return ProductOperator::from_locals(std::move(locals));
}

double appendix_b_gap(std::span<const WeightedTerm> terms) {
  if (terms.empty()) throw std::invalid_argument("appendix_b_gap: no terms");
  double lhs = 0.0;
  double t_sum = 0.0;
  ComplexMatrix sum = ComplexMatrix::Zero(terms.front().m.rows(), terms.front().m.cols());
  for (const auto& term : terms) {
    if (!(term.t > 0.0)) throw std::invalid_argument("appendix_b_gap: every t_l must be positive");
    if (term.m.rows() != sum.rows() || term.m.cols() != sum.cols()) {
      throw std::invalid_argument("appendix_b_gap: matrices differ in shape");
    }
    lhs += term.m.squaredNorm() / term.t;
    sum += term.m;
    t_sum += term.t;
  }
  return lhs - sum.squaredNorm() / t_sum;
}

double offdiagonal_mass(const ProductOperator& q, const StateSet& s) {
  require_same_dims(q, s, "offdiagonal_mass");
  const ComplexMatrix pi = build_pi(s);
  const ComplexMatrix full = q.assemble();
  return (pi * full * pi - combine(diagonal_weights(full, s), s)).norm();
}

bool lemma1_inequality_check(const ProductOperator& q_p, const ProductOperator& q_s, double y,
                             const StateSet& s) {
  if (!(y >= 0.0 && y <= 1.0)) throw std::invalid_argument("lemma1_inequality_check: y must be in [0, 1]");
  if (q_p.dims() != q_s.dims()) {
    throw std::invalid_argument("lemma1_inequality_check: operators differ in shape");
  }
  std::size_t differing = q_p.parties();
  for (std::size_t a = 0; a < q_p.parties(); ++a) {
    const auto& x = q_p.local(a);
    const auto& z = q_s.local(a);
    if ((x - z).norm() > 1e-14 * std::max(1.0, x.norm())) {
      if (differing != q_p.parties()) {
        throw std::invalid_argument(
            "lemma1_inequality_check: operators must differ on at most one party");
      }
      differing = a;
    }
  }
  ProductOperator q_y = q_p;
  if (differing != q_p.parties()) {
    q_y = q_p.with_local(differing, (1.0 - y) * q_p.local(differing) + y * q_s.local(differing));
  }
  const double lhs = offdiagonal_mass(q_y, s);
  const double rhs = (1.0 - y) * offdiagonal_mass(q_p, s) + y * offdiagonal_mass(q_s, s);
  return lhs * lhs <= rhs * rhs + 1e-9 * std::max(1.0, rhs * rhs);
}

// ---------------------------------------------------------------------------

DeltaObjective::DeltaObjective(const StateSet& s) : dims_(s.dims()), total_dim_(s.total_dim()) {
  for (std::size_t d : dims_) num_params_ += d * (d + 1);
  const auto D = static_cast<Eigen::Index>(total_dim_);
  const auto N = static_cast<Eigen::Index>(s.size());
  psi_.resize(D, N);
  eta_.resize(N);
  for (Eigen::Index m = 0; m < N; ++m) {
    psi_.col(m) = s.global(static_cast<std::size_t>(m));
    eta_(m) = s.priors()[static_cast<std::size_t>(m)];
  }
}

std::vector<ComplexMatrix> DeltaObjective::factors(std::span<const double> x) const {
  if (x.size() != num_params_) throw std::invalid_argument("DeltaObjective: wrong parameter count");
  std::vector<ComplexMatrix> out;
  std::size_t k = 0;
  for (std::size_t d : dims_) {
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix L = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j <= i; ++j, k += 2) L(i, j) = Complex(x[k], x[k + 1]);
    }
    out.push_back(std::move(L));
  }
  return out;
}

std::vector<double> DeltaObjective::parameters(const std::vector<ComplexMatrix>& factors) const {
  if (factors.size() != dims_.size()) throw std::invalid_argument("DeltaObjective: wrong party count");
  std::vector<double> x;
  x.reserve(num_params_);
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    const auto n = static_cast<Eigen::Index>(dims_[a]);
    if (factors[a].rows() != n || factors[a].cols() != n) {
      throw std::invalid_argument("DeltaObjective: factor has the wrong size");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j <= i; ++j) {
        x.push_back(factors[a](i, j).real());
        x.push_back(factors[a](i, j).imag());
      }
    }
  }
  return x;
}

ProductOperator DeltaObjective::to_operator(std::span<const double> x) const {
  return ProductOperator::from_factors(factors(x));
}

double DeltaObjective::delta_squared(std::span<const double> x, std::span<double> grad) const {
  return evaluate(x, true, 0.0, 0.0, grad);
}

double DeltaObjective::distance_squared(std::span<const double> x, std::span<double> grad) const {
  // weight < 0 selects the bare distance.
  return evaluate(x, false, 0.0, -1.0, grad);
}

double DeltaObjective::penalized(std::span<const double> x, double target_r, double weight,
                                 std::span<double> grad) const {
  return evaluate(x, true, target_r, weight, grad);
}

double DeltaObjective::evaluate(std::span<const double> x, bool with_delta, double target_r,
                                double weight, std::span<double> grad) const {
  const bool want_grad = !grad.empty();
  if (want_grad && grad.size() != num_params_) {
    throw std::invalid_argument("DeltaObjective: gradient buffer has the wrong size");
  }
  const auto L = factors(x);
  const std::size_t P = dims_.size();
  std::vector<ComplexMatrix> q(P);
  std::vector<ComplexMatrix> h(P);
  for (std::size_t a = 0; a < P; ++a) {
    ComplexMatrix qa = L[a].adjoint() * L[a];
    q[a] = 0.5 * (qa + qa.adjoint());
    h[a] = ComplexMatrix::Zero(q[a].rows(), q[a].cols());
  }

  double value = 0.0;
  if (with_delta) {
    const ComplexMatrix full = tensor(std::span<const ComplexMatrix>(q));
    const ComplexMatrix g = psi_.adjoint() * (full * psi_);
    const auto N = g.rows();
    double b = 0.0;
    double a_sum = 0.0;
    for (Eigen::Index m = 0; m < N; ++m) {
      b += eta_(m) * g(m, m).real();
      for (Eigen::Index n = 0; n < N; ++n) {
        if (n != m) a_sum += eta_(m) * eta_(n) * std::norm(g(m, n));
      }
    }
    if (!(b > 0.0) || !std::isfinite(a_sum / (b * b))) {
      // Q annihilates every member: treat as the worst case and push away.
      value += 1.0;
    } else {
      value += a_sum / (b * b);
      if (want_grad) {
        ComplexMatrix c = ComplexMatrix::Zero(N, N);
        for (Eigen::Index m = 0; m < N; ++m) {
          for (Eigen::Index n = 0; n < N; ++n) {
            if (n != m) c(m, n) = eta_(m) * eta_(n) * g(m, n);
          }
        }
        const ComplexMatrix grad_a = 2.0 * psi_ * c * psi_.adjoint();
        const ComplexMatrix grad_b = psi_ * eta_.asDiagonal() * psi_.adjoint();
        const ComplexMatrix gq = grad_a / (b * b) - (2.0 * a_sum / (b * b * b)) * grad_b;

        // Contract the full gradient against the other parties' locals.
        const auto D = static_cast<std::size_t>(gq.rows());
        std::vector<std::size_t> stride(P, 1);
        for (std::size_t a = P - 1; a > 0; --a) stride[a - 1] = stride[a] * dims_[a];
        std::vector<Complex> factor(P);
        for (std::size_t r = 0; r < D; ++r) {
          for (std::size_t col = 0; col < D; ++col) {
            const Complex w = gq(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col));
            for (std::size_t a = 0; a < P; ++a) {
              const auto i = static_cast<Eigen::Index>((r / stride[a]) % dims_[a]);
              const auto j = static_cast<Eigen::Index>((col / stride[a]) % dims_[a]);
              factor[a] = std::conj(q[a](i, j));
            }
            for (std::size_t a = 0; a < P; ++a) {
              Complex prod = w;
              for (std::size_t other = 0; other < P; ++other) {
                if (other != a) prod *= factor[other];
              }
              const auto i = static_cast<Eigen::Index>((r / stride[a]) % dims_[a]);
              const auto j = static_cast<Eigen::Index>((col / stride[a]) % dims_[a]);
              h[a](i, j) += prod;
            }
          }
        }
      }
    }
  }

  if (weight != 0.0) {
    std::vector<double> tr(P), sq(P), p(P);
    double prod = 1.0;
    for (std::size_t a = 0; a < P; ++a) {
      tr[a] = q[a].trace().real();
      sq[a] = q[a].squaredNorm();
      p[a] = sq[a] / (tr[a] * tr[a]);
      prod *= p[a];
    }
    const double r2 = prod - 1.0 / static_cast<double>(total_dim_);
    double outer = 1.0;
    if (weight < 0.0) {
      value += r2;
    } else {
      const double diff = r2 - target_r * target_r;
      value += weight * diff * diff;
      outer = 2.0 * weight * diff;
    }
    if (want_grad) {
      for (std::size_t a = 0; a < P; ++a) {
        double others = 1.0;
        for (std::size_t b = 0; b < P; ++b) {
          if (b != a) others *= p[b];
        }
        const auto n = q[a].rows();
        const double t = tr[a];
        ComplexMatrix dp = (2.0 / (t * t)) * q[a] -
                           (2.0 * sq[a] / (t * t * t)) * ComplexMatrix::Identity(n, n);
        h[a] += (outer * others) * dp;
      }
    }
  }

  if (want_grad) accumulate_factor_gradient(L, h, grad);
  return value;
}

void DeltaObjective::accumulate_factor_gradient(const std::vector<ComplexMatrix>& factors,
                                                const std::vector<ComplexMatrix>& local_grads,
                                                std::span<double> grad) const {
  std::size_t k = 0;
  for (std::size_t a = 0; a < dims_.size(); ++a) {
    const ComplexMatrix w = 2.0 * factors[a] * local_grads[a];
    const auto n = static_cast<Eigen::Index>(dims_[a]);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j <= i; ++j, k += 2) {
        grad[k] = w(i, j).real();
        grad[k + 1] = w(i, j).imag();
      }
    }
  }
}

}  // namespace loccert
