#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "loccert/linalg.hpp"
#include "loccert/product_operator.hpp"
#include "loccert/state_set.hpp"

namespace loccert {

/// Below this value of Tr(Pi^2 Q) (with Q scaled to unit operator norm) delta() reports 0.
inline constexpr double kDegenerateTraceFloor = 1e-12;

/// Pi = sum_m sqrt(eta_m) |Psi_m><Psi_m|.
[[nodiscard]] ComplexMatrix build_pi(const StateSet& s);

/// sum_m c_m |Psi_m><Psi_m| with c_m = eta_m <Psi_m|Q|Psi_m> clamped into [0, 1].
[[nodiscard]] ComplexMatrix z_star(const ProductOperator& q, const StateSet& s);

struct DeltaValue {
  double value = 0.0;
  bool degenerate = false;
};

/// ||Pi Q Pi - z*||_F / Tr(Pi^2 Q), evaluated on Q / ||Q||. Scale invariant.
[[nodiscard]] DeltaValue delta(const ProductOperator& q, const StateSet& s);

/// Frobenius distance between Q / Tr Q and I / D.
[[nodiscard]] double distance_from_identity(const ProductOperator& q);

/// sqrt((D - 1) / D), the distance of any rank-one operator.
[[nodiscard]] double max_distance(std::size_t total_dim);

/// Rescales a product operator onto distance `r` while keeping it a product.
/// Shrinking mixes every party toward I/d by a common amount. Growing first
/// stretches the same line up to the PSD boundary, then moves parties one at a
/// time toward the projector on their top eigenvector. Locals come back with
/// Tr Q_a = d_a.
[[nodiscard]] ProductOperator project_to_distance(const ProductOperator& q, double r);

struct WeightedTerm {
  ComplexMatrix m;
  double t = 1.0;
};

/// sum_l ||M_l||^2 / t_l - ||sum_l M_l||^2 / sum_l t_l. Never negative in exact arithmetic.
[[nodiscard]] double appendix_b_gap(std::span<const WeightedTerm> terms);

/// ||Pi Q Pi - sum_m eta_m <Psi_m|Q|Psi_m> Psi_m||_F at the operator's own scale;
/// equals Tr(Pi^2 Q) * Delta(Q) whenever no clamping occurs.
[[nodiscard]] double offdiagonal_mass(const ProductOperator& q, const StateSet& s);

/// Checks the segment inequality for Q(y) = (1 - y) Q_p + y Q_s, where the two
/// operators differ on at most one party (so Q(y) stays a product).
[[nodiscard]] bool lemma1_inequality_check(const ProductOperator& q_p, const ProductOperator& q_s,
                                           double y, const StateSet& s);

struct OptimizerOptions {
  std::size_t r_steps = 21;
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  std::size_t penalty_stages = 3;
  double penalty_initial = 1e2;
  double penalty_growth = 10.0;
  std::size_t max_iters = 300;
  double tol = 1e-10;
  std::size_t refine_levels = 2;
  std::size_t refine_points = 5;
  double sigma_min = 0.05;
  double sigma_max = 1.0;
  /// 0 picks the hardware concurrency.
  std::size_t threads = 1;
};

struct DeltaREstimate {
  double r = 0.0;
  double delta = 0.0;
  /// Whether the best restart's final local solve met its convergence test.
  bool converged = true;
  std::size_t restarts = 0;
  std::size_t best_restart = 0;
  /// Distance of the best point before the terminal projection.
  double r_before_projection = 0.0;
};

/// Best found min of delta over product PSD Q at distance r. Deterministic in
/// opts.seed; `grid_index` separates the random streams of different grid points.
[[nodiscard]] DeltaREstimate delta_R(const StateSet& s, double r, const OptimizerOptions& opts,
                                     std::uint64_t grid_index = 0);

struct BoundResult {
  /// Sorted by r; refinement points are merged in.
  std::vector<double> r_grid;
  std::vector<double> delta_r;
  std::vector<bool> converged;
  std::vector<std::size_t> grid_index;
  double p_err_lower = 0.0;
  double argmax_r = 0.0;
  std::size_t argmax_grid_index = 0;
  std::size_t restarts_used = 0;
  bool all_converged = true;
};

[[nodiscard]] BoundResult lower_bound(const StateSet& s, const OptimizerOptions& opts = {});

/// Delta^2 and the distance penalty as smooth functions of the stacked factor
/// parameters. For each party the lower triangle of L_a (row-major, i >= j)
/// is stored as (re, im) pairs; Q_a = L_a^dagger L_a.
class DeltaObjective {
 public:
  explicit DeltaObjective(const StateSet& s);

  [[nodiscard]] std::size_t num_parameters() const { return num_params_; }
  [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }

  [[nodiscard]] std::vector<ComplexMatrix> factors(std::span<const double> x) const;
  [[nodiscard]] std::vector<double> parameters(const std::vector<ComplexMatrix>& factors) const;
  [[nodiscard]] ProductOperator to_operator(std::span<const double> x) const;

  /// Delta^2 (unclamped z, at the operator's own scale). Writes the gradient when
  /// `grad` is non-empty.
  double delta_squared(std::span<const double> x, std::span<double> grad = {}) const;
  /// R^2 = prod_a p_a - 1/D.
  double distance_squared(std::span<const double> x, std::span<double> grad = {}) const;
  /// Delta^2 + weight * (R^2 - target_r^2)^2.
  double penalized(std::span<const double> x, double target_r, double weight,
                   std::span<double> grad = {}) const;

 private:
  double evaluate(std::span<const double> x, bool with_delta, double target_r, double weight,
                  std::span<double> grad) const;
  void accumulate_factor_gradient(const std::vector<ComplexMatrix>& factors,
                                  const std::vector<ComplexMatrix>& local_grads,
                                  std::span<double> grad) const;

  std::vector<std::size_t> dims_;
  std::size_t total_dim_ = 1;
  std::size_t num_params_ = 0;
  ComplexMatrix psi_;  // D x N, columns are the member kets
  Eigen::VectorXd eta_;
};

}  // namespace loccert
