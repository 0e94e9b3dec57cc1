#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include <ceres/gradient_problem.h>
#include <ceres/gradient_problem_solver.h>

#include "loccert/error_bound.hpp"

namespace loccert {

namespace {

class PenalizedCost final : public ceres::FirstOrderFunction {
 public:
  PenalizedCost(const DeltaObjective& obj, double target, double weight)
      : obj_(obj), target_(target), weight_(weight) {}

  bool Evaluate(const double* parameters, double* cost, double* gradient) const override {
    const std::size_t n = obj_.num_parameters();
    std::span<const double> x(parameters, n);
    std::span<double> g = gradient ? std::span<double>(gradient, n) : std::span<double>();
    *cost = obj_.penalized(x, target_, weight_, g);
    return std::isfinite(*cost);
  }
  int NumParameters() const override { return static_cast<int>(obj_.num_parameters()); }

 private:
  const DeltaObjective& obj_;
  double target_;
  double weight_;
};

struct RestartOutcome {
  double delta = std::numeric_limits<double>::infinity();
  bool converged = false;
  double r_before = 0.0;
};

// Rescales each factor so that Tr Q_a = d_a.
void fix_gauge(const DeltaObjective& obj, std::vector<double>& x) {
  auto L = obj.factors(x);
  for (std::size_t a = 0; a < L.size(); ++a) {
    const double t = L[a].squaredNorm();
    if (t > 0.0) L[a] *= std::sqrt(static_cast<double>(obj.dims()[a]) / t);
  }
  x = obj.parameters(L);
}

RestartOutcome run_restart(const StateSet& s, const DeltaObjective& obj, double r,
                           const OptimizerOptions& opts, std::uint64_t grid_index,
                           std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(grid_index), static_cast<std::uint32_t>(grid_index >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const double sigma =
      opts.restarts > 1
          ? opts.sigma_min + (opts.sigma_max - opts.sigma_min) * static_cast<double>(restart) /
                                 static_cast<double>(opts.restarts - 1)
          : opts.sigma_min;
  std::vector<ComplexMatrix> start;
  for (std::size_t d : obj.dims()) {
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix L = ComplexMatrix::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j <= i; ++j) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        L(i, j) += sigma * Complex(re, im);
      }
    }
    start.push_back(std::move(L));
  }
  std::vector<double> x = obj.parameters(start);

  ceres::GradientProblemSolver::Options options;
  options.max_num_iterations = static_cast<int>(opts.max_iters);
  options.function_tolerance = opts.tol;
  options.gradient_tolerance = opts.tol * 1e-2;
  options.parameter_tolerance = opts.tol;
  options.logging_type = ceres::SILENT;
  options.minimizer_progress_to_stdout = false;

  RestartOutcome out;
  double weight = opts.penalty_initial;
  for (std::size_t stage = 0; stage < std::max<std::size_t>(opts.penalty_stages, 1); ++stage) {
    fix_gauge(obj, x);
    ceres::GradientProblem problem(new PenalizedCost(obj, r, weight));
    ceres::GradientProblemSolver::Summary summary;
    ceres::Solve(options, problem, x.data(), &summary);
    out.converged = summary.termination_type == ceres::CONVERGENCE ||
                    summary.termination_type == ceres::USER_SUCCESS;
    weight *= opts.penalty_growth;
  }

  ProductOperator q = obj.to_operator(x);
  if (!(q.trace() > 0.0)) return out;
  out.r_before = distance_from_identity(q);
  out.delta = delta(project_to_distance(q, r), s).value;
  return out;
}

std::size_t worker_count(const OptimizerOptions& opts, std::size_t items) {
  std::size_t t = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                    : opts.threads;
  return std::max<std::size_t>(1, std::min(t, items));
}

void validate(const OptimizerOptions& opts) {
  if (opts.restarts == 0) throw std::invalid_argument("optimizer: restarts must be >= 1");
  if (opts.max_iters == 0) throw std::invalid_argument("optimizer: max_iters must be >= 1");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("optimizer: tol must be > 0");
  if (!(opts.penalty_initial > 0.0) || !(opts.penalty_growth >= 1.0)) {
    throw std::invalid_argument("optimizer: penalty schedule must be positive and nondecreasing");
  }
  if (!(opts.sigma_min >= 0.0) || !(opts.sigma_max >= opts.sigma_min)) {
    throw std::invalid_argument("optimizer: need 0 <= sigma_min <= sigma_max");
  }
}

}  // namespace

DeltaREstimate delta_R(const StateSet& s, double r, const OptimizerOptions& opts,
                       std::uint64_t grid_index) {
  validate(opts);
  const double r_max = max_distance(s.total_dim());
  if (!(r >= 0.0) || r > r_max * (1.0 + 1e-12)) {
    throw std::invalid_argument("delta_R: R must lie in [0, sqrt((D-1)/D)]");
  }
  r = std::min(r, r_max);
  DeltaREstimate est;
  est.r = r;
  if (r == 0.0) {
    // Only multiples of the identity sit at distance zero.
    est.delta = delta(ProductOperator::identity(s.dims()), s).value;
    return est;
  }

  const DeltaObjective obj(s);
  std::vector<RestartOutcome> outcomes(opts.restarts);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < opts.restarts; k = next++) {
      outcomes[k] = run_restart(s, obj, r, opts, grid_index, k);
    }
  };
  const std::size_t workers = worker_count(opts, opts.restarts);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < outcomes.size(); ++k) {
    if (outcomes[k].delta < outcomes[best].delta) best = k;
  }
  est.delta = std::isfinite(outcomes[best].delta) ? outcomes[best].delta : 0.0;
  est.converged = outcomes[best].converged;
  est.restarts = opts.restarts;
  est.best_restart = best;
  est.r_before_projection = outcomes[best].r_before;
  return est;
}

BoundResult lower_bound(const StateSet& s, const OptimizerOptions& opts) {
  validate(opts);
  if (opts.r_steps < 2) throw std::invalid_argument("lower_bound: r_steps must be >= 2");
  const double r_max = max_distance(s.total_dim());

  struct Point {
    double r;
    std::size_t index;
    DeltaREstimate est;
  };
  std::vector<Point> points;
  auto evaluate = [&](double r, std::size_t index) {
    points.push_back({r, index, delta_R(s, r, opts, index)});
  };
  auto argmax = [&] {
    std::size_t best = 0;
    for (std::size_t k = 1; k < points.size(); ++k) {
      const double a = points[k].est.delta;
      const double b = points[best].est.delta;
      if (a > b || (a == b && points[k].index < points[best].index)) best = k;
    }
    return best;
  };

  const double h0 = r_max / static_cast<double>(opts.r_steps - 1);
  for (std::size_t k = 0; k < opts.r_steps; ++k) {
    const double r = k + 1 == opts.r_steps ? r_max : h0 * static_cast<double>(k);
    evaluate(r, k);
  }

  double h = h0;
  std::size_t next_index = opts.r_steps;
  for (std::size_t level = 0; level < opts.refine_levels; ++level) {
    const double center = points[argmax()].r;
    for (std::size_t i = 0; i < opts.refine_points; ++i) {
      const double offset =
          2.0 * static_cast<double>(i + 1) / static_cast<double>(opts.refine_points + 1) - 1.0;
      const double r = center + h * offset;
      const std::size_t index = next_index++;
      if (r < 0.0 || r > r_max) continue;
      const bool seen = std::any_of(points.begin(), points.end(), [&](const Point& p) {
        return std::abs(p.r - r) < 1e-12;
      });
      if (!seen) evaluate(r, index);
    }
    h /= static_cast<double>(opts.refine_points + 1) / 2.0;
  }

  BoundResult result;
  const Point& top = points[argmax()];
  result.argmax_r = top.r;
  result.argmax_grid_index = top.index;
  result.p_err_lower = std::clamp(0.5 * top.est.delta * top.est.delta, 0.0, 0.5);

  std::stable_sort(points.begin(), points.end(),
                   [](const Point& a, const Point& b) { return a.r < b.r; });
  for (const Point& p : points) {
    result.r_grid.push_back(p.r);
    result.delta_r.push_back(p.est.delta);
    result.converged.push_back(p.est.converged);
    result.grid_index.push_back(p.index);
    result.restarts_used += p.est.restarts;
    result.all_converged = result.all_converged && p.est.converged;
  }
  return result;
}

}  // namespace loccert
