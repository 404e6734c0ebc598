#include "eddefect/homotopy/solve.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace eddefect {

bool same_point(const VectorXc& a, const VectorXc& b, double tol) {
  return (a - b).norm() <= tol * std::max({1.0, a.norm(), b.norm()});
}

std::vector<PathOutcome> track_all(const Homotopy& homotopy, const TrackerSettings& settings) {
  settings.validate();
  const std::uint64_t paths = homotopy.start().num_paths;
  std::vector<PathOutcome> outcomes(paths);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::uint64_t k = next++; k < paths; k = next++) {
        outcomes[k] = homotopy.track(homotopy.start().solution(k), settings);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, settings.threads), std::max<std::uint64_t>(paths, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return outcomes;
}

SolutionSet solve_system(const std::vector<CPoly>& system, const TrackerSettings& settings) {
  Homotopy homotopy(system, settings.seed, settings.max_paths);
  SolutionSet out;
  out.outcomes = track_all(homotopy, settings);
  out.summary.paths = out.outcomes.size();
  for (std::size_t k = 0; k < out.outcomes.size(); ++k) {
    const auto& o = out.outcomes[k];
    switch (o.status) {
      case PathStatus::Converged: ++out.summary.converged; break;
      case PathStatus::Diverged: ++out.summary.diverged; continue;
      case PathStatus::Stalled: ++out.summary.stalled; continue;
    }
    bool duplicate = false;
    for (const auto& p : out.points) {
      if (same_point(p, o.point, settings.dedup_tol)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    VectorXc values;
    MatrixXc jac;
    homotopy.target().evaluate(o.point, values, &jac);
    Eigen::JacobiSVD<MatrixXc> svd(jac);
    const auto& sv = svd.singularValues();
    SolutionDiagnostics d;
    d.residual = o.final_residual;
    d.jacobian_rank = numerical_rank(jac);
    d.condition = sv.size() == 0 || sv[sv.size() - 1] == 0.0 ? std::numeric_limits<double>::infinity()
                                                              : sv[0] / sv[sv.size() - 1];
    d.path_index = k;
    out.points.push_back(o.point);
    out.diagnostics.push_back(d);
  }
  return out;
}

}  // namespace eddefect
