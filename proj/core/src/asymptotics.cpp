#include "spectraljet/asymptotics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spectraljet/errors.hpp"
#include "spectraljet/format.hpp"

namespace spectraljet {

LimitFit limit_fit(const std::vector<std::pair<double, double>>& samples, int order) {
  if (order != 1 && order != 2) throw ValidationError("limit_fit: order must be 1 or 2");
  const std::size_t m = samples.size();
  if (m < static_cast<std::size_t>(order + 2)) {
    throw FitError("limit_fit: need at least " + std::to_string(order + 2) + " samples, got " +
                       std::to_string(m),
                   0.0);
  }
  std::vector<double> ts;
  for (const auto& [t, y] : samples) {
    if (!(t > 0.0)) throw FitError("limit_fit: t values must be positive", 0.0);
    ts.push_back(t);
  }
  std::vector<double> sorted = ts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw FitError("limit_fit: t values must be distinct", 0.0);
  }
  const double scale = sorted.back();
  const int p = order + 1;
  Eigen::MatrixXd V(static_cast<Eigen::Index>(m), p);
  Eigen::VectorXd y(static_cast<Eigen::Index>(m));
  for (std::size_t r = 0; r < m; ++r) {
    const double s = samples[r].first / scale;
    double power = 1.0;
    for (int c = 0; c < p; ++c) {
      V(static_cast<Eigen::Index>(r), c) = power;
      power *= s;
    }
    y(static_cast<Eigen::Index>(r)) = samples[r].second;
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(V);
  const auto& sv = svd.singularValues();
  LimitFit fit;
  fit.order = order;
  fit.grid = ts;
  fit.condition = sv(0) / sv(sv.size() - 1);
  if (!std::isfinite(fit.condition) || fit.condition > 1e12) {
    throw FitError("limit_fit: ill-conditioned grid", fit.condition);
  }
  const Eigen::VectorXd coef = V.colPivHouseholderQr().solve(y);
  fit.c0 = coef(0);
  fit.c1 = coef(1) / scale;
  if (order == 2) fit.c2 = coef(2) / (scale * scale);
  const Eigen::VectorXd resid = y - V * coef;
  fit.rms = std::sqrt(resid.squaredNorm() / static_cast<double>(m));
  const double dof = static_cast<double>(m) - p;
  const double sigma2 = resid.squaredNorm() / dof;
  const Eigen::MatrixXd cov = (V.transpose() * V).inverse();
  fit.stderr_c0 = std::sqrt(sigma2 * cov(0, 0));
  return fit;
}

std::vector<double> geometric_grid(double start, double ratio, int count) {
  if (!(start > 0.0) || !(ratio > 0.0) || count < 1) {
    throw ValidationError("t-grid needs start > 0, ratio > 0, count >= 1");
  }
  std::vector<double> grid;
  double t = start;
  for (int i = 0; i < count; ++i) {
    grid.push_back(t);
    t *= ratio;
  }
  return grid;
}

std::vector<double> default_grid() { return geometric_grid(0.1, 0.5, 7); }

LimitFit small_t_fit(std::vector<std::pair<double, double>> samples) {
  if (samples.empty()) throw FitError("small_t_fit: no samples", 0.0);
  std::sort(samples.begin(), samples.end());
  if (samples.size() < 4) {
    LimitFit fit;
    fit.order = 0;
    fit.c0 = samples.front().second;
    fit.grid = {samples.front().first};
    return fit;
  }
  if (samples.size() > 5) samples.resize(5);
  return limit_fit(samples, 2);
}

std::string records_csv(const std::vector<ConvergenceRecord>& records) {
  std::ostringstream os;
  os << "model,alpha,beta,t,raw,normalized,target,abs_err\n";
  for (const auto& r : records) {
    os << '"' << r.model << "\",\"" << r.alpha.to_string() << "\",\"" << r.beta.to_string() << "\","
       << fmt17(r.t) << ',' << fmt17(r.raw_jet) << ',' << fmt17(r.normalized) << ','
       << fmt17(r.target) << ',' << fmt17(r.abs_err) << '\n';
  }
  return os.str();
}

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  std::size_t f = 0;
  for (const auto& c : checks) f += (c.asserted && !c.pass) ? 1 : 0;
  return f;
}

}  // namespace spectraljet
