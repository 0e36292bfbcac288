#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "spectraljet/multiindex.hpp"

namespace spectraljet {

struct TruncationPolicy {
  enum class Mode { relative_tail, fixed_cutoff };

  Mode mode = Mode::relative_tail;
  double eps = 1e-14;
  long cutoff = 0;
  double rho = 0.5;
  long sphere_cap = 5000;
  long torus_cap = 200000;

  static TruncationPolicy relative_tail(double eps = 1e-14) {
    TruncationPolicy p;
    p.eps = eps;
    return p;
  }
  static TruncationPolicy fixed(long cutoff) {
    TruncationPolicy p;
    p.mode = Mode::fixed_cutoff;
    p.cutoff = cutoff;
    return p;
  }
  // Order-of-magnitude eigenvalue count t^-(n/2 + rho), for reports only.
  double nominal_count(int n, double t) const;
};

class SpectralModel {
public:
  enum class Kind { circle, torus, sphere };

  static SpectralModel circle(double radius);
  static SpectralModel torus(std::vector<double> radii);
  static SpectralModel sphere(int dim, double radius);
  // "circle", "torus", "sphere2", "sphere3"
  static SpectralModel from_spec(const std::string& name, double radius,
                                 const std::vector<double>& radii);

  Kind kind() const noexcept { return kind_; }
  int dim() const noexcept { return dim_; }
  bool flat() const noexcept { return kind_ != Kind::sphere; }
  double radius() const;
  const std::vector<double>& radii() const noexcept { return radii_; }
  double volume() const;
  std::string id() const;

  // Sphere spectrum: eigenvalue of the degree-l space and its multiplicity.
  double sphere_eigenvalue(long l) const;
  double sphere_multiplicity(long l) const;

private:
  SpectralModel(Kind kind, int dim, std::vector<double> radii)
      : kind_(kind), dim_(dim), radii_(std::move(radii)) {}

  Kind kind_;
  int dim_;
  std::vector<double> radii_;
};

struct JetValue {
  double value = 0.0;
  long cutoff = 0;  // last eigenvalue index summed (per axis for tori)
};

// D_y^beta D_x^alpha H(t,x,y) at x = y = base point.
JetValue heat_kernel_jet(const SpectralModel& model, double t, const MultiIndex& alpha,
                         const MultiIndex& beta, const TruncationPolicy& policy = {});

inline double heat_kernel_diag_jet(const SpectralModel& model, double t, const MultiIndex& alpha,
                                   const MultiIndex& beta, const TruncationPolicy& policy = {}) {
  return heat_kernel_jet(model, t, alpha, beta, policy).value;
}

// Circle/torus only: the same jet from the real eigenfunctions evaluated at `point`.
JetValue heat_kernel_jet_at(const SpectralModel& model, double t, const MultiIndex& alpha,
                            const MultiIndex& beta, std::span<const double> point,
                            const TruncationPolicy& policy = {});

// J(alpha1,beta1) - J(alpha2,beta2), differenced term by term before summation.
JetValue heat_kernel_jet_difference(const SpectralModel& model, double t, const MultiIndex& alpha1,
                                    const MultiIndex& beta1, const MultiIndex& alpha2,
                                    const MultiIndex& beta2, const TruncationPolicy& policy = {});

// H(t,x,y) with x, y in normal coordinates at the base point.
double heat_kernel(const SpectralModel& model, double t, std::span<const double> x,
                   std::span<const double> y, const TruncationPolicy& policy = {});

// (4 pi t)^(n/2) H(t,p,p), constant eigenfunction included.
double normalized_diagonal(const SpectralModel& model, double t,
                           const TruncationPolicy& policy = {});

// 2 (4 pi)^(n/2) t^((n+2)/2)
double gram_scale(int n, double t);
// (4 pi t)^(n/2) (2t)^floor(degree/2)
double normalization_factor(int n, double t, int degree);

double gram_entry(const SpectralModel& model, double t, const MultiIndex& alpha,
                  const MultiIndex& beta, const TruncationPolicy& policy = {});
double normalized_jet(const SpectralModel& model, double t, const MultiIndex& alpha,
                      const MultiIndex& beta, const TruncationPolicy& policy = {});

// Circle/torus: psi_t at `point` using all modes with max |k_i| <= modes.
std::vector<double> explicit_embedding(const SpectralModel& model, double t,
                                       std::span<const double> point, int modes);

struct JetGram {
  double t = 0.0;
  std::vector<MultiIndex> jets;
  std::vector<std::vector<double>> entries;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;

  bool positive_semidefinite(double tol = 1e-9) const { return min_eigenvalue >= -tol * std::max(1.0, max_eigenvalue); }
};

JetGram jet_gram(const SpectralModel& model, double t, int max_order,
                 const TruncationPolicy& policy = {});

std::vector<std::vector<double>> pullback_metric(const SpectralModel& model, double t,
                                                 const TruncationPolicy& policy = {});

double mean_curvature_proxy(const SpectralModel& model, double t,
                            const TruncationPolicy& policy = {});

// 2t G((i,k,k),(j))
double third_jet_umbilical(const SpectralModel& model, double t, int i, int j, int k,
                           const TruncationPolicy& policy = {});

// G((i,l),(j,k)) - G((i,k),(j,l))
double gauss_curvature_estimate(const SpectralModel& model, double t, int i, int j, int k, int l,
                                const TruncationPolicy& policy = {});

// K (d_il d_jk - d_ik d_jl): the constant-curvature tensor in the convention of
// gauss_curvature_estimate, so R(1,2,2,1) = K.
double constant_curvature_tensor(double sectional, int i, int j, int k, int l);

// Vector field Y = f V_k with f = c0 + sum linear_a x_a + sum quadratic_ab x_a x_b.
struct PolynomialField {
  int k = 1;
  double c0 = 0.0;
  std::vector<double> linear;
  std::vector<std::vector<double>> quadratic;
};

// sum_j <grad_i grad_Y psi_t, grad_j psi_t> for j = 1..n
std::vector<double> levi_civita_components(const SpectralModel& model, double t, int i,
                                           const PolynomialField& field,
                                           const TruncationPolicy& policy = {});
// (d_i f)(p) e_k
std::vector<double> levi_civita_expected(int n, int i, const PolynomialField& field);

// Sphere only: D_y^beta D_x^alpha r^2 at the diagonal, |alpha|+|beta| <= 4.
double squared_distance_jet(const SpectralModel& model, const MultiIndex& alpha,
                            const MultiIndex& beta);
// Sphere only: (grad_i grad_j grad_k grad_l r^2(., p))(p).
double squared_distance_covariant_jet(const SpectralModel& model, int i, int j, int k, int l);
// -(2/3)(R_ikjl + R_iljk) with R_1212 = 1/a^2.
double squared_distance_fourth_target(const SpectralModel& model, int i, int j, int k, int l);

struct StabilityCheck {
  double value = 0.0;
  double doubled = 0.0;
  double delta = 0.0;
  long cutoff = 0;
};

StabilityCheck truncation_stability(const SpectralModel& model, double t, const MultiIndex& alpha,
                                    const MultiIndex& beta, const TruncationPolicy& policy = {});

}  // namespace spectraljet
