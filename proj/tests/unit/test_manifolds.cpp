#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "spectraljet/errors.hpp"
#include "spectraljet/manifolds.hpp"
#include "spectraljet/wick.hpp"

using namespace spectraljet;

namespace {

MultiIndex M(std::initializer_list<int> l, int n) { return MultiIndex::from_indices(l, n); }

std::vector<int> joined(const MultiIndex& a, const MultiIndex& b) {
  auto e = a.counts();
  e.insert(e.end(), b.counts().begin(), b.counts().end());
  return e;
}

// Heat kernel of the round sphere from the ambient inner product of the two points.
double sphere_reference(int n, double a, double t, const std::vector<double>& x,
                        const std::vector<double>& y) {
  auto embed = [&](const std::vector<double>& p) {
    double r = 0.0;
    for (double v : p) r += v * v;
    r = std::sqrt(r);
    std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
    out[0] = std::cos(r / a);
    for (int i = 0; i < n; ++i) out[i + 1] = r > 0 ? std::sin(r / a) * p[i] / r : 0.0;
    return out;
  };
  const auto X = embed(x), Y = embed(y);
  double c = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) c += X[i] * Y[i];
  c = std::clamp(c, -1.0, 1.0);
  const double theta = std::acos(c);
  const double vol = n == 2 ? 4 * std::numbers::pi * a * a : 2 * std::numbers::pi * std::numbers::pi * a * a * a;
  double sum = 0.0;
  for (int l = 0; l < 400; ++l) {
    double z, mult, lam;
    if (n == 2) {
      z = std::legendre(l, c);
      mult = 2 * l + 1;
      lam = l * (l + 1.0);
    } else {
      z = theta < 1e-9 ? 1.0 : std::sin((l + 1) * theta) / ((l + 1) * std::sin(theta));
      mult = (l + 1.0) * (l + 1.0);
      lam = l * (l + 2.0);
    }
    sum += mult * std::exp(-lam * t / (a * a)) * z;
  }
  return sum / vol;
}

}  // namespace

TEST(Models, Spectra) {
  const auto s2 = SpectralModel::sphere(2, 2.0);
  const auto s3 = SpectralModel::sphere(3, 1.0);
  EXPECT_DOUBLE_EQ(s2.sphere_eigenvalue(3), 12.0 / 4.0);
  EXPECT_DOUBLE_EQ(s2.sphere_multiplicity(3), 7.0);
  EXPECT_DOUBLE_EQ(s3.sphere_eigenvalue(3), 15.0);
  EXPECT_DOUBLE_EQ(s3.sphere_multiplicity(3), 16.0);
  EXPECT_NEAR(s3.volume(), 2 * std::numbers::pi * std::numbers::pi, 1e-14);
  EXPECT_NEAR(SpectralModel::torus({1.0, 1.3}).volume(), 4 * std::numbers::pi * std::numbers::pi * 1.3, 1e-13);
  EXPECT_EQ(SpectralModel::from_spec("sphere2", 2.0, {}).dim(), 2);
  EXPECT_EQ(SpectralModel::from_spec("torus", 1.0, {1.0, 1.3}).id(), "torus(1,1.3)");
  EXPECT_THROW(SpectralModel::from_spec("klein", 1.0, {}), ValidationError);
  EXPECT_THROW(SpectralModel::sphere(4, 1.0), ValidationError);
  EXPECT_THROW(SpectralModel::circle(-1.0), ValidationError);
}

TEST(Jets, CircleExample) {
  const auto c = SpectralModel::circle(1.0);
  const double v = normalized_jet(c, 0.01, M({1}, 1), M({1}, 1));
  EXPECT_NEAR(v, 1.0, 1e-6);
  EXPECT_NEAR(std::sqrt(4 * std::numbers::pi * 0.01) * 0.02 * heat_kernel_diag_jet(c, 0.01, M({1}, 1), M({1}, 1)),
              1.0, 1e-6);
}

TEST(Jets, OddVanishing) {
  for (const auto& model : {SpectralModel::circle(1.0), SpectralModel::torus({1.0, 1.3}),
                            SpectralModel::sphere(2, 1.0), SpectralModel::sphere(3, 1.0)}) {
    const int n = model.dim();
    EXPECT_EQ(heat_kernel_diag_jet(model, 0.05, M({1}, n), MultiIndex(n)), 0.0) << model.id();
    EXPECT_NEAR(normalized_jet(model, 0.05, M({1, 1}, n), M({1}, n)), 0.0, 1e-12) << model.id();
  }
  EXPECT_LT(std::abs(normalized_jet(SpectralModel::torus({1.0, 1.3}), 0.01, M({1, 2}, 2), M({1, 1}, 2))), 1e-8);
}

TEST(Jets, Symmetry) {
  for (const auto& model : {SpectralModel::torus({1.0, 1.3}), SpectralModel::sphere(3, 1.0)}) {
    const auto pool = all_multi_indices(model.dim(), 3);
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        const double ab = heat_kernel_diag_jet(model, 0.05, a, b);
        const double ba = heat_kernel_diag_jet(model, 0.05, b, a);
        EXPECT_NEAR(ab, ba, 1e-12 * std::max(1.0, std::abs(ab))) << a.label() << b.label();
      }
    }
  }
}

TEST(Jets, DiagonalPositiveAndDecreasing) {
  const std::vector<double> o3(3, 0.0), o2(2, 0.0);
  double prev3 = 1e300, prev2 = 1e300;
  for (double t : {0.01, 0.02, 0.05, 0.1, 0.3, 1.0}) {
    const double h3 = heat_kernel(SpectralModel::sphere(3, 1.0), t, o3, o3);
    const double h2 = heat_kernel(SpectralModel::torus({1.0, 1.3}), t, o2, o2);
    EXPECT_GT(h3, 0.0);
    EXPECT_LT(h3, prev3);
    EXPECT_LT(h2, prev2);
    prev3 = h3;
    prev2 = h2;
  }
  EXPECT_THROW(heat_kernel_diag_jet(SpectralModel::sphere(3, 1.0), 0.0, MultiIndex(3), MultiIndex(3)), DomainError);
  EXPECT_THROW(heat_kernel_diag_jet(SpectralModel::circle(1.0), -1.0, MultiIndex(1), MultiIndex(1)), DomainError);
}

TEST(Jets, SphereKernelMatchesAmbientFormula) {
  for (int n : {2, 3}) {
    const double a = n == 2 ? 2.0 : 1.0;
    const auto model = SpectralModel::sphere(n, a);
    std::vector<double> x(n, 0.1), y(n, -0.05);
    y[0] = 0.3;
    for (double t : {0.05, 0.2}) {
      const double ref = sphere_reference(n, a, t, x, y);
      EXPECT_NEAR(heat_kernel(model, t, x, y), ref, 1e-12 * ref);
    }
  }
}

TEST(Jets, SphereJetsMatchFiniteDifferences) {
  const double t = 0.1;
  for (int n : {2, 3}) {
    const auto model = SpectralModel::sphere(n, 1.0);
    auto f = [&](const std::vector<double>& p) {
      const std::vector<double> x(p.begin(), p.begin() + n), y(p.begin() + n, p.end());
      return heat_kernel(model, t, x, y);
    };
    const std::vector<double> origin(2 * static_cast<std::size_t>(n), 0.0);
    const auto pool = all_multi_indices(n, 2);
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        const int deg = a.degree() + b.degree();
        if (deg == 0 || deg > 3) continue;
        const double scale = normalization_factor(n, t, deg);
        const double jet = heat_kernel_diag_jet(model, t, a, b);
        const double ref = oracle::mixed_fd(f, origin, joined(a, b), 0.01);
        EXPECT_NEAR(scale * jet, scale * ref, 1e-5) << "n=" << n << " " << a.label() << b.label();
      }
    }
  }
}

TEST(Jets, SphereFourthJetsMatchFiniteDifferences) {
  const double t = 0.1;
  const auto model = SpectralModel::sphere(2, 1.0);
  auto f = [&](const std::vector<double>& p) {
    const std::vector<double> x{p[0], p[1]}, y{p[2], p[3]};
    return heat_kernel(model, t, x, y);
  };
  const std::vector<double> origin(4, 0.0);
  for (const auto& [a, b] : std::vector<std::pair<MultiIndex, MultiIndex>>{
           {M({1, 1}, 2), M({2, 2}, 2)}, {M({1, 2}, 2), M({1, 2}, 2)}, {M({1}, 2), M({1, 2, 2}, 2)}}) {
    const double scale = normalization_factor(2, t, 4);
    EXPECT_NEAR(scale * heat_kernel_diag_jet(model, t, a, b),
                scale * oracle::mixed_fd(f, origin, joined(a, b), 0.02), 1e-4)
        << a.label() << b.label();
  }
}

TEST(Jets, TorusHomogeneity) {
  const auto torus = SpectralModel::torus({1.0, 1.3});
  const std::vector<double> p{0.7, -2.1}, q{3.0, 0.4}, o{0.0, 0.0};
  for (const auto& a : all_multi_indices(2, 3)) {
    for (const auto& b : all_multi_indices(2, 3)) {
      const double base = heat_kernel_diag_jet(torus, 0.02, a, b);
      // eigenfunction sums away from the origin cancel at the natural scale of the jet
      const double tol = 1e-12 / normalization_factor(2, 0.02, a.degree() + b.degree());
      EXPECT_NEAR(heat_kernel_jet_at(torus, 0.02, a, b, o).value, base, tol);
      EXPECT_NEAR(heat_kernel_jet_at(torus, 0.02, a, b, p).value, base, tol);
      EXPECT_NEAR(heat_kernel_jet_at(torus, 0.02, a, b, q).value, base, tol);
    }
  }
  EXPECT_THROW(heat_kernel_jet_at(SpectralModel::sphere(2, 1.0), 0.1, MultiIndex(2), MultiIndex(2), o),
               ValidationError);
}

TEST(Embedding, InnerProductsMatchKernel) {
  const auto torus = SpectralModel::torus({1.0, 1.3});
  const double t = 0.1;
  const std::vector<double> x{0.2, -0.4}, y{0.5, 0.1};
  const auto px = explicit_embedding(torus, t, x, 40);
  const auto py = explicit_embedding(torus, t, y, 40);
  double dot = 0.0;
  for (std::size_t i = 0; i < px.size(); ++i) dot += px[i] * py[i];
  const double ref = gram_scale(2, t) * (heat_kernel(torus, t, x, y) - 1.0 / torus.volume());
  EXPECT_NEAR(dot, ref, 1e-12 * std::abs(ref));
}

TEST(Embedding, DerivativeGramMatchesJets) {
  const auto circle = SpectralModel::circle(1.0);
  const double t = 0.05, h = 1e-3;
  auto d = [&](double x0) {
    std::vector<double> out;
    const auto plus = explicit_embedding(circle, t, std::vector<double>{x0 + h}, 60);
    const auto minus = explicit_embedding(circle, t, std::vector<double>{x0 - h}, 60);
    const auto plus2 = explicit_embedding(circle, t, std::vector<double>{x0 + 2 * h}, 60);
    const auto minus2 = explicit_embedding(circle, t, std::vector<double>{x0 - 2 * h}, 60);
    for (std::size_t i = 0; i < plus.size(); ++i) {
      out.push_back((8 * (plus[i] - minus[i]) - (plus2[i] - minus2[i])) / (12 * h));
    }
    return out;
  };
  const auto v = d(0.3);
  double g = 0.0;
  for (double c : v) g += c * c;
  EXPECT_NEAR(g, gram_entry(circle, t, M({1}, 1), M({1}, 1)), 1e-8);
  EXPECT_THROW(explicit_embedding(SpectralModel::sphere(2, 1.0), t, std::vector<double>{0.0, 0.0}, 3),
               ValidationError);
}

TEST(Gram, Normalizations) {
  EXPECT_NEAR(gram_scale(3, 0.1), 2 * std::pow(4 * std::numbers::pi, 1.5) * std::pow(0.1, 2.5), 1e-15);
  EXPECT_NEAR(normalization_factor(2, 0.1, 5), 4 * std::numbers::pi * 0.1 * 0.04, 1e-15);
  const auto s3 = SpectralModel::sphere(3, 1.0);
  const auto a = M({1, 1}, 3), b = M({2, 2}, 3);
  EXPECT_NEAR(normalized_jet(s3, 0.05, a, b),
              normalization_factor(3, 0.05, 4) * heat_kernel_diag_jet(s3, 0.05, a, b), 1e-14);
  EXPECT_NEAR(gram_entry(s3, 0.05, a, b), gram_scale(3, 0.05) * heat_kernel_diag_jet(s3, 0.05, a, b), 1e-12);
}

TEST(Gram, NormalizedJetsApproachWick) {
  const auto circle = SpectralModel::circle(1.0);
  for (const auto& a : all_multi_indices(1, 3)) {
    for (const auto& b : all_multi_indices(1, 3)) {
      EXPECT_NEAR(normalized_jet(circle, 0.01, a, b), wick_a(a, b).to_double(), 1e-6) << a.label() << b.label();
    }
  }
  const auto s3 = SpectralModel::sphere(3, 1.0);
  EXPECT_NEAR(normalized_jet(s3, 0.001, M({1, 1}, 3), M({1, 1}, 3)), 3.0, 0.02);
  EXPECT_NEAR(normalized_diagonal(s3, 0.001), 1.001, 1e-4);
}

TEST(Truncation, StabilityExamples) {
  const auto circle = SpectralModel::circle(1.0);
  const auto s = truncation_stability(circle, 0.01, M({1, 1}, 1), M({1, 1}, 1));
  EXPECT_LT(s.delta, 1e-10 * std::abs(s.value));
  const auto s3 = SpectralModel::sphere(3, 1.0);
  const auto q = truncation_stability(s3, 0.05, M({1, 1}, 3), M({2, 2}, 3));
  EXPECT_LT(q.delta * normalization_factor(3, 0.05, 4), 1e-9);
  EXPECT_GT(q.cutoff, 0);
  const auto r = truncation_stability(s3, 1.0, M({1}, 3), M({1}, 3));
  EXPECT_LT(r.delta, 1e-14);
}

TEST(Truncation, FixedCutoffAndCaps) {
  const auto s3 = SpectralModel::sphere(3, 1.0);
  const auto a = M({1}, 3);
  const auto fixed = heat_kernel_jet(s3, 0.5, a, a, TruncationPolicy::fixed(60));
  const auto tail = heat_kernel_jet(s3, 0.5, a, a);
  EXPECT_EQ(fixed.cutoff, 60);
  EXPECT_NEAR(fixed.value, tail.value, 1e-13 * tail.value);
  TruncationPolicy tiny;
  tiny.sphere_cap = 3;
  EXPECT_THROW(heat_kernel_jet(s3, 0.001, a, a, tiny), CutoffError);
  TruncationPolicy tiny_torus;
  tiny_torus.torus_cap = 2;
  EXPECT_THROW(heat_kernel_jet(SpectralModel::circle(1.0), 0.001, M({1}, 1), M({1}, 1), tiny_torus), CutoffError);
  EXPECT_THROW(heat_kernel_jet(s3, 0.1, MultiIndex::from_counts({5, 0, 0}), MultiIndex::from_counts({4, 0, 0})),
               DomainError);
}

TEST(Truncation, GaussDifference) {
  const auto s3 = SpectralModel::sphere(3, 1.0);
  const double t = 0.05;
  const auto a1 = M({1, 2}, 3), b1 = M({1, 2}, 3), a2 = M({1, 1}, 3), b2 = M({2, 2}, 3);
  const double direct = heat_kernel_diag_jet(s3, t, a1, b1) - heat_kernel_diag_jet(s3, t, a2, b2);
  const double diff = heat_kernel_jet_difference(s3, t, a1, b1, a2, b2).value;
  EXPECT_NEAR(diff, direct, 1e-9 * std::abs(heat_kernel_diag_jet(s3, t, a1, b1)));
}
