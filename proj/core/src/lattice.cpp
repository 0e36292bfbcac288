#include "spectraljet/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "spectraljet/errors.hpp"
#include "spectraljet/format.hpp"
#include "spectraljet/parallel.hpp"

namespace spectraljet {

namespace {

AngleDistance from_b(WickB b) {
  AngleDistance d;
  d.radians = b.sign == 0 ? std::numbers::pi / 2 : std::acos(std::clamp(b.value, -1.0, 1.0));
  if (b.sign > 0 && b.square == 1) d.radians = 0.0;
  d.exact_cos = std::move(b);
  return d;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::mt19937_64 task_rng(std::uint64_t seed, std::uint64_t task) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(task), static_cast<std::uint32_t>(task >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

AngleDistance angle_distance(const MultiIndex& alpha, const MultiIndex& beta) {
  return from_b(wick_b(alpha, beta));
}

bool is_orthogonal(const MultiIndex& alpha, const MultiIndex& beta) {
  return !pair_profile(alpha, beta).even_total();
}

std::vector<int> coset_of(const MultiIndex& alpha) { return alpha.parity(); }

Comparison distance_comparison_check(const MultiIndex& alpha, const MultiIndex& beta) {
  require_same_dim(alpha, beta);
  const int total = alpha.degree() + beta.degree();
  if (total < 1) throw ValidationError("distance_comparison_check: needs |alpha|+|beta| >= 1");
  const int d0 = symmetric_difference_size(alpha, beta);
  const WickB b = wick_b(alpha, beta);
  // delta = 1/4 kept rational so the comparison is exact
  const BigRational rhs = 1 - BigRational(d0, 4 * total);
  Comparison c;
  c.lhs = std::abs(b.value);
  c.rhs = rhs.convert_to<double>();
  c.holds = b.square <= rhs * rhs;
  c.admissible_delta = d0 == 0 ? std::numeric_limits<double>::infinity()
                               : (1.0 - c.lhs) * total / d0;
  return c;
}

LatticeStabilization stabilization_scan(const MultiIndex& alpha, const MultiIndex& beta, int j,
                                        int k_max) {
  const BStabilization scan = b_stabilization_scan(alpha, beta, j, k_max);
  LatticeStabilization out;
  for (const auto& b : scan.diagonal) out.diagonal.push_back(from_b(b));
  for (const auto& b : scan.one_sided) out.one_sided.push_back(from_b(b));
  out.limit = from_b(scan.diagonal_limit);
  out.stripped_limit = from_b(scan.stripped_limit);
  // |d - pi/2| grows exactly when B^2 grows
  out.contraction = scan.monotone;
  out.diagonal_gap = std::abs(out.diagonal.back().radians - out.limit.radians);
  out.one_sided_gap = std::abs(out.one_sided.back().radians - std::numbers::pi / 2);
  return out;
}

std::vector<TripleSample> sample_triples(int n, int max_degree, std::size_t count,
                                         std::uint64_t seed) {
  const std::vector<MultiIndex> pool = all_multi_indices(n, max_degree);
  std::vector<TripleSample> out(count, TripleSample{MultiIndex(n), MultiIndex(n), MultiIndex(n)});
  parallel_for(count, [&](std::size_t i) {
    auto rng = task_rng(seed, i);
    TripleSample& s = out[i];
    s.alpha = pool[draw_below(rng, pool.size())];
    s.beta = pool[draw_below(rng, pool.size())];
    s.gamma = pool[draw_below(rng, pool.size())];
    s.d_ab = angle_distance(s.alpha, s.beta).radians;
    s.d_bc = angle_distance(s.beta, s.gamma).radians;
    s.d_ac = angle_distance(s.alpha, s.gamma).radians;
    s.triangle_slack = std::min({s.d_ab + s.d_bc - s.d_ac, s.d_ab + s.d_ac - s.d_bc,
                                 s.d_ac + s.d_bc - s.d_ab});
    if (s.alpha.degree() + s.beta.degree() > 0) {
      const Comparison c = distance_comparison_check(s.alpha, s.beta);
      s.comparison_lhs = c.lhs;
      s.comparison_rhs = c.rhs;
    } else {
      s.comparison_lhs = s.comparison_rhs = 1.0;
    }
  });
  return out;
}

std::string lattice_csv(const std::vector<TripleSample>& samples) {
  std::ostringstream os;
  os << "alpha,beta,gamma,d_ab,d_bc,d_ac,triangle_slack,comparison_lhs,comparison_rhs\n";
  for (const auto& s : samples) {
    os << '"' << s.alpha.to_string() << "\",\"" << s.beta.to_string() << "\",\""
       << s.gamma.to_string() << "\"," << fmt17(s.d_ab) << ',' << fmt17(s.d_bc) << ','
       << fmt17(s.d_ac) << ',' << fmt17(s.triangle_slack) << ',' << fmt17(s.comparison_lhs)
       << ',' << fmt17(s.comparison_rhs) << '\n';
  }
  return os.str();
}

MetricReport verify_metric_axioms(int n, int max_degree, std::size_t sample_count,
                                  std::uint64_t seed) {
  if (sample_count < 1) throw ValidationError("verify_metric_axioms: sample_count must be >= 1");
  const auto samples = sample_triples(n, max_degree, sample_count, seed);

  struct Flags {
    bool symmetry = true, identity = true, orthogonality = true, comparison = true,
         stabilization = true;
    double delta = std::numeric_limits<double>::infinity();
  };
  std::vector<Flags> flags(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    const TripleSample& s = samples[i];
    Flags& f = flags[i];
    const MultiIndex* pts[3] = {&s.alpha, &s.beta, &s.gamma};
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const MultiIndex& x = *pts[p];
        const MultiIndex& y = *pts[q];
        const WickB bxy = wick_b(x, y);
        const WickB byx = wick_b(y, x);
        if (bxy.sign != byx.sign || bxy.square != byx.square) f.symmetry = false;
        const bool unit = bxy.sign > 0 && bxy.square == 1;
        if (unit != (x == y)) f.identity = false;
        const bool orth = is_orthogonal(x, y);
        if (orth != (coset_of(x) != coset_of(y)) || orth != (bxy.sign == 0) ||
            (orth && angle_distance(x, y).radians != std::numbers::pi / 2)) {
          f.orthogonality = false;
        }
        if (x.degree() + y.degree() > 0) {
          const Comparison c = distance_comparison_check(x, y);
          if (!c.holds) f.comparison = false;
          f.delta = std::min(f.delta, c.admissible_delta);
        }
      }
    }
    auto rng = task_rng(seed ^ 0x9e3779b97f4a7c15ULL, i);
    const int j = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n)));
    const BStabilization scan = b_stabilization_scan(s.alpha, s.beta, j, 3);
    if (!scan.monotone || !scan.equality_rule) f.stabilization = false;
  });

  MetricReport r;
  r.samples = samples.size();
  r.worst_slack = std::numeric_limits<double>::infinity();
  r.min_admissible_delta = std::numeric_limits<double>::infinity();
  r.max_admissible_delta = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    const auto& f = flags[i];
    r.symmetry_violations += !f.symmetry;
    r.identity_violations += !f.identity;
    r.orthogonality_violations += !f.orthogonality;
    r.comparison_violations += !f.comparison;
    r.stabilization_violations += !f.stabilization;
    if (s.triangle_slack < -kTriangleTolerance) ++r.triangle_violations;
    if (s.triangle_slack < r.worst_slack) {
      r.worst_slack = s.triangle_slack;
      r.worst_triple = s.alpha.label() + " " + s.beta.label() + " " + s.gamma.label();
    }
    if (std::isfinite(f.delta)) {
      r.min_admissible_delta = std::min(r.min_admissible_delta, f.delta);
      r.max_admissible_delta = std::max(r.max_admissible_delta, f.delta);
    }
  }
  return r;
}

}  // namespace spectraljet
