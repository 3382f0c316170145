#include "chipart/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace chipart {

namespace {

using cplx = std::complex<double>;

constexpr int kMaxSweeps = 200;
constexpr double kUpdateTolerance = 1e-13;
constexpr double kResidualTolerance = 1e-8;

struct Evaluation {
  cplx value;
  cplx derivative;
};

// Horner for p and p' with coefficients c[0] = 1, c[k] = a_k.
Evaluation evaluate(std::span<const double> c, cplx z) {
  cplx value = c[0];
  cplx derivative = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    derivative = derivative * z + value;
    value = value * z + c[k];
  }
  return {value, derivative};
}

double backward_error(std::span<const double> c, cplx z) {
  const double r = std::abs(z);
  double scale = 0.0;
  for (double ck : c) scale = scale * r + std::abs(ck);
  const double value = std::abs(evaluate(c, z).value);
  return scale > 0.0 ? value / scale : value;
}

// Disjoint-set labels over roots whose inclusion discs
// |w - z_k| <= n |p(z_k) / p'(z_k)| intersect.
std::vector<int> inclusion_groups(std::span<const double> c, std::span<const cplx> z) {
  const std::size_t n = z.size();
  std::vector<double> radius(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [value, derivative] = evaluate(c, z[k]);
    radius[k] = derivative == 0.0 ? (value == 0.0 ? 0.0 : HUGE_VAL)
                                  : static_cast<double>(n) * std::abs(value / derivative);
  }
  std::vector<int> label(n);
  for (std::size_t k = 0; k < n; ++k) label[k] = static_cast<int>(k);
  auto find = [&](int k) {
    while (label[static_cast<std::size_t>(k)] != k) k = label[static_cast<std::size_t>(k)];
    return k;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(z[i] - z[j]) <= radius[i] + radius[j]) {
        const int a = find(static_cast<int>(i));
        const int b = find(static_cast<int>(j));
        label[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) label[k] = find(static_cast<int>(k));
  return label;
}

std::vector<double> derivative_coeffs(std::span<const double> c, int order) {
  std::vector<double> d(c.begin(), c.end());
  for (int o = 0; o < order; ++o) {
    const std::size_t deg = d.size() - 1;
    std::vector<double> next(deg);
    for (std::size_t k = 0; k < deg; ++k) next[k] = d[k] * static_cast<double>(deg - k);
    d = std::move(next);
  }
  return d;
}

void refine_cluster(std::span<const double> c, std::vector<cplx>& z,
                    std::span<const std::size_t> members) {
  const int m = static_cast<int>(members.size());
  cplx centroid = 0.0;
  double extent = 0.0;
  for (std::size_t k : members) centroid += z[k];
  centroid /= static_cast<double>(m);
  for (std::size_t k : members) extent = std::max(extent, std::abs(z[k] - centroid));

  const std::vector<double> d = derivative_coeffs(c, m - 1);
  cplx w = centroid;
  for (int it = 0; it < 50; ++it) {
    const auto [value, derivative] = evaluate(d, w);
    if (value == 0.0 || derivative == 0.0) break;
    const cplx step = value / derivative;
    w -= step;
    if (std::abs(step) <= kUpdateTolerance * std::max(std::abs(w), 1e-300)) break;
  }
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return;
  if (std::abs(w - centroid) > 2.0 * extent) return;
  if (!(backward_error(c, w) < kResidualTolerance)) return;
  for (std::size_t k : members) z[k] = w;
}

}  // namespace

std::string_view to_string(OracleClass c) {
  switch (c) {
    case OracleClass::Stable: return "Stable";
    case OracleClass::Unstable: return "Unstable";
    case OracleClass::Indeterminate: return "Indeterminate";
  }
  return "?";
}

OracleClass classify(double max_real_part, double margin) {
  if (max_real_part < -margin) return OracleClass::Stable;
  if (max_real_part > margin) return OracleClass::Unstable;
  return OracleClass::Indeterminate;
}

OracleClass classify(std::span<const cplx> roots, double margin) {
  double max_re = -HUGE_VAL;
  for (const cplx& z : roots) max_re = std::max(max_re, z.real());
  return classify(max_re, margin);
}

RootReport find_roots(const Polynomial<double>& p, double margin) {
  const int n = p.degree();
  std::vector<double> c(static_cast<std::size_t>(n + 1));
  c[0] = 1.0;
  double max_abs = 0.0;
  for (int k = 1; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = p.coeff(k);
    max_abs = std::max(max_abs, std::abs(p.coeff(k)));
  }

  // Initial guesses on the Cauchy bound circle. The phase offset is an
  // irrational fraction of a turn so clusters on the axes are not hit
  // symmetrically.
  const double radius = 1.0 + max_abs;
  const double offset = (std::numbers::sqrt2 - 1.0) * std::numbers::pi / n;
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    z[static_cast<std::size_t>(k)] =
        std::polar(radius, 2.0 * std::numbers::pi * k / n + offset);
  }

  std::vector<bool> done(static_cast<std::size_t>(n), false);
  int sweeps = 0;
  bool converged = false;
  while (sweeps < kMaxSweeps && !converged) {
    ++sweeps;
    converged = true;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (done[k]) continue;
      const auto [value, derivative] = evaluate(c, z[k]);
      if (value == 0.0) {
        done[k] = true;
        continue;
      }
      cplx repulsion = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const cplx ratio = value / derivative;
      cplx step = (derivative == 0.0) ? 1.0 / repulsion : ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        // Nudge off a degenerate configuration.
        step = cplx(0.0, 1e-3 * std::max(1.0, std::abs(z[k])));
      }
      z[k] -= step;
      if (std::abs(step) <= kUpdateTolerance * std::max(std::abs(z[k]), 1e-300)) {
        done[k] = true;
      } else {
        converged = false;
      }
    }
  }

  // Approximations of a multiple root stall at the evaluation noise radius
  // (about eps^(1/m)). Group them by overlapping Newton inclusion discs and
  // move each group onto the simple root of p^(m-1) near its centroid; the
  // move is bounded by the group's extent.
  const std::vector<int> group = inclusion_groups(c, z);
  std::vector<bool> in_cluster(z.size(), false);
  for (std::size_t g = 0; g < z.size(); ++g) {
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (group[k] == static_cast<int>(g)) members.push_back(k);
    }
    if (members.size() < 2) continue;
    for (std::size_t k : members) in_cluster[k] = true;
    refine_cluster(c, z, members);
  }

  // One Newton step per isolated root, kept only if it lowers the backward
  // error.
  double residual = 0.0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    cplx& root = z[k];
    double err = backward_error(c, root);
    const auto [value, derivative] = evaluate(c, root);
    if (!in_cluster[k] && derivative != 0.0) {
      const cplx polished = root - value / derivative;
      const double polished_err = backward_error(c, polished);
      if (std::isfinite(polished_err) && polished_err < err) {
        root = polished;
        err = polished_err;
      }
    }
    residual = std::max(residual, err);
  }

  if (!converged && !(residual < kResidualTolerance)) {
    throw Error(ErrorKind::NoConvergence,
                "root iteration did not converge (residual " + std::to_string(residual) + ")");
  }

  std::sort(z.begin(), z.end(), [](const cplx& a, const cplx& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  RootReport report;
  report.roots = std::move(z);
  report.max_real_part = -HUGE_VAL;
  for (const cplx& root : report.roots) {
    report.max_real_part = std::max(report.max_real_part, root.real());
  }
  report.margin = margin;
  report.classification = classify(report.max_real_part, margin);
  report.residual = residual;
  report.iterations = sweeps;
  report.converged = converged;
  return report;
}

std::vector<double> monic_from_roots(std::span<const cplx> roots) {
  std::vector<cplx> c{1.0};
  for (const cplx& r : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] -= r * c[k - 1];
  }
  std::vector<double> out;
  out.reserve(roots.size());
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(c[k].real());
  return out;
}

double reconstruction_error(const Polynomial<double>& p, std::span<const cplx> roots) {
  const std::vector<double> rebuilt = monic_from_roots(roots);
  if (static_cast<int>(rebuilt.size()) != p.degree()) return HUGE_VAL;
  double scale = 1.0;
  double err = 0.0;
  for (int k = 1; k <= p.degree(); ++k) {
    scale = std::max(scale, std::abs(p.coeff(k)));
    err = std::max(err, std::abs(rebuilt[static_cast<std::size_t>(k - 1)] - p.coeff(k)));
  }
  return err / scale;
}

}  // namespace chipart
