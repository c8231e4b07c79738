#include "bergman/moments.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "bergman/quadrature.hpp"

namespace bergman {

namespace {

const Complex I{0.0, 1.0};
constexpr Eigen::Index kBlock = 512;

/// Runs `evaluate(order)` at doubling orders until `difference(previous,
/// current)` drops below the tolerance.
template <typename Evaluate, typename Difference>
auto adaptive_boundary(const QuadratureOptions& options, Evaluate evaluate,
                       Difference difference) {
  auto previous = evaluate(options.start_order);
  double worst = std::numeric_limits<double>::infinity();
  for (int order = 2 * options.start_order; order <= options.max_order;
       order *= 2) {
    auto current = evaluate(order);
    worst = difference(previous, current);
    previous = std::move(current);
    if (worst <= options.tolerance) return previous;
  }
  if (!(worst <= options.failure_tolerance)) {
    throw Error(ErrorKind::accuracy, "moments",
                "boundary quadrature did not converge (relative change " +
                    std::to_string(worst) + " at order " +
                    std::to_string(options.max_order) + ")",
                worst);
  }
  return previous;
}

double scaled_difference(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                         const Eigen::VectorXd& row_scale,
                         const Eigen::VectorXd& col_scale) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < a.rows(); ++j) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const double s = row_scale(j) * col_scale(k);
      const double d = std::abs(a(j, k) - b(j, k));
      if (d == 0.0) continue;
      worst = std::max(worst, s > 0.0 ? d / s : std::numeric_limits<double>::infinity());
    }
  }
  return worst;
}

Eigen::MatrixXcd moment_block(const Domain& domain, int max_m, int max_n,
                              Complex center, int order) {
  const auto nodes = boundary_quadrature(domain, order);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(max_m + 1, max_n + 1);
  const Eigen::Index q_total = Eigen::Index(nodes.size());
  for (Eigen::Index start = 0; start < q_total; start += kBlock) {
    const Eigen::Index len = std::min(kBlock, q_total - start);
    Eigen::MatrixXcd v(len, max_m + 1), u(len, max_n + 1);
    for (Eigen::Index q = 0; q < len; ++q) {
      const auto& node = nodes[start + q];
      const Complex w = node.z - center;
      const Complex wb = std::conj(w);
      Complex p = node.dz;
      for (int m = 0; m <= max_m; ++m, p *= w) v(q, m) = p;
      Complex r = wb;
      for (int n = 0; n <= max_n; ++n, r *= wb) u(q, n) = r / double(n + 1);
    }
    sum.noalias() += v.transpose() * u;
  }
  return sum / (2.0 * I);
}

Complex element_antiderivative(const BasisElement& e, Complex z,
                               int cut_direction) {
  if (e.has_log_antiderivative()) return branch_log(z - e.center, cut_direction);
  return e.antiderivative(z);
}

/// Integrals of every element along the cut segments (Gauss, `order` nodes
/// per segment).
Eigen::VectorXcd cut_line_integrals(const LogCut& cut,
                                    std::span<const BasisElement> elements,
                                    int order) {
  const auto& rule = cached_gauss_legendre(order);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(Eigen::Index(elements.size()));
  for (const auto& [s0, s1] : cut.segments) {
    const Complex mid = 0.5 * (s0 + s1);
    const Complex half = 0.5 * (s1 - s0);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const Complex z = mid + half * rule.nodes[q];
      for (std::size_t k = 0; k < elements.size(); ++k) {
        out(Eigen::Index(k)) += elements[k](z) * half * rule.weights[q];
      }
    }
  }
  return out;
}

struct SystemEstimate {
  Eigen::MatrixXcd gram;
  Eigen::VectorXcd wbar;
  Eigen::VectorXcd ones;
  double wbar_norm_sq = 0.0;
  double area = 0.0;
};

struct PreparedCuts {
  std::vector<LogCut> cuts;
  std::vector<int> element_cut;  // index into cuts, -1 without log
  std::vector<PieceSplit> splits;
};

PreparedCuts prepare_cuts(const Domain& domain,
                          std::span<const BasisElement> elements) {
  PreparedCuts prepared;
  prepared.element_cut.assign(elements.size(), -1);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (!elements[k].has_log_antiderivative()) continue;
    const Complex apex = elements[k].center;
    int found = -1;
    for (std::size_t c = 0; c < prepared.cuts.size(); ++c) {
      if (prepared.cuts[c].apex == apex) found = int(c);
    }
    if (found < 0) {
      prepared.cuts.push_back(make_log_cut(domain, apex));
      found = int(prepared.cuts.size()) - 1;
      const auto& s = prepared.cuts.back().splits;
      prepared.splits.insert(prepared.splits.end(), s.begin(), s.end());
    }
    prepared.element_cut[k] = found;
  }
  return prepared;
}

SystemEstimate evaluate_system(const Domain& domain,
                               std::span<const BasisElement> elements,
                               const PreparedCuts& prepared, Complex center,
                               int order) {
  const auto nodes = boundary_quadrature(domain, order, prepared.splits);
  const Eigen::Index n = Eigen::Index(elements.size());
  SystemEstimate est;
  est.gram = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXcd wbar_raw = Eigen::VectorXcd::Zero(n);
  Eigen::VectorXcd ones_raw = Eigen::VectorXcd::Zero(n);
  Complex wnorm = 0.0, area_sum = 0.0;

  std::vector<int> directions(elements.size(), 1);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (prepared.element_cut[k] >= 0) {
      directions[k] = prepared.cuts[prepared.element_cut[k]].direction;
    }
  }

  const Eigen::Index q_total = Eigen::Index(nodes.size());
  for (Eigen::Index start = 0; start < q_total; start += kBlock) {
    const Eigen::Index len = std::min(kBlock, q_total - start);
    Eigen::MatrixXcd values(len, n), anti(len, n);
    for (Eigen::Index q = 0; q < len; ++q) {
      const auto& node = nodes[start + q];
      const Complex w = node.z - center;
      const Complex wb = std::conj(w);
      for (Eigen::Index k = 0; k < n; ++k) {
        const auto& e = elements[std::size_t(k)];
        const Complex v = e(node.z);
        values(q, k) = v * node.dz;
        anti(q, k) = std::conj(element_antiderivative(e, node.z, directions[k]));
        wbar_raw(k) += wb * w * v * node.dz;
        ones_raw(k) += wb * v * node.dz;
      }
      wnorm += w * wb * wb * 0.5 * node.dz;
      area_sum += wb * node.dz;
    }
    est.gram.noalias() += anti.transpose() * values;
  }
  est.gram /= 2.0 * I;
  for (std::size_t c = 0; c < prepared.cuts.size(); ++c) {
    const Eigen::VectorXcd line = cut_line_integrals(prepared.cuts[c], elements, order);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (prepared.element_cut[std::size_t(j)] == int(c)) {
        est.gram.row(j) += pi * line.transpose();
      }
    }
  }
  est.wbar = (wbar_raw / (2.0 * I)).conjugate();
  est.ones = (ones_raw / (2.0 * I)).conjugate();
  est.wbar_norm_sq = (wnorm / (2.0 * I)).real();
  est.area = (area_sum / (2.0 * I)).real();
  return est;
}

double estimate_difference(const SystemEstimate& a, const SystemEstimate& b) {
  const Eigen::VectorXd norms =
      b.gram.diagonal().real().cwiseAbs().cwiseSqrt();
  double worst = scaled_difference(a.gram, b.gram, norms, norms);
  const double wn = std::sqrt(std::abs(b.wbar_norm_sq));
  const double an = std::sqrt(std::abs(b.area));
  for (Eigen::Index j = 0; j < norms.size(); ++j) {
    const double dw = std::abs(a.wbar(j) - b.wbar(j));
    const double d1 = std::abs(a.ones(j) - b.ones(j));
    if (dw > 0) worst = std::max(worst, dw / (wn * norms(j)));
    if (d1 > 0) worst = std::max(worst, d1 / (an * norms(j)));
  }
  worst = std::max(worst, std::abs(a.wbar_norm_sq - b.wbar_norm_sq) /
                              std::abs(b.wbar_norm_sq));
  worst = std::max(worst, std::abs(a.area - b.area) / std::abs(b.area));
  return worst;
}

SystemEstimate adaptive_system(const Domain& domain,
                               std::span<const BasisElement> elements,
                               Complex center,
                               const QuadratureOptions& options) {
  const auto prepared = prepare_cuts(domain, elements);
  return adaptive_boundary(
      options,
      [&](int order) {
        return evaluate_system(domain, elements, prepared, center, order);
      },
      estimate_difference);
}

}  // namespace

Complex complex_moment(const Domain& domain, int m, int n, Complex center,
                       const QuadratureOptions& options) {
  if (m < 0 || n < 0) {
    throw Error(ErrorKind::input, "moments", "moment orders must be >= 0");
  }
  const int d = std::max(m, n);
  const MomentTable table(domain, d, center, options);
  return table(m, n);
}

MomentTable::MomentTable(const Domain& domain, int max_degree, Complex center,
                         const QuadratureOptions& options)
    : center_(center) {
  if (max_degree < 0 || max_degree > 64) {
    throw Error(ErrorKind::input, "moments",
                "moment degree must lie in [0, 64]");
  }
  values_ = adaptive_boundary(
      options,
      [&](int order) {
        return moment_block(domain, max_degree, max_degree, center, order);
      },
      [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
        const Eigen::VectorXd s = b.diagonal().real().cwiseAbs().cwiseSqrt();
        return scaled_difference(a, b, s, s);
      });
  // Diagonal moments are real by construction.
  for (Eigen::Index k = 0; k < values_.rows(); ++k) {
    values_(k, k) = values_(k, k).real();
  }
}

void MomentTable::write_csv(std::ostream& out) const {
  out << "m,n,center_re,center_im,re,im\n";
  const auto precision = out.precision(17);
  for (Eigen::Index m = 0; m < values_.rows(); ++m) {
    for (Eigen::Index n = 0; n < values_.cols(); ++n) {
      out << m << ',' << n << ',' << center_.real() << ',' << center_.imag()
          << ',' << values_(m, n).real() << ',' << values_(m, n).imag()
          << '\n';
    }
  }
  out.precision(precision);
}

LogCut make_log_cut(const Domain& domain, Complex apex) {
  LogCut cut;
  cut.apex = apex;
  cut.direction = cut_direction(domain, apex);
  const auto xs = domain.crossings_horizontal(apex.imag());
  std::vector<double> along;
  for (const auto& x : xs) {
    const bool on_ray = cut.direction > 0 ? x.position > apex.real()
                                          : x.position < apex.real();
    if (!on_ray) continue;
    cut.splits.push_back({x.component, x.piece, x.t});
    along.push_back(x.position);
  }
  std::sort(along.begin(), along.end(), [&](double a, double b) {
    return cut.direction > 0 ? a < b : a > b;
  });
  for (std::size_t k = 0; k + 1 < along.size(); ++k) {
    const double mid = 0.5 * (along[k] + along[k + 1]);
    int winding = 0;
    for (const auto& x : xs) {
      if (x.position > mid) winding += x.sign;
    }
    if (winding == 1) {
      cut.segments.emplace_back(Complex(along[k], apex.imag()),
                                Complex(along[k + 1], apex.imag()));
    }
  }
  return cut;
}

Eigen::MatrixXcd area_products(const Domain& domain,
                               std::span<const BasisElement> fs,
                               std::span<const BasisElement> gs,
                               const QuadratureOptions& options) {
  std::vector<BasisElement> all(fs.begin(), fs.end());
  all.insert(all.end(), gs.begin(), gs.end());
  const auto est = adaptive_system(domain, all, domain.centroid(), options);
  const Eigen::Index nf = Eigen::Index(fs.size());
  const Eigen::Index ng = Eigen::Index(gs.size());
  return est.gram.block(nf, 0, ng, nf);
}

Complex inner_product(const Domain& domain, const BasisElement& f,
                      const BasisElement& g, const QuadratureOptions& options) {
  const BasisElement fs[] = {f};
  const BasisElement gs[] = {g};
  return area_products(domain, fs, gs, options)(0, 0);
}

Complex zbar_inner_product(const Domain& domain, const BasisElement& g,
                           const QuadratureOptions& options) {
  const BasisElement gs[] = {g};
  const auto sys =
      assemble_projection_system(domain, gs, domain.centroid(), options);
  return sys.wbar(0) + std::conj(sys.center) * sys.ones(0);
}

ProjectionSystem assemble_projection_system(const Domain& domain,
                                            std::span<const BasisElement> basis,
                                            Complex center,
                                            const QuadratureOptions& options) {
  const auto est = adaptive_system(domain, basis, center, options);
  ProjectionSystem sys;
  // Hermitian from the upper triangle, so <f,g> = conj(<g,f>) exactly.
  sys.gram = est.gram.selfadjointView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < sys.gram.rows(); ++k) {
    sys.gram(k, k) = sys.gram(k, k).real();
  }
  sys.wbar = est.wbar;
  sys.ones = est.ones;
  sys.wbar_norm_sq = est.wbar_norm_sq;
  sys.area = est.area;
  sys.center = center;
  return sys;
}

}  // namespace bergman
