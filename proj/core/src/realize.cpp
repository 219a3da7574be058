#include "wiring/realize.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "wiring/cells.hpp"
#include "wiring/iso.hpp"

namespace wiring {

namespace {

// Incidence constraints of the arrangement: for every vertex on k >= 3 lines,
// the determinant of the first two lines with each further one vanishes.
struct ConstraintSystem {
  int n = 0;
  std::vector<std::array<int, 3>> triples;  // line labels
};

ConstraintSystem constraints_of(const CellComplex& complex) {
  ConstraintSystem sys;
  sys.n = complex.n;
  for (const CellVertex& v : complex.vertices) {
    for (std::size_t k = 2; k < v.lines.size(); ++k) {
      sys.triples.push_back({v.lines[0], v.lines[1], v.lines[static_cast<std::size_t>(k)]});
    }
  }
  return sys;
}

// First four lines (lexicographically) whose six pairwise meets are distinct
// vertices; such a quadruple can be pinned to the standard projective frame.
std::optional<std::array<int, 4>> find_gauge(const CellComplex& complex) {
  const int n = complex.n;
  std::vector<std::vector<int>> meet(static_cast<std::size_t>(n) + 1,
                                     std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
  for (std::size_t t = 0; t < complex.vertices.size(); ++t) {
    const auto& lines = complex.vertices[t].lines;
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        meet[static_cast<std::size_t>(lines[i])][static_cast<std::size_t>(lines[j])] = static_cast<int>(t);
        meet[static_cast<std::size_t>(lines[j])][static_cast<std::size_t>(lines[i])] = static_cast<int>(t);
      }
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          const std::array<int, 4> q{a, b, c, d};
          std::vector<int> meets;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              meets.push_back(meet[static_cast<std::size_t>(q[static_cast<std::size_t>(i)])]
                                  [static_cast<std::size_t>(q[static_cast<std::size_t>(j)])]);
          std::sort(meets.begin(), meets.end());
          if (std::adjacent_find(meets.begin(), meets.end()) == meets.end()) return q;
        }
  return std::nullopt;
}

using Vec3 = Eigen::Vector3d;

// Straight-line fit of each wire's drawn trajectory, the natural warm start.
std::vector<Vec3> seed_from_diagram(const AllowableSequence& seq) {
  const int n = seq.n;
  const int m = static_cast<int>(seq.moves.size());
  std::vector<Vec3> lines(static_cast<std::size_t>(n) + 1);
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(n) + 1);
  for (int l = 1; l <= n; ++l) row_of[static_cast<std::size_t>(l)] = l;
  auto sigma = identity_sigma(n);
  for (int t = 0; t <= m; ++t) {
    for (int r = 1; r <= n; ++r) rows[static_cast<std::size_t>(sigma[static_cast<std::size_t>(r)])].push_back(r);
    if (t < m) {
      const MovePair p = seq.moves[static_cast<std::size_t>(t)];
      std::reverse(sigma.begin() + p.a, sigma.begin() + p.b + 1);
    }
  }
  for (int l = 1; l <= n; ++l) {
    const auto& ys = rows[static_cast<std::size_t>(l)];
    const double count = static_cast<double>(ys.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t t = 0; t < ys.size(); ++t) {
      const double x = static_cast<double>(t);
      sx += x;
      sy += ys[t];
      sxx += x * x;
      sxy += x * ys[t];
    }
    const double denom = count * sxx - sx * sx;
    const double alpha = denom != 0 ? (count * sxy - sx * sy) / denom : 0.0;
    const double beta = (sy - alpha * sx) / count;
    // y = alpha x + beta  ->  alpha*x - y + beta = 0
    lines[static_cast<std::size_t>(l)] = Vec3(alpha, -1.0, beta).normalized();
  }
  return lines;
}

// Dual-space projective map sending the four gauge lines to the frame
// e1, e2, e3, (1,1,1).
bool apply_gauge_frame(std::vector<Vec3>& lines, const std::array<int, 4>& gauge) {
  Eigen::Matrix3d a;
  for (int i = 0; i < 3; ++i) a.col(i) = lines[static_cast<std::size_t>(gauge[static_cast<std::size_t>(i)])];
  if (std::abs(a.determinant()) < 1e-12) return false;
  const Vec3 w = a.fullPivLu().solve(lines[static_cast<std::size_t>(gauge[3])]);
  if (std::abs(w[0]) < 1e-9 || std::abs(w[1]) < 1e-9 || std::abs(w[2]) < 1e-9) return false;
  Eigen::Matrix3d scaled = a;
  for (int i = 0; i < 3; ++i) scaled.col(i) *= w[i];
  const Eigen::Matrix3d map = scaled.inverse();
  for (std::size_t l = 1; l < lines.size(); ++l) {
    lines[l] = (map * lines[l]);
    const double norm = lines[l].norm();
    if (!(norm > 1e-12)) return false;
    lines[l] /= norm;
  }
  return true;
}

struct LmProblem {
  int n;
  std::array<int, 4> gauge;
  std::vector<std::array<int, 3>> triples;
  std::vector<int> free_lines;          // labels
  std::vector<int> param_index;         // label -> base index or -1

  int residual_count() const {
    return static_cast<int>(triples.size()) + static_cast<int>(free_lines.size());
  }
  int param_count() const { return 3 * static_cast<int>(free_lines.size()); }
};

void eval(const LmProblem& prob, const std::vector<Vec3>& lines, Eigen::VectorXd& residuals,
          Eigen::MatrixXd* jacobian) {
  const int rc = prob.residual_count();
  residuals.resize(rc);
  if (jacobian) jacobian->setZero(rc, prob.param_count());
  int row = 0;
  for (const auto& [la, lb, lc] : prob.triples) {
    const Vec3& a = lines[static_cast<std::size_t>(la)];
    const Vec3& b = lines[static_cast<std::size_t>(lb)];
    const Vec3& c = lines[static_cast<std::size_t>(lc)];
    residuals[row] = a.dot(b.cross(c));
    if (jacobian) {
      const auto add = [&](int label, const Vec3& grad) {
        const int base = prob.param_index[static_cast<std::size_t>(label)];
        if (base < 0) return;
        for (int k = 0; k < 3; ++k) (*jacobian)(row, base + k) = grad[k];
      };
      add(la, b.cross(c));
      add(lb, c.cross(a));
      add(lc, a.cross(b));
    }
    ++row;
  }
  // Unit-norm residuals keep the scale gauge of each free line pinned.
  for (std::size_t i = 0; i < prob.free_lines.size(); ++i) {
    const int label = prob.free_lines[i];
    const Vec3& l = lines[static_cast<std::size_t>(label)];
    residuals[row] = 0.5 * (l.squaredNorm() - 1.0);
    if (jacobian) {
      const int base = prob.param_index[static_cast<std::size_t>(label)];
      for (int k = 0; k < 3; ++k) (*jacobian)(row, base + k) = l[k];
    }
    ++row;
  }
}

double incidence_residual(const LmProblem& prob, const std::vector<Vec3>& lines) {
  double total = 0;
  for (const auto& [la, lb, lc] : prob.triples) {
    const Vec3 a = lines[static_cast<std::size_t>(la)].normalized();
    const Vec3 b = lines[static_cast<std::size_t>(lb)].normalized();
    const Vec3 c = lines[static_cast<std::size_t>(lc)].normalized();
    const double r = a.dot(b.cross(c));
    total += r * r;
  }
  return total;
}

bool levenberg_marquardt(const LmProblem& prob, std::vector<Vec3>& lines, int max_iterations) {
  double lambda = 1e-3;
  Eigen::VectorXd residuals;
  Eigen::MatrixXd jacobian;
  eval(prob, lines, residuals, &jacobian);
  double cost = residuals.squaredNorm();
  for (int iter = 0; iter < max_iterations; ++iter) {
    const Eigen::MatrixXd jtj = jacobian.transpose() * jacobian;
    const Eigen::VectorXd jtr = jacobian.transpose() * residuals;
    Eigen::MatrixXd damped = jtj;
    damped.diagonal().array() += lambda;
    const Eigen::VectorXd step = damped.ldlt().solve(-jtr);
    if (!step.allFinite()) return false;
    std::vector<Vec3> trial = lines;
    for (std::size_t i = 0; i < prob.free_lines.size(); ++i) {
      const int label = prob.free_lines[i];
      for (int k = 0; k < 3; ++k) trial[static_cast<std::size_t>(label)][k] += step[3 * static_cast<int>(i) + k];
    }
    Eigen::VectorXd trial_res;
    eval(prob, trial, trial_res, nullptr);
    const double trial_cost = trial_res.squaredNorm();
    if (trial_cost < cost) {
      lines = std::move(trial);
      cost = trial_cost;
      lambda = std::max(lambda * 0.4, 1e-12);
      eval(prob, lines, residuals, &jacobian);
      if (cost < 1e-26) break;
    } else {
      lambda *= 2.5;
      if (lambda > 1e10) break;
    }
  }
  return true;
}

Rational rationalize(double value, long long denominator_bound) {
  // continued fraction convergents
  if (!std::isfinite(value)) return Rational(0);
  const bool negative = value < 0;
  double x = std::abs(value);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double floor_x = std::floor(x);
    if (floor_x > 9e17) break;
    const long long a = static_cast<long long>(floor_x);
    if (q0 + (q1 > 0 ? a * q1 : 0) > denominator_bound && q1 > 0) break;
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > denominator_bound) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = x - floor_x;
    if (frac < 1e-14) break;
    x = 1.0 / frac;
  }
  if (q1 == 0) return Rational(0);
  Rational r(p1, q1);
  return negative ? -r : r;
}

std::optional<Realization> verify_candidate(const AllowableSequence& target,
                                            const std::vector<Vec3>& lines,
                                            const std::array<int, 4>& gauge,
                                            long long denominator_bound) {
  const int n = target.n;
  std::vector<RationalLine> rational(static_cast<std::size_t>(n) + 1);
  for (int l = 1; l <= n; ++l) {
    const Vec3& v = lines[static_cast<std::size_t>(l)];
    int big = 0;
    for (int k = 1; k < 3; ++k)
      if (std::abs(v[k]) > std::abs(v[big])) big = k;
    if (std::abs(v[big]) < 1e-9) return std::nullopt;
    for (int k = 0; k < 3; ++k) {
      rational[static_cast<std::size_t>(l)].coeffs[static_cast<std::size_t>(k)] =
          k == big ? Rational(1) : rationalize(v[k] / v[big], denominator_bound);
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (lines_projectively_equal(rational[static_cast<std::size_t>(i)],
                                   rational[static_cast<std::size_t>(j)]))
        return std::nullopt;
  std::vector<RationalLine> list(rational.begin() + 1, rational.end());
  AllowableSequence extracted;
  try {
    extracted = wiring_from_lines(list);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  const CellComplex complex = cell_complex(extracted);
  if (!is_simplicial(complex)) return std::nullopt;
  if (!isomorphic(extracted, target)) return std::nullopt;
  Realization result;
  result.lines = std::move(rational);
  result.gauge_lines = gauge;
  return result;
}

// Exact realization of the one class the gauge construction cannot reach:
// n-1 concurrent lines plus a transversal.
std::optional<Realization> realize_near_pencil(const AllowableSequence& seq) {
  const int n = seq.n;
  std::vector<RationalLine> rational(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n - 1; ++k) {
    rational[static_cast<std::size_t>(k)].coeffs = {Rational(k), Rational(-1), Rational(0)};
  }
  rational[static_cast<std::size_t>(n)].coeffs = {Rational(1), Rational(0), Rational(-1)};
  std::vector<RationalLine> list(rational.begin() + 1, rational.end());
  AllowableSequence extracted = wiring_from_lines(list);
  if (!isomorphic(extracted, seq)) return std::nullopt;
  Realization result;
  result.lines = std::move(rational);
  result.gauge_lines = {0, 0, 0, 0};
  return result;
}

}  // namespace

std::optional<Realization> realize_numeric(const AllowableSequence& seq,
                                           const RealizeOptions& opts) {
  const CellComplex complex = cell_complex(seq);
  if (!is_simplicial(complex)) {
    throw std::invalid_argument("realize_numeric: arrangement is not simplicial");
  }
  if (is_near_pencil(seq)) return realize_near_pencil(seq);

  const auto gauge = find_gauge(complex);
  if (!gauge) return std::nullopt;

  LmProblem prob;
  prob.n = seq.n;
  prob.gauge = *gauge;
  prob.triples = constraints_of(complex).triples;
  prob.param_index.assign(static_cast<std::size_t>(seq.n) + 1, -1);
  for (int l = 1; l <= seq.n; ++l) {
    if (std::count(gauge->begin(), gauge->end(), l)) continue;
    prob.param_index[static_cast<std::size_t>(l)] = 3 * static_cast<int>(prob.free_lines.size());
    prob.free_lines.push_back(l);
  }

  const std::vector<Vec3> diagram_seed = seed_from_diagram(seq);

  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::mt19937 rng(opts.seed + static_cast<unsigned>(restart) * 7919u);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Vec3> lines(static_cast<std::size_t>(seq.n) + 1);
    if (restart % 2 == 0) {
      lines = diagram_seed;
      const double jitter = 0.02 * static_cast<double>(restart);
      for (int l = 1; l <= seq.n; ++l) {
        for (int k = 0; k < 3; ++k) lines[static_cast<std::size_t>(l)][k] += jitter * gauss(rng);
        lines[static_cast<std::size_t>(l)].normalize();
      }
      if (!apply_gauge_frame(lines, *gauge)) continue;
    } else {
      for (int l = 1; l <= seq.n; ++l) {
        lines[static_cast<std::size_t>(l)] = Vec3(gauss(rng), gauss(rng), gauss(rng)).normalized();
      }
    }
    lines[static_cast<std::size_t>((*gauge)[0])] = Vec3(1, 0, 0);
    lines[static_cast<std::size_t>((*gauge)[1])] = Vec3(0, 1, 0);
    lines[static_cast<std::size_t>((*gauge)[2])] = Vec3(0, 0, 1);
    lines[static_cast<std::size_t>((*gauge)[3])] = Vec3(1, 1, 1).normalized();

    if (!levenberg_marquardt(prob, lines, opts.max_iterations)) continue;
    if (incidence_residual(prob, lines) >= opts.residual_tolerance) continue;
    auto result = verify_candidate(seq, lines, *gauge, opts.denominator_bound);
    if (result) return result;
  }
  return std::nullopt;
}

std::string Realization::to_text() const {
  std::ostringstream out;
  out << "realization gauge=" << gauge_lines[0] << ',' << gauge_lines[1] << ',' << gauge_lines[2]
      << ',' << gauge_lines[3] << '\n';
  for (std::size_t l = 1; l < lines.size(); ++l) {
    out << "line " << l << ": " << lines[l].coeffs[0] << ' ' << lines[l].coeffs[1] << ' '
        << lines[l].coeffs[2] << '\n';
  }
  return out.str();
}

}  // namespace wiring
