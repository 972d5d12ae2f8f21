#include "qcorr/measurement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qcorr/optimize.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

namespace {

constexpr double kDroppedOutcome = 1e-12;

void canonicalize(double& theta, double& phi) {
  theta = std::fmod(theta, 2.0 * M_PI);
  if (theta < 0.0) theta += 2.0 * M_PI;
  if (theta > M_PI) {
    theta = 2.0 * M_PI - theta;
    phi += M_PI;
  }
  phi = std::fmod(phi, 2.0 * M_PI);
  if (phi < 0.0) phi += 2.0 * M_PI;
}

std::string format_angle_label(double theta, double phi) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "bloch:%.10g:%.10g", theta, phi);
  return buf;
}

}  // namespace

ProjectiveMeasurement make_projective(std::string label, std::vector<Mat> projectors) {
  if (label.empty()) {
    throw InvalidInput("projective measurement: empty label");
  }
  if (projectors.empty()) {
    throw InvalidInput("projective measurement '" + label + "': no projectors");
  }
  const Eigen::Index d = projectors.front().rows();
  if (static_cast<Eigen::Index>(projectors.size()) != d) {
    throw InvalidInput("projective measurement '" + label + "': a complete rank-1 set on a " +
                       std::to_string(d) + "-dimensional space needs exactly " +
                       std::to_string(d) + " projectors");
  }
  Mat sum = Mat::Zero(d, d);
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    const Mat& p = projectors[i];
    if (p.rows() != d || p.cols() != d) {
      throw InvalidInput("projective measurement '" + label + "': inconsistent dimensions");
    }
    if ((p - p.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
      throw InvalidInput("projective measurement '" + label + "': projector not Hermitian");
    }
    if ((p * p - p).cwiseAbs().maxCoeff() > kHermitianTol) {
      throw InvalidInput("projective measurement '" + label + "': projector not idempotent");
    }
    if (std::abs(p.trace() - Complex(1.0, 0.0)) > kHermitianTol) {
      throw InvalidInput("projective measurement '" + label + "': projector not rank 1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if ((p * projectors[j]).cwiseAbs().maxCoeff() > kHermitianTol) {
        throw InvalidInput("projective measurement '" + label + "': projectors not orthogonal");
      }
    }
    sum += p;
  }
  if ((sum - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw InvalidInput("projective measurement '" + label + "': projectors do not sum to identity");
  }
  return ProjectiveMeasurement{std::move(label), std::move(projectors)};
}

namespace {

ProjectiveMeasurement basis_measurement(std::string label, const Eigen::Vector2cd& v0,
                                        const Eigen::Vector2cd& v1) {
  std::vector<Mat> projectors;
  projectors.push_back(v0 * v0.adjoint());
  projectors.push_back(v1 * v1.adjoint());
  return make_projective(std::move(label), std::move(projectors));
}

}  // namespace

ProjectiveMeasurement measurement_z() {
  return basis_measurement("z", Eigen::Vector2cd(1.0, 0.0), Eigen::Vector2cd(0.0, 1.0));
}

ProjectiveMeasurement measurement_x() {
  const double s = 1.0 / std::sqrt(2.0);
  return basis_measurement("x", Eigen::Vector2cd(s, s), Eigen::Vector2cd(s, -s));
}

ProjectiveMeasurement measurement_y() {
  const double s = 1.0 / std::sqrt(2.0);
  return basis_measurement("y", Eigen::Vector2cd(s, Complex(0.0, s)),
                           Eigen::Vector2cd(s, Complex(0.0, -s)));
}

ProjectiveMeasurement projective_from_bloch(const BlochAngles& angles) {
  double theta = angles.theta;
  double phi = angles.phi;
  canonicalize(theta, phi);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex e = std::polar(1.0, phi);
  const Eigen::Vector2cd v(c, e * s);
  const Eigen::Vector2cd w(-std::conj(e) * s, c);
  return basis_measurement(format_angle_label(theta, phi), v, w);
}

std::vector<ProjectiveMeasurement> mub_qubit() {
  return {measurement_z(), measurement_x(), measurement_y()};
}

BlochAngles bloch_angles_of(const ProjectiveMeasurement& m) {
  if (m.dim() != 2) {
    throw InvalidInput("bloch_angles_of: qubit measurement required");
  }
  const Mat& p = m.projectors.front();
  const double nx = 2.0 * p(1, 0).real();
  const double ny = 2.0 * p(1, 0).imag();
  const double nz = (p(0, 0) - p(1, 1)).real();
  const double planar = std::hypot(nx, ny);
  BlochAngles out;
  out.theta = std::atan2(planar, nz);
  out.phi = planar > 1e-14 ? std::atan2(ny, nx) : 0.0;
  if (out.phi < 0.0) out.phi += 2.0 * M_PI;
  return out;
}

std::vector<double> outcome_distribution(const DensityMatrix& rho,
                                         const ProjectiveMeasurement& m) {
  if (rho.dim() != m.dim()) {
    throw InvalidInput("outcome_distribution: state dimension " + std::to_string(rho.dim()) +
                       " does not match measurement dimension " + std::to_string(m.dim()));
  }
  std::vector<double> p;
  p.reserve(m.projectors.size());
  for (const Mat& proj : m.projectors) {
    p.push_back((proj * rho.matrix).trace().real());
  }
  return make_probability_vector(p);
}

OutcomeEnsemble measure_on_A(const DensityMatrix& rho_ab, const ProjectiveMeasurement& m) {
  if (m.dim() != rho_ab.dim_a) {
    throw InvalidInput("measure_on_A: measurement dimension " + std::to_string(m.dim()) +
                       " does not match subsystem A dimension " + std::to_string(rho_ab.dim_a));
  }
  const Mat identity_b = Mat::Identity(rho_ab.dim_b, rho_ab.dim_b);
  OutcomeEnsemble out;
  for (const Mat& proj : m.projectors) {
    const Mat full = tensor_product(proj, identity_b);
    const Mat sandwiched = full * rho_ab.matrix * full;
    const double p = sandwiched.trace().real();
    if (p < kDroppedOutcome) {
      continue;
    }
    out.probabilities.push_back(p);
    out.conditional_states.push_back(
        partial_trace(sandwiched, rho_ab.dim_a, rho_ab.dim_b, Subsystem::B) / p);
  }
  return out;
}

double average_conditional_entropy(const DensityMatrix& rho_ab,
                                   const ProjectiveMeasurement& m) {
  const OutcomeEnsemble ens = measure_on_A(rho_ab, m);
  double total = 0.0;
  for (std::size_t j = 0; j < ens.probabilities.size(); ++j) {
    total += ens.probabilities[j] * von_neumann_entropy(ens.conditional_states[j]);
  }
  return total;
}

double average_conditional_entropy(const DensityMatrix& rho_ab, const BlochAngles& angles) {
  if (rho_ab.dim_a != 2) {
    throw InvalidInput("average_conditional_entropy: subsystem A must be a qubit");
  }
  const double c = std::cos(angles.theta / 2.0);
  const double s = std::sin(angles.theta / 2.0);
  const Complex e = std::polar(1.0, angles.phi);
  const std::array<std::array<Complex, 2>, 2> bases = {{
      {Complex(c, 0.0), e * s},
      {-std::conj(e) * s, Complex(c, 0.0)},
  }};
  const int db = rho_ab.dim_b;
  const Mat& rho = rho_ab.matrix;
  double total = 0.0;
  for (const auto& u : bases) {
    if (db == 2) {
      // M[b,b'] = sum_{a,a'} conj(u_a) u_{a'} rho[(a,b),(a',b')], then the
      // closed-form 2x2 spectrum gives p * S(M/p) directly.
      Complex m00 = 0.0;
      Complex m01 = 0.0;
      Complex m11 = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int a2 = 0; a2 < 2; ++a2) {
          const Complex w = std::conj(u[a]) * u[a2];
          m00 += w * rho(a * 2, a2 * 2);
          m01 += w * rho(a * 2, a2 * 2 + 1);
          m11 += w * rho(a * 2 + 1, a2 * 2 + 1);
        }
      }
      const double trace = m00.real() + m11.real();
      if (trace < kDroppedOutcome) {
        continue;
      }
      const double det = m00.real() * m11.real() - std::norm(m01);
      const double disc = std::sqrt(std::max(0.0, trace * trace - 4.0 * det));
      total += trace * binary_entropy((trace + disc) / (2.0 * trace));
    } else {
      Mat cond = Mat::Zero(db, db);
      for (int a = 0; a < 2; ++a) {
        for (int a2 = 0; a2 < 2; ++a2) {
          cond += std::conj(u[a]) * u[a2] * rho.block(a * db, a2 * db, db, db);
        }
      }
      const double p = cond.trace().real();
      if (p < kDroppedOutcome) {
        continue;
      }
      cond = (0.5 / p) * (cond + cond.adjoint()).eval();
      total += p * von_neumann_entropy(cond);
    }
  }
  return total;
}

double overlap_c(const ProjectiveMeasurement& a, const ProjectiveMeasurement& b) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("overlap_c: measurement dimensions differ");
  }
  double best = 0.0;
  for (const Mat& p : a.projectors) {
    for (const Mat& q : b.projectors) {
      best = std::max(best, (p * q).trace().real());
    }
  }
  return std::min(1.0, std::max(0.0, best));
}

namespace {

struct Axis {
  double x, y, z;
};

double dot(const Axis& n, double sx, double sy, double sz) {
  return n.x * sx + n.y * sy + n.z * sz;
}

// Objective over the Bloch ball in (r, theta, phi); |r| > 1 is outside the
// state space and rejected with a large value.
struct BallObjective {
  std::vector<Axis> axes;
  BoundObjective kind;
  mutable long evaluations = 0;

  double operator()(double r, double theta, double phi) const {
    ++evaluations;
    if (std::abs(r) > 1.0) {
      return 1e300;
    }
    const double st = std::sin(theta);
    const double sx = r * st * std::cos(phi);
    const double sy = r * st * std::sin(phi);
    const double sz = r * std::cos(theta);
    double value = 0.0;
    for (const Axis& n : axes) {
      value += binary_entropy(0.5 * (1.0 + dot(n, sx, sy, sz)));
    }
    if (kind == BoundObjective::kSumEntropyMinusState) {
      value -= binary_entropy(0.5 * (1.0 + std::abs(r)));
    }
    return value;
  }
};

struct Candidate {
  double value;
  double r, theta, phi;
};

}  // namespace

BoundResult bound_term(std::span<const ProjectiveMeasurement> measurements,
                       const BoundOptions& options, BoundObjective objective) {
  if (measurements.empty()) {
    throw InvalidInput("bound_term: empty measurement list");
  }
  if (options.n_radius < 2 || options.n_theta < 2 || options.n_phi < 2) {
    throw InvalidInput("bound_term: grid resolution must be at least 2 per axis");
  }
  BallObjective f;
  f.kind = objective;
  for (const ProjectiveMeasurement& m : measurements) {
    if (m.dim() != 2) {
      throw InvalidInput("bound_term: only qubit measurements are supported");
    }
    const Mat& p = m.projectors.front();
    Axis n{2.0 * p(1, 0).real(), 2.0 * p(1, 0).imag(), (p(0, 0) - p(1, 1)).real()};
    const double len = std::sqrt(n.x * n.x + n.y * n.y + n.z * n.z);
    if (len < 0.5) {
      throw NumericError("bound_term: degenerate projector axis");
    }
    n.x /= len;
    n.y /= len;
    n.z /= len;
    f.axes.push_back(n);
  }

  const int nr = options.n_radius;
  const int nt = options.n_theta;
  const int np = options.n_phi;
  std::vector<Candidate> best;
  const std::size_t keep = static_cast<std::size_t>(std::max(1, options.refine_starts));
  for (int i = 0; i < nr; ++i) {
    const double r = static_cast<double>(i) / (nr - 1);
    for (int j = 0; j < nt; ++j) {
      const double theta = M_PI * j / (nt - 1);
      for (int k = 0; k < np; ++k) {
        const double phi = 2.0 * M_PI * k / np;
        const double value = f(r, theta, phi);
        if (best.size() < keep || value < best.back().value) {
          Candidate cand{value, r, theta, phi};
          auto pos = std::upper_bound(
              best.begin(), best.end(), cand,
              [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
          best.insert(pos, cand);
          if (best.size() > keep) {
            best.pop_back();
          }
        }
      }
    }
  }

  Candidate winner = best.front();
  auto wrapped = [&](std::span<const double> x) { return f(x[0], x[1], x[2]); };
  for (const Candidate& start : best) {
    const std::array<double, 3> x0 = {start.r, start.theta, start.phi};
    NelderMeadOptions nm;
    nm.max_iterations = 500;
    nm.value_tolerance = 1e-14;
    nm.point_tolerance = 1e-9;
    const NelderMeadResult res = nelder_mead(wrapped, x0, 0.02, nm);
    if (res.value < winner.value) {
      winner = {res.value, res.point[0], res.point[1], res.point[2]};
    }
  }

  double r = winner.r;
  double theta = winner.theta;
  double phi = winner.phi;
  if (r < 0.0) {
    r = -r;
    theta = M_PI - theta;
    phi += M_PI;
  }
  r = std::min(1.0, r);
  canonicalize(theta, phi);
  return BoundResult{winner.value, r, BlochAngles{theta, phi}, f.evaluations};
}

std::vector<std::int64_t> sample_outcomes(const DensityMatrix& rho,
                                          const ProjectiveMeasurement& m, std::int64_t n,
                                          std::uint64_t seed) {
  if (n < 0) {
    throw InvalidInput("sample_outcomes: negative sample count");
  }
  const std::vector<double> dist = outcome_distribution(rho, m);
  std::vector<double> cdf(dist.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < dist.size(); ++j) {
    acc += dist[j];
    cdf[j] = acc;
  }
  std::vector<std::int64_t> counts(dist.size(), 0);
  Rng rng(seed);
  for (std::int64_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    std::size_t j = 0;
    while (j + 1 < cdf.size() && u >= cdf[j]) {
      ++j;
    }
    ++counts[j];
  }
  return counts;
}

ProjectiveMeasurement parse_measurement_literal(const std::string& literal) {
  if (literal == "z") return measurement_z();
  if (literal == "x") return measurement_x();
  if (literal == "y") return measurement_y();
  if (literal.rfind("bloch:", 0) == 0) {
    const std::string rest = literal.substr(6);
    const auto sep = rest.find(':');
    if (sep == std::string::npos) {
      throw InvalidInput("measurement literal must be bloch:<theta>:<phi>");
    }
    try {
      std::size_t pos = 0;
      const double theta = std::stod(rest.substr(0, sep), &pos);
      if (pos != sep) throw std::invalid_argument(rest);
      const double phi = std::stod(rest.substr(sep + 1), &pos);
      if (pos != rest.size() - sep - 1) throw std::invalid_argument(rest);
      return projective_from_bloch(BlochAngles{theta, phi});
    } catch (const InvalidInput&) {
      throw;
    } catch (const std::exception&) {
      throw InvalidInput("could not parse angles in measurement literal '" + literal + "'");
    }
  }
  throw InvalidInput("unknown measurement literal '" + literal +
                     "' (expected z, x, y or bloch:<theta>:<phi>)");
}

}  // namespace qcorr
