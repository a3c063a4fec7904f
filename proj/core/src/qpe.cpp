#include "qumode/qpe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "qumode/errors.hpp"
#include "qumode/linalg.hpp"

namespace qumode {

namespace {

constexpr double kUnitaryTolerance = 1e-9;
constexpr double kEigenTolerance = 1e-8;

std::size_t int_pow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_unitary(const Matrix& u, int d) {
  if (u.rows() != d || u.cols() != d) {
    throw DomainError("unitary must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  const double defect = linalg::unitarity_defect(u);
  if (defect > kUnitaryTolerance) {
    throw ContractViolation("U is not unitary (defect " + std::to_string(defect) + ")");
  }
}

Matrix dft(std::size_t n, double sign) {
  Matrix f(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      // Reduce jk mod n before the angle to keep phases exact for large n.
      const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) /
                           static_cast<double>(n);
      f(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          scale * std::exp(Complex(0.0, angle));
    }
  }
  return f;
}

}  // namespace

Matrix qudit_fourier(int d) {
  if (d < 2) throw DomainError("qudit dimension must be >= 2");
  return dft(static_cast<std::size_t>(d), +1.0);
}

Matrix controlled_power(const Matrix& u, int j, int d) {
  if (d < 2) throw DomainError("qudit dimension must be >= 2");
  if (j < 0) throw DomainError("controlled_power: j must be >= 0");
  require_unitary(u, d);
  const Matrix base = linalg::matrix_power(u, int_pow(static_cast<std::size_t>(d), j));
  Matrix out = Matrix::Zero(d * d, d * d);
  Matrix power = Matrix::Identity(d, d);
  for (int c = 0; c < d; ++c) {
    out.block(c * d, c * d, d, d) = power;
    power = base * power;
  }
  return out;
}

double eigenphase(const Matrix& u, const Vector& psi) {
  const Complex lambda = psi.dot(u * psi) / psi.squaredNorm();
  double phi = std::arg(lambda) / (2.0 * std::numbers::pi);
  if (phi < 0.0) phi += 1.0;
  if (phi >= 1.0) phi -= 1.0;
  return phi;
}

QpeResult run_qpe(const QpeSpec& spec) {
  const int d = spec.d;
  const int t = spec.t;
  if (d < 2) throw DomainError("qudit dimension must be >= 2");
  if (t < 1) throw DomainError("QPE needs at least one register qudit");
  require_unitary(spec.unitary, d);
  if (spec.eigenstate.size() != d) throw DomainError("eigenstate length must equal d");
  if (std::abs(spec.eigenstate.norm() - 1.0) > kEigenTolerance) {
    throw ContractViolation("eigenstate is not normalized");
  }
  const Complex lambda = spec.eigenstate.dot(spec.unitary * spec.eigenstate);
  if ((spec.unitary * spec.eigenstate - lambda * spec.eigenstate).norm() > kEigenTolerance) {
    throw ContractViolation("supplied state is not an eigenvector of U");
  }

  const QumodeRegister reg = QumodeRegister::uniform(static_cast<std::size_t>(t) + 1, d);
  const auto target = static_cast<std::size_t>(t);

  Vector init = Vector::Zero(static_cast<Eigen::Index>(reg.dimension()));
  init.head(d) = spec.eigenstate;  // register |0...0>, target psi
  StateVector state(reg, std::move(init));

  QpeResult result;
  const Matrix f = qudit_fourier(d);
  for (std::size_t q = 0; q < target; ++q) {
    const std::size_t modes[] = {q};
    state = embed(f, reg, modes) * state;
  }
  result.stage_norms.push_back(state.norm());

  for (std::size_t q = 0; q < target; ++q) {
    const std::size_t modes[] = {q, target};
    state = embed(controlled_power(spec.unitary, t - 1 - static_cast<int>(q), d), reg, modes) * state;
    result.stage_norms.push_back(state.norm());
  }

  const std::size_t outcomes = int_pow(static_cast<std::size_t>(d), t);
  std::vector<std::size_t> register_modes(target);
  std::iota(register_modes.begin(), register_modes.end(), std::size_t{0});
  state = embed(dft(outcomes, -1.0), reg, register_modes) * state;
  result.stage_norms.push_back(state.norm());

  const RealVector probs = state.probabilities();
  result.distribution.assign(outcomes, 0.0);
  for (std::size_t flat = 0; flat < reg.dimension(); ++flat) {
    result.distribution[flat / static_cast<std::size_t>(d)] += probs(static_cast<Eigen::Index>(flat));
  }
  result.modal_outcome = static_cast<std::size_t>(
      std::max_element(result.distribution.begin(), result.distribution.end()) -
      result.distribution.begin());
  result.phase_estimate = static_cast<double>(result.modal_outcome) / static_cast<double>(outcomes);
  return result;
}

std::string outcome_digits(std::size_t outcome, int d, int t) {
  std::string digits(static_cast<std::size_t>(t), '0');
  for (int i = t - 1; i >= 0; --i) {
    const auto digit = static_cast<int>(outcome % static_cast<std::size_t>(d));
    digits[static_cast<std::size_t>(i)] =
        static_cast<char>(digit < 10 ? '0' + digit : 'a' + (digit - 10));
    outcome /= static_cast<std::size_t>(d);
  }
  return digits;
}

std::vector<std::uint64_t> sample_readout(const std::vector<double>& dist, std::uint64_t shots,
                                          std::uint64_t seed) {
  if (dist.empty()) throw DomainError("sample_readout: empty distribution");
  if (shots < 1) throw DomainError("sample_readout: shots must be >= 1");
  double total = 0.0;
  for (double p : dist) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw DomainError("sample_readout: invalid probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw DomainError("sample_readout: distribution does not sum to 1");

  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> draw(dist.begin(), dist.end());
  std::vector<std::uint64_t> histogram(dist.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) ++histogram[draw(rng)];
  return histogram;
}

}  // namespace qumode
