#include "usc/dissipation.hpp"

#include <cmath>
#include <stdexcept>

namespace usc {

void BathSpec::validate() const {
  if (!(gamma_a >= 0.0) || !std::isfinite(gamma_a)) {
    throw std::invalid_argument("bath.gamma_a: must be finite and >= 0");
  }
  if (!(gamma_x >= 0.0) || !std::isfinite(gamma_x)) {
    throw std::invalid_argument("bath.gamma_x: must be finite and >= 0");
  }
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw std::invalid_argument("bath.temperature: must be finite and >= 0");
  }
}

std::string_view to_string(Channel c) { return c == Channel::cavity ? "a" : "sigma-"; }
std::string_view to_string(Direction d) { return d == Direction::decay ? "decay" : "excitation"; }

SpectralWeight ohmic_weight(const BathSpec& bath, double omega0) {
  return [gamma_a = bath.gamma_a, gamma_x = bath.gamma_x, omega0](Channel c, double delta) {
    return (c == Channel::cavity ? gamma_a : gamma_x) * delta / omega0;
  };
}

double thermal_occupancy(double delta, double temperature) {
  if (!(delta > 0.0)) throw std::invalid_argument("thermal_occupancy: delta must be > 0");
  if (!(temperature >= 0.0)) throw std::invalid_argument("thermal_occupancy: temperature must be >= 0");
  if (temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(delta / temperature);
}

namespace {

const ComplexMatrix& channel_matrix(const TransitionTable& tt, Channel c) {
  return c == Channel::cavity ? tt.c_a : tt.c_x;
}

}  // namespace

double relaxation_rate(Channel channel, Index j, Index k, const TransitionTable& tt,
                       const SpectralWeight& weight) {
  if (!(k > j)) throw std::invalid_argument("relaxation_rate: requires k > j");
  const double delta = tt.delta(j, k);
  const double c = std::abs(channel_matrix(tt, channel)(j, k));
  if (delta <= kZeroFrequency || c <= kSelectionTolerance) return 0.0;
  const double rate = weight(channel, delta) * c * c;
  if (rate < 0.0) throw std::logic_error("relaxation_rate: spectral weight produced a negative rate");
  return rate;
}

double relaxation_rate(Channel channel, Index j, Index k, const TransitionTable& tt, const BathSpec& bath,
                       double omega0) {
  return relaxation_rate(channel, j, k, tt, ohmic_weight(bath, omega0));
}

std::vector<LindbladTerm> build_terms(const TransitionTable& tt, const EigenSystem& es, const BathSpec& bath,
                                      const SpectralWeight& weight) {
  bath.validate();
  std::vector<LindbladTerm> terms;
  const Index n = tt.size();
  for (Channel channel : {Channel::cavity, Channel::emitter}) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        const double gamma = relaxation_rate(channel, j, k, tt, weight);
        if (gamma <= 0.0) continue;
        const double delta = tt.delta(j, k);
        const double nbar = thermal_occupancy(delta, bath.temperature);
        const ComplexMatrix down = es.states.col(j) * es.states.col(k).adjoint();

        LindbladTerm decay;
        decay.rate = gamma * (1.0 + nbar);
        decay.jump = down;
        decay.channel = channel;
        decay.j = j;
        decay.k = k;
        decay.direction = Direction::decay;
        decay.delta = delta;
        decay.base_rate = gamma;
        decay.occupancy = nbar;

        LindbladTerm excite = decay;
        excite.rate = gamma * nbar;
        excite.jump = down.adjoint();
        excite.direction = Direction::excitation;

        terms.push_back(std::move(decay));
        terms.push_back(std::move(excite));
      }
    }
  }
  return terms;
}

std::vector<LindbladTerm> build_terms(const TransitionTable& tt, const EigenSystem& es, const BathSpec& bath,
                                      double omega0) {
  return build_terms(tt, es, bath, ohmic_weight(bath, omega0));
}

ComplexVector vectorize(const ComplexMatrix& rho) {
  return Eigen::Map<const ComplexVector>(rho.data(), rho.size());
}

ComplexMatrix unvectorize(const ComplexVector& v, Index dim) {
  if (v.size() != dim * dim) throw std::invalid_argument("unvectorize: size is not dim^2");
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

ComplexMatrix left_right_superop(const ComplexMatrix& A, const ComplexMatrix& B) {
  return tensor(B.transpose(), A);
}

Liouvillian build_liouvillian(const ComplexMatrix& H, std::vector<LindbladTerm> terms) {
  const Index d = H.rows();
  if (H.cols() != d) throw std::invalid_argument("build_liouvillian: Hamiltonian not square");
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);

  ComplexMatrix anticomm = ComplexMatrix::Zero(d, d);
  for (const auto& t : terms) {
    if (t.rate < 0.0) throw std::invalid_argument("build_liouvillian: negative rate");
    if (t.jump.rows() != d || t.jump.cols() != d) {
      throw std::invalid_argument("build_liouvillian: jump operator dimension mismatch");
    }
    if (t.rate > 0.0) anticomm.noalias() += t.rate * (t.jump.adjoint() * t.jump);
  }

  // -i H rho + i rho H - 1/2 K rho - 1/2 rho K with K = sum rate O^dag O
  const ComplexMatrix effective = cplx(0.0, -1.0) * H - 0.5 * anticomm;
  ComplexMatrix L = tensor(id, effective) + tensor(effective.adjoint().transpose(), id);

  // rate O rho O^dag -> rate conj(O) (x) O
  for (const auto& t : terms) {
    if (t.rate == 0.0) continue;
    for (Index q = 0; q < d; ++q) {
      for (Index p = 0; p < d; ++p) {
        const cplx w = std::conj(t.jump(p, q));
        if (w == cplx(0.0)) continue;
        L.block(p * d, q * d, d, d) += (t.rate * w) * t.jump;
      }
    }
  }
  return Liouvillian{std::move(L), std::move(terms), H};
}

OpenSystem assemble(const RabiParams& model, const BathSpec& bath) {
  model.validate();
  bath.validate();
  OpenSystem sys;
  sys.model = model;
  sys.bath = bath;
  sys.hamiltonian = build_hamiltonian(model);
  sys.eigen = diagonalize(model);
  sys.transitions = transition_table(sys.eigen, model.layout());
  auto terms = build_terms(sys.transitions, sys.eigen, bath, model.omega0);
  sys.liouvillian = build_liouvillian(sys.hamiltonian, std::move(terms));
  return sys;
}

}  // namespace usc
