#include "ksgraph/thermo.hpp"

#include "ksgraph/error.hpp"

namespace ksg {

namespace {

Rat dot_iv(const IntVec& a, const RatVec& b) {
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    acc += Rat(a[i]) * b[i];
  }
  return acc;
}

Rat dot_vv(const RatVec& a, const RatVec& b) {
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void require_state(const BasisBundle& b, const ThermoState& s) {
  if (s.currents.size() != b.num_edges() || s.forces.size() != b.num_edges())
    throw Error(ErrorCode::DimensionMismatch, "state vectors must have one entry per edge");
}

}  // namespace

MacroObservables macroscopic_observables(const BasisBundle& b, const ThermoState& s) {
  require_state(b, s);
  const std::size_t nco = b.num_cochords();
  MacroObservables obs;
  for (std::size_t m = 0; m < nco; ++m) {
    obs.J_mu.push_back(dot_iv(b.cocycles[m], s.currents));
    obs.F_mu.push_back(s.forces[m]);  // <e_mu|f> in canonical order
  }
  for (std::size_t a = 0; a < b.num_chords(); ++a) {
    obs.J_alpha.push_back(s.currents[nco + a]);  // <e_alpha|j>
    obs.F_alpha.push_back(dot_iv(b.cycles[a], s.forces));
  }
  return obs;
}

KirchhoffReport kirchhoff_checks(const BasisBundle& b, const ProjectionPair& p,
                                 const ThermoState& s) {
  require_state(b, s);
  const std::size_t ne = b.num_edges();
  KirchhoffReport report;
  report.kcl = true;
  report.kvl = true;
  for (std::size_t i = 0; i < ne && (report.kcl || report.kvl); ++i) {
    Rat qj = 0, ptf = 0;
    for (std::size_t j = 0; j < ne; ++j) {
      qj += p.Q(i, j) * s.currents[j];
      ptf += p.P(j, i) * s.forces[j];
    }
    if (qj != 0) report.kcl = false;
    if (ptf != 0) report.kvl = false;
  }
  report.equilibrium = report.kcl && report.kvl;
  return report;
}

EntropyProduction entropy_production(const BasisBundle& b, const ThermoState& s) {
  require_state(b, s);
  const MacroObservables obs = macroscopic_observables(b, s);
  EntropyProduction out;
  out.sigma = dot_vv(s.forces, s.currents);
  out.tidal_part = dot_vv(obs.F_mu, obs.J_mu);
  out.vortex_part = dot_vv(obs.F_alpha, obs.J_alpha);
  if (out.sigma != out.tidal_part + out.vortex_part)
    throw std::logic_error("entropy production decomposition failed");
  return out;
}

LinearRegimeReport linear_regime_epr(const BasisBundle& b, const KsPair& ks, const RatVec& j) {
  ThermoState state{j, j};
  require_state(b, state);
  const MacroObservables obs = macroscopic_observables(b, state);

  LinearRegimeReport report;
  report.direct = dot_vv(j, j);
  const RatMat kstar_inv = ks.Kstar.inverse();
  const RatMat k_inv = ks.K.inverse();
  Rat macro = 0;
  for (std::size_t m = 0; m < obs.J_mu.size(); ++m)
    for (std::size_t mp = 0; mp < obs.J_mu.size(); ++mp)
      macro += kstar_inv(m, mp) * obs.J_mu[m] * obs.J_mu[mp];
  for (std::size_t a = 0; a < obs.F_alpha.size(); ++a)
    for (std::size_t ap = 0; ap < obs.F_alpha.size(); ++ap)
      macro += k_inv(a, ap) * obs.F_alpha[a] * obs.F_alpha[ap];
  report.macroscopic = macro;
  report.equal = report.direct == report.macroscopic;
  return report;
}

std::pair<RatMat, RatMat> orthogonal_projectors(const BasisBundle& b, const KsPair& ks) {
  const std::size_t ne = b.num_edges();
  const RatMat cycles = b.cycle_matrix();      // |C| x |E|
  const RatMat cocycles = b.cocycle_matrix();  // |V|-1 x |E|
  const RatMat p_prime = cycles.transpose() * ks.K.inverse() * cycles;
  const RatMat q_prime = cocycles.transpose() * ks.Kstar.inverse() * cocycles;

  if (p_prime * p_prime != p_prime || q_prime * q_prime != q_prime)
    throw std::logic_error("orthogonal projector is not idempotent");
  if (!p_prime.is_symmetric() || !q_prime.is_symmetric())
    throw std::logic_error("orthogonal projector is not symmetric");
  if (p_prime + q_prime != RatMat::identity(ne))
    throw std::logic_error("orthogonal projectors do not sum to the identity");
  return {p_prime, q_prime};
}

VerificationReport verify_lambda_duality(const BasisBundle& b) {
  VerificationReport report;
  const RatMat lambda = lambda_matrix(b);
  const RatMat lambda_star = lambda_star_matrix(b);
  const RatMat product = lambda * lambda_star.transpose();
  const RatMat identity = RatMat::identity(b.num_edges());
  report.add("lambda_conjugacy", product == identity,
             RatMat::first_difference(product, identity));
  return report;
}

}  // namespace ksg
