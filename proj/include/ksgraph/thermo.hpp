#pragma once

#include <tuple>

#include "ksgraph/basis.hpp"
#include "ksgraph/ks.hpp"
#include "ksgraph/matrix.hpp"
#include "ksgraph/projections.hpp"
#include "ksgraph/report.hpp"

namespace ksg {

/// Per-edge currents and conjugate forces, in canonical edge order. Exact
/// rationals keep every network identity exact.
struct ThermoState {
  RatVec currents;
  RatVec forces;
};

/// Macroscopic observables: tidal currents J_mu = <c_mu|j>, vortex currents
/// J_alpha = <e_alpha|j>, potential drops F_mu = <e_mu|f>, circuitations
/// F_alpha = <c_alpha|f>.
struct MacroObservables {
  RatVec J_mu;
  RatVec J_alpha;
  RatVec F_mu;
  RatVec F_alpha;
};

/// Throws DimensionMismatch when the state does not match the edge count.
MacroObservables macroscopic_observables(const BasisBundle& b, const ThermoState& s);

struct KirchhoffReport {
  bool kcl = false;          // Q j = 0
  bool kvl = false;          // P^T f = 0
  bool equilibrium = false;  // both
};

KirchhoffReport kirchhoff_checks(const BasisBundle& b, const ProjectionPair& p,
                                 const ThermoState& s);

struct EntropyProduction {
  Rat sigma;        // <f|j>
  Rat tidal_part;   // sum F_mu J_mu
  Rat vortex_part;  // sum F_alpha J_alpha
};

/// sigma = <f|j> with its tidal/vortex decomposition; the split is asserted
/// exactly.
EntropyProduction entropy_production(const BasisBundle& b, const ThermoState& s);

struct LinearRegimeReport {
  Rat direct;       // <j|j>
  Rat macroscopic;  // J *K^-1 J + F K^-1 F
  bool equal = false;
};

/// Unit-resistance linear regime f = j: checks exactly
/// <j|j> = sum (*K^-1) J_mu J_mu' + sum (K^-1) F_alpha F_alpha'.
LinearRegimeReport linear_regime_epr(const BasisBundle& b, const KsPair& ks, const RatVec& j);

/// Orthogonal projectors onto the cycle and cocycle spaces,
/// P' = sum c_a (K^-1) c_a'^T and Q' = sum c_m (*K^-1) c_m'^T. Symmetry,
/// idempotence, and P' + Q' = I are asserted exactly.
std::pair<RatMat, RatMat> orthogonal_projectors(const BasisBundle& b, const KsPair& ks);

/// Exact check of Lambda (*Lambda)^T = I, the matrix form of the canonical
/// conjugacy of the macroscopic observables.
VerificationReport verify_lambda_duality(const BasisBundle& b);

}  // namespace ksg
