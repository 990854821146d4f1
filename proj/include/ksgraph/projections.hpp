#pragma once

#include "ksgraph/basis.hpp"
#include "ksgraph/matrix.hpp"
#include "ksgraph/report.hpp"

namespace ksg {

/// Oblique complementary projections P (onto cycles along cochords) and
/// Q = I - P (onto cochords along cycles), the antisymmetric 2-form
/// Omega = P - P^T, and its upper-right block omega. All matrices are in
/// canonical edge order.
struct ProjectionPair {
  RatMat P;
  RatMat Q;
  RatMat omega_full;   // |E| x |E|
  RatMat omega_block;  // (|V|-1) x |C|
};

/// P = sum_a c_a e_a^T, Q = sum_m e_m c_m^T as outer products. The pair
/// invariants (idempotence, annihilation, completeness, antisymmetry of
/// Omega) are verified exactly before returning.
ProjectionPair build_projections(const BasisBundle& b);

/// Exact pass/fail per identity of the complementary-projection algebra,
/// including the kernel/image characterization against the incidence matrix.
VerificationReport verify_projection_identities(const BasisBundle& b, const ProjectionPair& p);

/// Exact checks that the cycle and cocycle 2-forms coincide, the pairing
/// anticommutation <e_m|c_a> + <c_m|e_a> = 0, and the signed-membership rule
/// for the omega block.
VerificationReport verify_two_form(const BasisBundle& b, const ProjectionPair& p);

/// Change-of-basis operators: Lambda = sum_m e_m e_m^T + sum_a e_a c_a^T and
/// *Lambda = sum_m e_m c_m^T + sum_a e_a e_a^T (canonical edge order).
RatMat lambda_matrix(const BasisBundle& b);
RatMat lambda_star_matrix(const BasisBundle& b);

}  // namespace ksg
