#pragma once

#include <cstdint>

#include "ksgraph/matrix.hpp"
#include "ksgraph/polynomial.hpp"
#include "ksgraph/report.hpp"

namespace ksg {

/// A complementary pair of (generally oblique) projections on an abstract
/// n-dimensional space: P^2 = P exactly, Q = I - P.
struct ObliquePair {
  std::size_t n = 0;
  RatMat P;
  RatMat Q;
  std::size_t rank_P = 0;

  /// Wraps an existing idempotent matrix. Throws InvalidArgument when P is
  /// not square or not idempotent.
  static ObliquePair from_matrix(const RatMat& p);
};

/// Deterministic random idempotent of rank k: P = A (B A)^-1 B with A (n x k)
/// and B (k x n) drawn with small integer entries from a seeded generator,
/// redrawn until B A is invertible (at most 64 attempts, then
/// GenerationFailed). Throws InvalidArgument unless 0 < k < n.
ObliquePair random_oblique_projection(std::size_t n, std::size_t k, std::uint64_t seed);

struct LabReport {
  VerificationReport checks;
  std::vector<Rat> char_PtP;  // monic, ascending
  std::vector<Rat> char_QtQ;
  int mult0_PtP = 0;  // r0
  int mult1_PtP = 0;  // r1
  int mult0_QtQ = 0;
  int mult1_QtQ = 0;
};

/// Machine verification of the singular-value facts for complementary
/// projections: exact characteristic polynomials of P^T P and Q^T Q, no
/// roots in (0,1) (Sturm), reduced-spectrum equality after removing the
/// 0 and 1 roots, the multiplicity bookkeeping mult0(QtQ) = n - r0 and
/// mult1(QtQ) = 2 r0 + r1 - n, and the float fixed-vector check for
/// eigenvalue-1 eigenvectors.
LabReport verify_complementary_spectra(const ObliquePair& pair);

}  // namespace ksg
