#pragma once

#include "ksgraph/basis.hpp"
#include "ksgraph/eig.hpp"
#include "ksgraph/matrix.hpp"
#include "ksgraph/polynomial.hpp"
#include "ksgraph/projections.hpp"
#include "ksgraph/report.hpp"

namespace ksg {

/// Kirchhoff-Symanzik matrices: K is the Gramian of the fundamental cycles
/// (|C| x |C|), Kstar the Gramian of the fundamental cocycles
/// ((|V|-1) x (|V|-1)). Both are symmetric positive-definite and integer.
struct KsPair {
  RatMat K;
  RatMat Kstar;
};

/// Builds the Gramians and asserts exactly that K equals the chord block of
/// P^T P and Kstar the cochord block of Q Q^T.
KsPair ks_matrices(const BasisBundle& b, const ProjectionPair& p);

struct SpectralReport {
  IntPoly char_K;
  IntPoly char_Kstar;
  int mult1_K = 0;
  int mult1_Kstar = 0;
  IntPoly reduced_K;       // char_K with all (x-1) factors removed
  IntPoly reduced_Kstar;   // same for Kstar
  bool reduced_equal = false;
  int roots_below_one_K = 0;      // Sturm count in (0,1), expected 0
  int roots_below_one_Kstar = 0;
  std::vector<FloatEigenPair> eig_K;
  std::vector<FloatEigenPair> eig_Kstar;
  bool pass = false;
};

/// Spectra coincide up to the multiplicity of eigenvalue 1, and no eigenvalue
/// lies in (0,1): both verified exactly via characteristic polynomials,
/// (x-1)-factor removal, and Sturm root counting.
SpectralReport spectra_match_mod_one(const KsPair& ks);

/// Exact checks of the inverse/superposition identities
///   *K^-1 = 1 - w K^-1 w^T,  K^-1 = 1 - w^T *K^-1 w,
///   *K = 1 + w w^T,          K = 1 + w^T w,
///   P^T P + Q Q^T = I - Omega^2 = (I+Omega)^T (I+Omega),
///   Lambda^-1 = *Lambda^T.
VerificationReport verify_ks_identities(const BasisBundle& b, const ProjectionPair& p,
                                        const KsPair& ks);

/// det K = det *K = number of spanning trees (brute-force enumeration).
VerificationReport matrix_tree_check(const OrientedGraph& g, const KsPair& ks);

/// Float eigenpair transport: for eigenvalues lambda > 1 of P^T P, the chord
/// part is a K-eigenvector and the cochord part of P w a *K-eigenvector for
/// the same lambda; eigenvalue-1 vectors of P^T P (resp. Q Q^T) are fixed by
/// the projection and its transpose. Residual bar 1e-9.
VerificationReport eigenvector_transport_check(const BasisBundle& b, const ProjectionPair& p,
                                               const KsPair& ks);

struct TreeChangeReport {
  RatMat S;             // new cycles expressed on old chords
  Rat det_S;
  bool unimodular = false;     // |det S| = 1
  bool gram_transformed = false;  // K_new = S K_old S^T
  bool det_invariant = false;
  bool spectrum_changed = false;
  IntPoly char_old;
  IntPoly char_new;
};

/// Change-of-tree transvection data between two valid spanning trees.
TreeChangeReport tree_change_report(const OrientedGraph& g, const TreeSelection& t_old,
                                    const TreeSelection& t_new);

}  // namespace ksg
