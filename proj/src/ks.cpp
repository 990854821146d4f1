#include "ksgraph/ks.hpp"

#include <cmath>
#include <sstream>

#include "ksgraph/error.hpp"

namespace ksg {

namespace {

std::string diff_detail(const char* label, const RatMat& a, const RatMat& b) {
  const std::string d = RatMat::first_difference(a, b);
  if (d.empty()) return {};
  return std::string(label) + " " + d;
}

}  // namespace

KsPair ks_matrices(const BasisBundle& b, const ProjectionPair& p) {
  const std::size_t nco = b.num_cochords();
  const std::size_t nch = b.num_chords();
  const RatMat cycles = b.cycle_matrix();
  const RatMat cocycles = b.cocycle_matrix();

  KsPair ks;
  ks.K = cycles * cycles.transpose();
  ks.Kstar = cocycles * cocycles.transpose();

  const RatMat ptp = p.P.transpose() * p.P;
  const RatMat qqt = p.Q * p.Q.transpose();
  if (ks.K != ptp.block(nco, nco, nch, nch))
    throw std::logic_error("K differs from the chord block of P^T P");
  if (ks.Kstar != qqt.block(0, 0, nco, nco))
    throw std::logic_error("*K differs from the cochord block of Q Q^T");
  return ks;
}

SpectralReport spectra_match_mod_one(const KsPair& ks) {
  SpectralReport report;
  report.char_K = char_poly(ks.K);
  report.char_Kstar = char_poly(ks.Kstar);

  auto reduced_K = report.char_K.remove_root(1);
  auto reduced_Kstar = report.char_Kstar.remove_root(1);
  report.mult1_K = reduced_K.first;
  report.mult1_Kstar = reduced_Kstar.first;
  report.reduced_K = reduced_K.second;
  report.reduced_Kstar = reduced_Kstar.second;
  report.reduced_equal = report.reduced_K == report.reduced_Kstar;

  // K and *K are nonsingular, so 0 is never a root; after removing the
  // (x-1) factors the Sturm count over (0,1) is well defined.
  report.roots_below_one_K = count_roots_in_open_unit_interval(report.reduced_K);
  report.roots_below_one_Kstar = count_roots_in_open_unit_interval(report.reduced_Kstar);

  report.eig_K = float_eig(ks.K, /*symmetric=*/true);
  report.eig_Kstar = float_eig(ks.Kstar, /*symmetric=*/true);

  report.pass = report.reduced_equal && report.roots_below_one_K == 0 &&
                report.roots_below_one_Kstar == 0;
  return report;
}

VerificationReport verify_ks_identities(const BasisBundle& b, const ProjectionPair& p,
                                        const KsPair& ks) {
  VerificationReport report;
  const std::size_t ne = b.num_edges();
  const std::size_t nco = b.num_cochords();
  const std::size_t nch = b.num_chords();
  const RatMat identity_co = RatMat::identity(nco);
  const RatMat identity_ch = RatMat::identity(nch);
  const RatMat& w = p.omega_block;

  const RatMat k_inv = ks.K.inverse();
  const RatMat kstar_inv = ks.Kstar.inverse();

  const RatMat lhs1 = kstar_inv;
  const RatMat rhs1 = identity_co - w * k_inv * w.transpose();
  report.add("kstar_inverse_identity", lhs1 == rhs1, diff_detail("*K^-1", lhs1, rhs1));

  const RatMat rhs2 = identity_ch - w.transpose() * kstar_inv * w;
  report.add("k_inverse_identity", k_inv == rhs2, diff_detail("K^-1", k_inv, rhs2));

  const RatMat rhs3 = identity_co + w * w.transpose();
  report.add("kstar_superposition", ks.Kstar == rhs3, diff_detail("*K", ks.Kstar, rhs3));

  const RatMat rhs4 = identity_ch + w.transpose() * w;
  report.add("k_superposition", ks.K == rhs4, diff_detail("K", ks.K, rhs4));

  const RatMat identity = RatMat::identity(ne);
  const RatMat sum = p.P.transpose() * p.P + p.Q * p.Q.transpose();
  const RatMat i_minus_omega2 = identity - p.omega_full * p.omega_full;
  const RatMat factored =
      (identity + p.omega_full).transpose() * (identity + p.omega_full);
  report.add("gram_sum_identity", sum == i_minus_omega2,
             diff_detail("PtP+QQt vs I-Omega^2", sum, i_minus_omega2));
  report.add("omega_factorization", i_minus_omega2 == factored,
             diff_detail("I-Omega^2 vs (I+Omega)^T(I+Omega)", i_minus_omega2, factored));

  const RatMat lambda = lambda_matrix(b);
  const RatMat lambda_star = lambda_star_matrix(b);
  const RatMat product = lambda * lambda_star.transpose();
  report.add("lambda_inverse_is_lambda_star_T", product == identity,
             diff_detail("Lambda *Lambda^T vs I", product, identity));
  return report;
}

VerificationReport matrix_tree_check(const OrientedGraph& g, const KsPair& ks) {
  VerificationReport report;
  const std::uint64_t trees = enumerate_spanning_trees(g);
  const Rat det_K = ks.K.det();
  const Rat det_Kstar = ks.Kstar.det();
  const Rat expected(trees);
  std::ostringstream os;
  os << "det K = " << rational_to_string(det_K) << ", det *K = " << rational_to_string(det_Kstar)
     << ", #trees = " << trees;
  report.add("matrix_tree_det_K", det_K == expected, det_K == expected ? "" : os.str());
  report.add("matrix_tree_det_Kstar", det_Kstar == expected,
             det_Kstar == expected ? "" : os.str());
  return report;
}

VerificationReport eigenvector_transport_check(const BasisBundle& b, const ProjectionPair& p,
                                               const KsPair& ks) {
  constexpr double kOneBand = 1e-6;
  constexpr double kResidualBar = 1e-9;
  VerificationReport report;
  const std::size_t ne = b.num_edges();
  const std::size_t nco = b.num_cochords();

  const RatMat ptp = p.P.transpose() * p.P;
  const auto pairs = float_eig(ptp, /*symmetric=*/true);
  std::size_t transported = 0;
  bool ok = true;
  std::string detail;
  for (const auto& pair : pairs) {
    if (pair.value <= 1.0 + kOneBand) continue;
    ++transported;
    std::vector<double> chord_part(pair.vector.begin() + nco, pair.vector.end());
    const double res_k = eigen_residual(ks.K, chord_part, pair.value);
    // cochord part of P w
    std::vector<double> pw(nco, 0.0);
    for (std::size_t i = 0; i < nco; ++i)
      for (std::size_t j = 0; j < ne; ++j) pw[i] += to_double(p.P(i, j)) * pair.vector[j];
    const double res_kstar = eigen_residual(ks.Kstar, pw, pair.value);
    if (res_k > kResidualBar || res_kstar > kResidualBar) {
      ok = false;
      std::ostringstream os;
      os << "lambda=" << pair.value << " residuals " << res_k << ", " << res_kstar;
      detail = os.str();
      break;
    }
  }
  {
    std::ostringstream os;
    os << transported << " eigenpairs with lambda > 1";
    report.add("transport_PtP_to_K_and_Kstar", ok, ok ? os.str() : detail);
  }

  // Eigenvalue-1 eigenvectors are fixed by the projection and its transpose.
  auto check_fixed = [&](const RatMat& gram, const RatMat& proj, const char* name) {
    bool fixed_ok = true;
    std::string fixed_detail;
    std::size_t found = 0;
    for (const auto& pair : float_eig(gram, /*symmetric=*/true)) {
      if (std::abs(pair.value - 1.0) > kOneBand) continue;
      ++found;
      double norm = 0.0;
      double err_p = 0.0;
      double err_pt = 0.0;
      for (std::size_t i = 0; i < ne; ++i) {
        double row_p = 0.0;
        double row_pt = 0.0;
        for (std::size_t j = 0; j < ne; ++j) {
          row_p += to_double(proj(i, j)) * pair.vector[j];
          row_pt += to_double(proj(j, i)) * pair.vector[j];
        }
        err_p += (row_p - pair.vector[i]) * (row_p - pair.vector[i]);
        err_pt += (row_pt - pair.vector[i]) * (row_pt - pair.vector[i]);
        norm += pair.vector[i] * pair.vector[i];
      }
      if (std::sqrt(err_p) > kResidualBar * std::sqrt(norm) ||
          std::sqrt(err_pt) > kResidualBar * std::sqrt(norm)) {
        fixed_ok = false;
        std::ostringstream os;
        os << "lambda=" << pair.value << " not fixed";
        fixed_detail = os.str();
        break;
      }
    }
    std::ostringstream os;
    os << found << " unit eigenpairs";
    report.add(name, fixed_ok, fixed_ok ? os.str() : fixed_detail);
  };
  check_fixed(ptp, p.P, "unit_eigenvectors_fixed_by_P");
  check_fixed(p.Q * p.Q.transpose(), p.Q, "unit_eigenvectors_fixed_by_Q");
  return report;
}

TreeChangeReport tree_change_report(const OrientedGraph& g, const TreeSelection& t_old,
                                    const TreeSelection& t_new) {
  const BasisBundle b_old = build_basis(g, t_old);
  const BasisBundle b_new = build_basis(g, t_new);
  const std::size_t nch = t_old.num_chords();
  if (t_new.num_chords() != nch)
    throw Error(ErrorCode::DimensionMismatch, "trees have different chord counts");

  TreeChangeReport report;
  // S_{a,a'} = component of new cycle a on old chord a' (user indexing).
  report.S = RatMat::zero(nch, nch);
  for (std::size_t a = 0; a < nch; ++a) {
    const IntVec& cycle = b_new.cycles[a];
    for (std::size_t ap = 0; ap < nch; ++ap) {
      const std::size_t user = g.edge_index(t_old.chord_edges[ap]);
      report.S(a, ap) = cycle[t_new.user_to_canon[user]];
    }
  }
  const RatMat k_old = b_old.cycle_matrix() * b_old.cycle_matrix().transpose();
  const RatMat k_new = b_new.cycle_matrix() * b_new.cycle_matrix().transpose();

  report.det_S = report.S.det();
  report.unimodular = report.det_S == 1 || report.det_S == -1;
  report.gram_transformed = k_new == report.S * k_old * report.S.transpose();
  report.det_invariant = k_new.det() == k_old.det();
  report.char_old = char_poly(k_old);
  report.char_new = char_poly(k_new);
  report.spectrum_changed = report.char_old != report.char_new;
  return report;
}

}  // namespace ksg
