#include "ksgraph/projections.hpp"

#include <sstream>

namespace ksg {

namespace {

std::string diff_detail(const char* label, const RatMat& a, const RatMat& b) {
  const std::string d = RatMat::first_difference(a, b);
  if (d.empty()) return {};
  return std::string(label) + " " + d;
}

}  // namespace

ProjectionPair build_projections(const BasisBundle& b) {
  const std::size_t ne = b.num_edges();
  const std::size_t nco = b.num_cochords();
  const std::size_t nch = b.num_chords();

  // P's only nonzero columns sit at chord positions and hold the cycles;
  // Q's only nonzero rows sit at cochord positions and hold the cocycles.
  ProjectionPair pair;
  pair.P = RatMat::zero(ne, ne);
  for (std::size_t a = 0; a < nch; ++a)
    for (std::size_t i = 0; i < ne; ++i) pair.P(i, nco + a) = b.cycles[a][i];
  pair.Q = RatMat::zero(ne, ne);
  for (std::size_t m = 0; m < nco; ++m)
    for (std::size_t j = 0; j < ne; ++j) pair.Q(m, j) = b.cocycles[m][j];

  pair.omega_full = pair.P - pair.P.transpose();
  pair.omega_block = pair.omega_full.block(0, nco, nco, nch);

  if (pair.P * pair.P != pair.P || pair.Q * pair.Q != pair.Q)
    throw std::logic_error("projection is not idempotent");
  if (!(pair.P * pair.Q).is_zero() || !(pair.Q * pair.P).is_zero())
    throw std::logic_error("projections do not annihilate each other");
  if (pair.P + pair.Q != RatMat::identity(ne))
    throw std::logic_error("projections do not sum to the identity");
  if (pair.omega_full != pair.Q.transpose() - pair.Q)
    throw std::logic_error("two-form mismatch between P and Q");
  if (pair.omega_full.transpose() != -pair.omega_full)
    throw std::logic_error("two-form is not antisymmetric");
  return pair;
}

VerificationReport verify_projection_identities(const BasisBundle& b, const ProjectionPair& p) {
  VerificationReport report;
  const std::size_t ne = b.num_edges();
  const std::size_t nco = b.num_cochords();
  const std::size_t nch = b.num_chords();
  const RatMat identity = RatMat::identity(ne);

  report.add("P_idempotent", p.P * p.P == p.P, diff_detail("P^2 vs P", p.P * p.P, p.P));
  report.add("Q_idempotent", p.Q * p.Q == p.Q, diff_detail("Q^2 vs Q", p.Q * p.Q, p.Q));
  const RatMat pq = p.P * p.Q;
  const RatMat qp = p.Q * p.P;
  report.add("PQ_zero", pq.is_zero(), diff_detail("PQ vs 0", pq, RatMat::zero(ne, ne)));
  report.add("QP_zero", qp.is_zero(), diff_detail("QP vs 0", qp, RatMat::zero(ne, ne)));
  report.add("P_plus_Q_identity", p.P + p.Q == identity,
             diff_detail("P+Q vs I", p.P + p.Q, identity));

  // Kernel/image characterization against the incidence matrix, which is an
  // independent description of the cycle space (its null space).
  const RatMat incidence = b.incidence_canonical();
  report.add("im_P_in_cycle_space", (incidence * p.P).is_zero(), "d*P != 0");
  report.add("rank_P_is_cyclomatic", p.P.rank() == nch,
             p.P.rank() == nch ? "" : "rank P = " + std::to_string(p.P.rank()));
  bool cochord_cols_zero = true;
  for (std::size_t j = 0; j < nco && cochord_cols_zero; ++j)
    for (std::size_t i = 0; i < ne; ++i)
      if (p.P(i, j) != 0) {
        cochord_cols_zero = false;
        break;
      }
  report.add("ker_P_contains_cochords", cochord_cols_zero);
  bool chord_rows_zero = true;
  for (std::size_t i = nco; i < ne && chord_rows_zero; ++i)
    for (std::size_t j = 0; j < ne; ++j)
      if (p.Q(i, j) != 0) {
        chord_rows_zero = false;
        break;
      }
  report.add("im_Q_in_cochord_space", chord_rows_zero);
  report.add("rank_Q_is_cotree", p.Q.rank() == nco,
             p.Q.rank() == nco ? "" : "rank Q = " + std::to_string(p.Q.rank()));
  return report;
}

VerificationReport verify_two_form(const BasisBundle& b, const ProjectionPair& p) {
  VerificationReport report;
  const std::size_t ne = b.num_edges();
  const std::size_t nco = b.num_cochords();
  const std::size_t nch = b.num_chords();

  // (i) cycle 2-form equals cocycle 2-form:
  //     sum_a (c_a e_a^T - e_a c_a^T) = sum_m (c_m e_m^T - e_m c_m^T)
  RatMat cycle_form = RatMat::zero(ne, ne);
  for (std::size_t a = 0; a < nch; ++a) {
    for (std::size_t i = 0; i < ne; ++i) {
      cycle_form(i, nco + a) += b.cycles[a][i];
      cycle_form(nco + a, i) -= b.cycles[a][i];
    }
  }
  RatMat cocycle_form = RatMat::zero(ne, ne);
  for (std::size_t m = 0; m < nco; ++m) {
    for (std::size_t i = 0; i < ne; ++i) {
      cocycle_form(i, m) += b.cocycles[m][i];
      cocycle_form(m, i) -= b.cocycles[m][i];
    }
  }
  report.add("two_forms_coincide", cycle_form == cocycle_form,
             diff_detail("cycle vs cocycle form", cycle_form, cocycle_form));
  report.add("omega_matches_forms", p.omega_full == cycle_form,
             diff_detail("Omega vs form", p.omega_full, cycle_form));

  // (ii) <e_m|c_a> + <c_m|e_a> = 0 for every cochord/chord pair.
  bool anticommute = true;
  std::string anticommute_detail;
  for (std::size_t m = 0; m < nco && anticommute; ++m) {
    for (std::size_t a = 0; a < nch; ++a) {
      const int lhs = b.cycles[a][m] + b.cocycles[m][nco + a];
      if (lhs != 0) {
        anticommute = false;
        std::ostringstream os;
        os << "(mu,alpha)=(" << m << "," << a << "): sum=" << lhs;
        anticommute_detail = os.str();
        break;
      }
    }
  }
  report.add("pairing_anticommutation", anticommute, anticommute_detail);

  // (iii) Omega_{mu,alpha} = +1 iff chord alpha lies in -c_mu, -1 iff in c_mu.
  bool membership = true;
  std::string membership_detail;
  for (std::size_t m = 0; m < nco && membership; ++m) {
    for (std::size_t a = 0; a < nch; ++a) {
      const Rat expected = -b.cocycles[m][nco + a];
      if (p.omega_block(m, a) != expected) {
        membership = false;
        std::ostringstream os;
        os << "(mu,alpha)=(" << m << "," << a << ")";
        membership_detail = os.str();
        break;
      }
    }
  }
  report.add("omega_signed_membership", membership, membership_detail);
  return report;
}

RatMat lambda_matrix(const BasisBundle& b) {
  const std::size_t ne = b.num_edges();
  const std::size_t nco = b.num_cochords();
  RatMat m = RatMat::zero(ne, ne);
  for (std::size_t i = 0; i < nco; ++i) m(i, i) = 1;
  for (std::size_t a = 0; a < b.num_chords(); ++a)
    for (std::size_t j = 0; j < ne; ++j) m(nco + a, j) = b.cycles[a][j];
  return m;
}

RatMat lambda_star_matrix(const BasisBundle& b) {
  const std::size_t ne = b.num_edges();
  const std::size_t nco = b.num_cochords();
  RatMat m = RatMat::zero(ne, ne);
  for (std::size_t i = 0; i < nco; ++i)
    for (std::size_t j = 0; j < ne; ++j) m(i, j) = b.cocycles[i][j];
  for (std::size_t a = nco; a < ne; ++a) m(a, a) = 1;
  return m;
}

}  // namespace ksg
