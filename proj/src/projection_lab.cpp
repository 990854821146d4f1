#include "ksgraph/projection_lab.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ksgraph/eig.hpp"
#include "ksgraph/error.hpp"

namespace ksg {

ObliquePair ObliquePair::from_matrix(const RatMat& p) {
  if (!p.square()) throw Error(ErrorCode::InvalidArgument, "projection must be square");
  if (p * p != p) throw Error(ErrorCode::InvalidArgument, "matrix is not idempotent");
  ObliquePair pair;
  pair.n = p.rows();
  pair.P = p;
  pair.Q = RatMat::identity(pair.n) - p;
  pair.rank_P = p.rank();
  return pair;
}

ObliquePair random_oblique_projection(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k == 0 || k >= n)
    throw Error(ErrorCode::InvalidArgument, "need 0 < k < n for an oblique pair");
  std::mt19937_64 rng(seed);
  // Entries in [-2, 2]; derived from the raw stream so the sequence is
  // identical across standard libraries.
  auto draw = [&rng]() { return static_cast<long long>(rng() % 5) - 2; };
  for (int attempt = 0; attempt < 64; ++attempt) {
    RatMat a(n, k), b(k, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = draw();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = draw();
    const RatMat ba = b * a;
    if (ba.det() == 0) continue;
    const RatMat p = a * ba.inverse() * b;
    ObliquePair pair = ObliquePair::from_matrix(p);
    if (pair.rank_P != k) continue;  // cannot happen: rank is k by construction
    return pair;
  }
  throw Error(ErrorCode::GenerationFailed, "no invertible B*A after 64 attempts");
}

LabReport verify_complementary_spectra(const ObliquePair& pair) {
  constexpr double kOneBand = 1e-6;
  constexpr double kResidualBar = 1e-9;
  LabReport report;
  const std::size_t n = pair.n;

  const RatMat ptp = pair.P.transpose() * pair.P;
  const RatMat qtq = pair.Q.transpose() * pair.Q;
  report.char_PtP = char_poly_rational(ptp);
  report.char_QtQ = char_poly_rational(qtq);

  // Multiplicities of the 0 and 1 roots, exactly.
  auto strip = [](const std::vector<Rat>& coeffs, int& mult0, int& mult1) {
    auto [m0, after0] = remove_rational_root(coeffs, Rat(0));
    auto [m1, reduced] = remove_rational_root(after0, Rat(1));
    mult0 = m0;
    mult1 = m1;
    return reduced;
  };
  const std::vector<Rat> reduced_p = strip(report.char_PtP, report.mult0_PtP, report.mult1_PtP);
  const std::vector<Rat> reduced_q = strip(report.char_QtQ, report.mult0_QtQ, report.mult1_QtQ);

  // Nonnull eigenvalues of P^T P (and of Q^T Q) are never below 1: no roots
  // in the open interval (0,1).
  report.checks.add("no_eigenvalues_below_one_PtP",
                    count_roots_in_open_unit_interval(clear_denominators(reduced_p)) == 0);
  report.checks.add("no_eigenvalues_below_one_QtQ",
                    count_roots_in_open_unit_interval(clear_denominators(reduced_q)) == 0);

  // The two spectra agree except for the multiplicities of 0 and 1.
  report.checks.add("reduced_spectra_equal", reduced_p == reduced_q);

  // Multiplicity bookkeeping for the 0 and 1 eigenvalues.
  const int r0 = report.mult0_PtP;
  const int r1 = report.mult1_PtP;
  {
    const bool ok0 = report.mult0_QtQ == static_cast<int>(n) - r0;
    const bool ok1 = report.mult1_QtQ == 2 * r0 + r1 - static_cast<int>(n);
    std::ostringstream os;
    os << "r0=" << r0 << " r1=" << r1 << " mult0(QtQ)=" << report.mult0_QtQ
       << " mult1(QtQ)=" << report.mult1_QtQ;
    report.checks.add("multiplicity_zero_QtQ", ok0, ok0 ? "" : os.str());
    report.checks.add("multiplicity_one_QtQ", ok1, ok1 ? "" : os.str());
  }

  // Consistency: rank and trace of an idempotent both equal rank_P.
  report.checks.add("rank_is_n_minus_mult0",
                    static_cast<int>(pair.rank_P) == static_cast<int>(n) - r0);
  report.checks.add("trace_equals_rank", pair.P.trace() == Rat(pair.rank_P));

  // spec(P^T P) = spec(P P^T) as exact polynomials.
  report.checks.add("ptp_ppt_same_spectrum",
                    char_poly_rational(pair.P * pair.P.transpose()) == report.char_PtP);

  // Exact form of the unit-eigenvector fact: the eigenvalue-1 eigenspace of
  // P^T P (the kernel of P^T P - I) is pointwise fixed by P and P^T.
  {
    const RatMat kernel = (ptp - RatMat::identity(n)).null_space();
    bool exact_ok = static_cast<int>(kernel.cols()) == r1;
    const RatMat pk = pair.P * kernel;
    const RatMat ptk = pair.P.transpose() * kernel;
    exact_ok = exact_ok && pk == kernel && ptk == kernel;
    report.checks.add("unit_eigenspace_fixed_exact", exact_ok);
  }

  // Float leg of the same statement. A float eigenvalue inside the 1e-6 band
  // need not be an exact 1 for random rational pairs, so the band is trusted
  // only when the exact spectrum has no other root near 1; the separation is
  // decided by Sturm counting on a rational interval around 1.
  bool separated = false;
  {
    std::vector<Rat> reduced = reduced_p;
    const Rat width(1, 1000);
    for (long long offset = 0; ; ++offset) {
      const Rat lo = Rat(1) - width - Rat(offset, 100000);
      const Rat hi = Rat(1) + width + Rat(offset, 100000);
      Rat at_lo = 0, at_hi = 0;
      for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
        at_lo = at_lo * lo + *it;
        at_hi = at_hi * hi + *it;
      }
      if (at_lo != 0 && at_hi != 0) {
        separated =
            count_distinct_roots_in(clear_denominators(reduced), lo, hi) == 0;
        break;
      }
      if (offset > static_cast<long long>(n) + 2) {  // unreachable
        separated = false;
        break;
      }
    }
  }
  bool fixed_ok = true;
  std::string fixed_detail;
  if (separated && r1 > 0) {
    // Residuals normalized like float_eig: the eigenvectors come from the
    // double image of P^T P, so errors scale with its norm.
    double gram_norm = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        gram_norm += to_double(ptp(i, j)) * to_double(ptp(i, j));
    const double scale = 1.0 + std::sqrt(gram_norm);

    auto pairs = float_eig(ptp, /*symmetric=*/true);
    std::sort(pairs.begin(), pairs.end(), [](const FloatEigenPair& a, const FloatEigenPair& b) {
      return std::abs(a.value - 1.0) < std::abs(b.value - 1.0);
    });
    pairs.resize(static_cast<std::size_t>(r1));
    for (const auto& eig : pairs) {
      if (std::abs(eig.value - 1.0) > kOneBand) {
        fixed_ok = false;
        fixed_detail = "unit eigenvalue drifted";
        break;
      }
      double norm = 0.0, err_p = 0.0, err_pt = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double row_p = 0.0, row_pt = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          row_p += to_double(pair.P(i, j)) * eig.vector[j];
          row_pt += to_double(pair.P(j, i)) * eig.vector[j];
        }
        err_p += (row_p - eig.vector[i]) * (row_p - eig.vector[i]);
        err_pt += (row_pt - eig.vector[i]) * (row_pt - eig.vector[i]);
        norm += eig.vector[i] * eig.vector[i];
      }
      if (std::sqrt(err_p) > kResidualBar * scale * std::sqrt(norm) ||
          std::sqrt(err_pt) > kResidualBar * scale * std::sqrt(norm)) {
        fixed_ok = false;
        std::ostringstream os;
        os << "lambda=" << eig.value << " err=" << std::sqrt(err_p) << "/" << std::sqrt(err_pt)
           << " scale=" << scale;
        fixed_detail = os.str();
        break;
      }
    }
  }
  report.checks.add("unit_eigenvectors_fixed", fixed_ok, fixed_detail);
  return report;
}

}  // namespace ksg
