#include "netstab/riccati.hpp"

#include <lapacke.h>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "netstab/errors.hpp"

namespace netstab {

namespace {

lapack_logical select_stable(const double* re, const double* im) {
  (void)im;
  return *re < 0.0 ? 1 : 0;
}
lapack_logical select_antistable(const double* re, const double* im) {
  (void)im;
  return *re < 0.0 ? 0 : 1;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  Eigen::MatrixXd K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

double care_residual(const Eigen::MatrixXd& A, const Eigen::MatrixXd& G,
                     const Eigen::MatrixXd& Q, const Eigen::MatrixXd& X) {
  const Eigen::MatrixXd R = A.transpose() * X + X * A - X * G * X + Q;
  const double scale = std::max(1.0, Q.norm() + X.norm() * A.norm());
  return R.norm() / scale;
}

}  // namespace

Eigen::Index ordered_schur(const Eigen::MatrixXd& A, Eigen::MatrixXd& T,
                           Eigen::MatrixXd& Z, bool stable_first) {
  const lapack_int n = static_cast<lapack_int>(A.rows());
  T = A;  // column-major in Eigen matches LAPACK_COL_MAJOR
  Z.resize(n, n);
  Eigen::VectorXd wr(n), wi(n);
  lapack_int sdim = 0;
  const lapack_int info = LAPACKE_dgees(
      LAPACK_COL_MAJOR, 'V', 'S', stable_first ? select_stable : select_antistable,
      n, T.data(), n, &sdim, wr.data(), wi.data(), Z.data(), n);
  if (info != 0) throw RiccatiFailure("ordered Schur factorization failed (dgees info != 0)");
  return static_cast<Eigen::Index>(sdim);
}

Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q) {
  const Eigen::Index n = A.rows();
  if (n == 0) return Eigen::MatrixXd(0, 0);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  // vec(AX + XA') = (I kron A + A kron I) vec(X)
  Eigen::MatrixXd K = kron(I, A) + kron(A, I);
  Eigen::VectorXd q(Eigen::Map<const Eigen::VectorXd>(Q.data(), n * n));
  Eigen::VectorXd x = K.partialPivLu().solve(-q);
  Eigen::MatrixXd X = Eigen::Map<Eigen::MatrixXd>(x.data(), n, n);
  return 0.5 * (X + X.transpose());
}

Eigen::MatrixXd solve_sylvester(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                const Eigen::MatrixXd& C) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = B.rows();
  if (m == 0 || n == 0) return Eigen::MatrixXd(m, n);
  // vec(AX - XB) = (I_n kron A - B' kron I_m) vec(X)
  Eigen::MatrixXd K = kron(Eigen::MatrixXd::Identity(n, n), A) -
                      kron(B.transpose(), Eigen::MatrixXd::Identity(m, m));
  Eigen::VectorXd c(Eigen::Map<const Eigen::VectorXd>(C.data(), m * n));
  Eigen::VectorXd x = K.partialPivLu().solve(c);
  return Eigen::Map<Eigen::MatrixXd>(x.data(), m, n);
}

Eigen::MatrixXd solve_care(const Eigen::MatrixXd& A, const Eigen::MatrixXd& G,
                           const Eigen::MatrixXd& Q) {
  const Eigen::Index n = A.rows();
  if (n == 0) return Eigen::MatrixXd(0, 0);

  Eigen::MatrixXd H(2 * n, 2 * n);
  H.topLeftCorner(n, n) = A;
  H.topRightCorner(n, n) = -G;
  H.bottomLeftCorner(n, n) = -Q;
  H.bottomRightCorner(n, n) = -A.transpose();

  Eigen::MatrixXd T, Z;
  const Eigen::Index sdim = ordered_schur(H, T, Z);
  if (sdim != n)
    throw RiccatiFailure("Hamiltonian has " + std::to_string(sdim) +
                         " stable eigenvalues, expected " + std::to_string(n));

  const Eigen::MatrixXd U1 = Z.topLeftCorner(n, n);
  const Eigen::MatrixXd U2 = Z.bottomLeftCorner(n, n);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(U1);
  const double cond = svd.singularValues()(0) / svd.singularValues()(n - 1);

  Eigen::MatrixXd X = U1.transpose().partialPivLu().solve(U2.transpose()).transpose();
  X = 0.5 * (X + X.transpose());

  double res = care_residual(A, G, Q, X);
  if (cond > 1e10 || res > 1e-10) {
    // Newton/Kleinman polish: each step solves a Lyapunov equation at the
    // current closed-loop matrix.
    for (int it = 0; it < 20 && res > 1e-12; ++it) {
      const Eigen::MatrixXd Acl = A - G * X;
      Eigen::ComplexEigenSolver<Eigen::MatrixXd> es(Acl);
      if (es.eigenvalues().real().maxCoeff() >= 0.0) break;
      const Eigen::MatrixXd W = Q + X * G * X;
      // Acl' Xn + Xn Acl + W = 0
      const Eigen::MatrixXd Xn = solve_lyapunov(Acl.transpose(), W);
      const double res_n = care_residual(A, G, Q, Xn);
      if (!(res_n < res)) break;
      X = Xn;
      res = res_n;
    }
  }
  if (!X.allFinite() || res > 1e-6)
    throw RiccatiFailure("no stabilizing Riccati solution found (residual " +
                         std::to_string(res) + ")");
  return X;
}

namespace {

bool pbh_full_rank(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol) {
  const Eigen::Index n = A.rows();
  if (n == 0) return true;
  Eigen::ComplexEigenSolver<Eigen::MatrixXd> es(A);
  const double scale = std::max(1.0, A.norm() + B.norm());
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::complex<double> lam = es.eigenvalues()(i);
    if (lam.real() < -1e-9) continue;  // only modes that must be moved
    Eigen::MatrixXcd M(n, n + B.cols());
    M.leftCols(n) = A.cast<std::complex<double>>() -
                    lam * Eigen::MatrixXcd::Identity(n, n);
    M.rightCols(B.cols()) = B.cast<std::complex<double>>();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    if (svd.singularValues()(n - 1) < tol * scale) return false;
  }
  return true;
}

}  // namespace

bool is_stabilizable(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol) {
  return pbh_full_rank(A, B, tol);
}

bool is_detectable(const Eigen::MatrixXd& A, const Eigen::MatrixXd& C, double tol) {
  return pbh_full_rank(A.transpose(), C.transpose(), tol);
}

}  // namespace netstab
