#pragma once

#include <Eigen/Core>

namespace netstab {

/// Ordered real Schur form A = Z T Z' with the selected eigenvalues leading.
/// `stable_first` selects Re(lambda) < 0. Returns the number of selected
/// eigenvalues. T and Z are overwritten outputs.
Eigen::Index ordered_schur(const Eigen::MatrixXd& A, Eigen::MatrixXd& T,
                           Eigen::MatrixXd& Z, bool stable_first = true);

/// Stabilizing solution X of A'X + XA - X G X + Q = 0 with G = B R^{-1} B'.
/// Ordered-Schur extraction of the Hamiltonian's stable invariant subspace,
/// with Newton/Kleinman refinement when the subspace basis is ill-conditioned
/// (condition > 1e10) or the residual is loose.
Eigen::MatrixXd solve_care(const Eigen::MatrixXd& A, const Eigen::MatrixXd& G,
                           const Eigen::MatrixXd& Q);

/// X solving A X + X A' + Q = 0 for Hurwitz A (Kronecker product route;
/// intended for desk-scale systems).
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q);

/// X solving A X - X B = C with disjoint spectra of A and B.
Eigen::MatrixXd solve_sylvester(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                const Eigen::MatrixXd& C);

/// PBH tests at tolerance 1e-8: every eigenvalue with Re >= -1e-9 must keep
/// [A - lambda I, B] (resp. the dual pair) full rank.
bool is_stabilizable(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol = 1e-8);
bool is_detectable(const Eigen::MatrixXd& A, const Eigen::MatrixXd& C, double tol = 1e-8);

}  // namespace netstab
