#pragma once

#include <Eigen/Dense>

namespace btbeam {

/// Eigen-data of a symmetric positive definite operator. Eigenvalues are
/// sorted ascending; eigenvector columns are orthonormal in the h-weighted
/// inner product.
struct EigenPairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Discrete clamped-boundary operators on a uniform grid over (0, length)
/// with n interior nodes, h = length/(n+1).
///
/// lap is the second-difference Dirichlet Laplacian (negative definite).
/// bilap is the fourth-difference bilaplacian with the clamped condition
/// encoded by ghost elimination: u = 0 at the boundary node and the ghost
/// value reflected (u_{-1} = u_1) from the zero normal derivative, which
/// adds +1/h^4 to the diagonal of the first and last interior rows.
struct DiscreteOperators {
  double length = 0.0;
  int n = 0;
  double h = 0.0;
  Eigen::MatrixXd lap;
  Eigen::MatrixXd bilap;
};

DiscreteOperators assemble_operators(double length, int n);

/// Rectangle-rule quadrature of the L2 inner product: h * sum(a_i b_i).
double h_inner(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double h);

/// ||D2 u||^2 := <bilap u, u>_h  (exact discrete analogue of ||Delta u||^2
/// under clamped conditions).
double bilap_quadform(const DiscreteOperators& ops, const Eigen::VectorXd& u);

/// ||grad u||^2 := <-lap u, u>_h.
double grad_quadform(const DiscreteOperators& ops, const Eigen::VectorXd& u);

/// ||u||^2 := h * sum(u_i^2).
double l2_sq(const DiscreteOperators& ops, const Eigen::VectorXd& u);

/// H-norm squared of a state pair: ||D2 u||^2 + ||v||^2.
double hnorm_sq(const DiscreteOperators& ops, const Eigen::VectorXd& u,
                const Eigen::VectorXd& v);

/// Smallest eigenvalue of bilap in the h-weighted inner product. The
/// embedding constant satisfying ||u|| <= d ||D2 u|| is d = Lambda1^{-1/2}.
double biharmonic_min_eigenvalue(const DiscreteOperators& ops);

/// Smallest c' with ||grad u||^2 <= c' ||D2 u||^2 over the discrete space,
/// i.e. the largest eigenvalue of the pencil (-lap) u = mu * bilap u.
double gradient_embedding_constant(const DiscreteOperators& ops);

/// Eigenpairs of S = bilap + kappa*(-lap), symmetric positive definite.
EigenPairs stiffness_eigendecomposition(const DiscreteOperators& ops,
                                        double kappa);

/// Eigenpairs of -lap (used by the strong-variant damping substep).
EigenPairs gradient_eigendecomposition(const DiscreteOperators& ops);

}  // namespace btbeam
