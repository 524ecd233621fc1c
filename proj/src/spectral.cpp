#include "evcd/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <string>

#include "evcd/errors.hpp"

namespace evcd {

GeneralizedEigs generalized_eigs(const Graph& g, int k) {
    const int n = g.size();
    if (k < 1 || k > n)
        throw InputError("requested " + std::to_string(k) +
                         " eigenpairs from a graph of " + std::to_string(n) +
                         " nodes");

    const Eigen::VectorXd d_inv_sqrt = g.degrees().array().rsqrt();
    // symmetric reduction: D^{-1/2} W D^{-1/2} y = lambda y, x = D^{-1/2} y
    const Eigen::MatrixXd sym =
        d_inv_sqrt.asDiagonal() * g.weights() * d_inv_sqrt.asDiagonal();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        throw NumericError("symmetric eigensolver failed to converge on the " +
                           std::to_string(n) + "-node system");

    // Eigen returns ascending order; take the top k from the right.
    GeneralizedEigs out;
    out.eigenvalues.resize(k);
    out.eigenvectors.resize(n, k);
    for (int j = 0; j < k; ++j) {
        const int src = n - 1 - j;
        out.eigenvalues(j) = solver.eigenvalues()(src);
        Eigen::VectorXd x =
            d_inv_sqrt.asDiagonal() * solver.eigenvectors().col(src);
        // x' D x = y' y = 1 already; fix the sign deterministically
        int arg = 0;
        x.cwiseAbs().maxCoeff(&arg);
        if (x(arg) < 0.0) x = -x;
        out.eigenvectors.col(j) = x;
    }
    return out;
}

Embedding embed(const Graph& g, int c) {
    if (c < 2 || c > g.size())
        throw InputError("community count must be in [2, n], got " +
                         std::to_string(c));
    GeneralizedEigs eigs = generalized_eigs(g, c);
    Embedding out;
    out.eigenvalues = eigs.eigenvalues;
    out.coords = eigs.eigenvectors.rightCols(c - 1);
    return out;
}

}  // namespace evcd
