#ifndef EVCD_SPECTRAL_HPP
#define EVCD_SPECTRAL_HPP

#include <Eigen/Dense>

#include "evcd/graph.hpp"

namespace evcd {

/// Spectral coordinates from the generalized eigensystem W x = lambda D x.
struct Embedding {
    // row i = coordinates of node i in (c-1)-dimensional space
    Eigen::MatrixXd coords;
    // the retained generalized eigenvalues, descending, including the
    // discarded leading one (diagnostics)
    Eigen::VectorXd eigenvalues;
};

struct GeneralizedEigs {
    Eigen::VectorXd eigenvalues;   // descending, length k
    Eigen::MatrixXd eigenvectors;  // n x k, columns D-normalized (x' D x = 1)
};

// Top-k solutions of W x = lambda D x via the symmetric reduction
// D^{-1/2} W D^{-1/2}. Sign convention: the largest-magnitude entry of each
// eigenvector is positive.
GeneralizedEigs generalized_eigs(const Graph& g, int k);

// Columns e_2..e_c of the top-c eigenvectors (the near-constant leading
// vector dropped), one (c-1)-dimensional row per node.
Embedding embed(const Graph& g, int c);

}  // namespace evcd

#endif
