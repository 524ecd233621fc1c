#ifndef EVCD_MODULARITY_HPP
#define EVCD_MODULARITY_HPP

#include <Eigen/Dense>
#include <vector>

#include "evcd/belief.hpp"
#include "evcd/graph.hpp"

namespace evcd {

// Q_h = (1/||W||) sum_k sum_ij (w_ij - k_i k_j / ||W||) delta_ik delta_jk
double hard_modularity(const Graph& g, const std::vector<int>& labels);

// trace(U' B U) / ||W|| for a row-stochastic membership matrix U.
double fuzzy_modularity(const Graph& g, const Eigen::MatrixXd& memberships);

// Q_e: the same bilinear form on the contour (singleton-plausibility)
// vectors. With normalized = true, contour rows are divided by 1 - m(empty)
// first (sensitivity variant, not the default).
double evidential_modularity(const Graph& g, const CredalPartition& p,
                             bool normalized = false);

}  // namespace evcd

#endif
