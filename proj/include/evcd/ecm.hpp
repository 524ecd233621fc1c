#ifndef EVCD_ECM_HPP
#define EVCD_ECM_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "evcd/belief.hpp"

namespace evcd {

struct EcmParams {
    double alpha = 1.0;   // cardinality exponent
    double beta = 2.0;    // fuzzifier, > 1
    double delta = 10.0;  // outlier distance, > 0
    int max_iter = 500;
    double tol = 1e-8;    // relative objective change
    int restarts = 10;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Reference points for the nonempty focal sets: row j is the mean of the
/// singleton prototypes contained in catalog set j+1.
struct Barycenters {
    Eigen::MatrixXd prototypes;  // c x d singleton centers
    Eigen::MatrixXd centers;     // (|catalog|-1) x d, nonempty sets in order
};

struct EcmResult {
    CredalPartition partition;
    Eigen::MatrixXd prototypes;
    double objective = 0.0;
    int iterations = 0;
    int best_restart = 0;
    std::vector<double> objective_trace;
};

Barycenters barycenters(const FocalSetCatalog& cat,
                        const Eigen::MatrixXd& prototypes);

// J = sum_i sum_{A != empty} |A|^alpha m_i(A)^beta d_iA^2
//     + sum_i delta^2 m_i(empty)^beta
double ecm_objective(const Eigen::MatrixXd& points, const CredalPartition& p,
                     const Eigen::MatrixXd& prototypes, const EcmParams& params);

// Row-wise minimizer of the objective for fixed barycenters.
CredalPartition update_masses(const Eigen::MatrixXd& points,
                              const FocalSetCatalog& cat,
                              const Barycenters& bary, const EcmParams& params);

// Minimizer over prototypes for fixed masses (c x c linear system per
// dimension). Throws NumericError when the system is singular.
Eigen::MatrixXd update_prototypes(const Eigen::MatrixXd& points,
                                  const CredalPartition& p,
                                  const EcmParams& params);

// Alternating minimization with seeded farthest-point restarts; returns the
// lowest-objective run. Deterministic given (points, catalog, params).
EcmResult ecm_cluster(const Eigen::MatrixXd& points, const FocalSetCatalog& cat,
                      const EcmParams& params);

// Seeded farthest-point choice of c distinct data rows (also used by the
// c-means baselines).
Eigen::MatrixXd farthest_point_init(const Eigen::MatrixXd& points, int c,
                                    std::uint64_t seed, int restart);

}  // namespace evcd

#endif
