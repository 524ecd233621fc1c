#ifndef EVCD_PIPELINE_HPP
#define EVCD_PIPELINE_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "evcd/belief.hpp"
#include "evcd/ecm.hpp"
#include "evcd/graph.hpp"
#include "evcd/spectral.hpp"

namespace evcd {

struct SweepConfig {
    int c_min = 2;
    int c_max = 6;
    EcmParams ecm;
    // 0 = full powerset (allowed up to full_powerset_limit communities only)
    int max_card = 0;
    int full_powerset_limit = 8;
    bool pl_normalized = false;
    double outlier_threshold = 0.5;
    bool run_baselines = false;
    double fcm_fuzzifier = 2.0;
    double fcm_threshold = 0.25;  // lambda for multi-membership reporting

    void validate(int n) const;
    FocalSetCatalog make_catalog(int c) const;
};

struct FcmBaseline {
    Eigen::MatrixXd memberships;          // n x c
    std::vector<int> labels;              // highest-membership community
    std::vector<FocalSet> multi;          // communities with membership > lambda
    double q_h = 0.0;
    double q_fuzzy = 0.0;
};

struct CmBaseline {
    std::vector<int> labels;
    double q_h = 0.0;
};

struct PerCResult {
    int c = 0;
    double q_e = 0.0;
    double q_h_pignistic = 0.0;
    double q_fuzzy_pignistic = 0.0;
    Embedding embedding;
    CredalPartition partition{FocalSetCatalog(2, 2), Eigen::MatrixXd()};
    Eigen::MatrixXd contour;    // n x c, as used by Q_e
    Eigen::MatrixXd pignistic;  // n x c
    std::vector<int> pignistic_labels;
    HardCredalAssignment hard_credal;
    int outlier_count = 0;
    double ecm_objective = 0.0;
    int ecm_iterations = 0;
    int ecm_best_restart = 0;
    std::vector<double> objective_trace;
    std::optional<CmBaseline> cm;
    std::optional<FcmBaseline> fcm;
};

struct DetectionReport {
    std::vector<PerCResult> per_c;
    int best_c = 0;  // argmax Q_e, ties toward smaller c
};

// S.1-S.3: embed, cluster, and score each c in [c_min, c_max], then pick the
// c maximizing the evidential modularity.
DetectionReport detect(const Graph& g, const SweepConfig& cfg);

// Plain c-means with the same seeded farthest-point initialization and
// restart policy as ECM.
std::vector<int> baseline_cm(const Eigen::MatrixXd& points, int c,
                             std::uint64_t seed, int restarts = 10,
                             int max_iter = 500);

// Standard fuzzy c-means memberships.
Eigen::MatrixXd baseline_fcm(const Eigen::MatrixXd& points, int c,
                             double fuzzifier, std::uint64_t seed,
                             int restarts = 10, int max_iter = 500,
                             double tol = 1e-8);

}  // namespace evcd

#endif
