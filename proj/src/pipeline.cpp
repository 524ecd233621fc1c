#include "evcd/pipeline.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "evcd/errors.hpp"
#include "evcd/modularity.hpp"

namespace evcd {

void SweepConfig::validate(int n) const {
    if (c_min < 2) throw InputError("cmin must be >= 2");
    if (c_max < c_min) throw InputError("cmax must be >= cmin");
    if (c_max > n - 1)
        throw InputError("cmax must be <= n - 1 = " + std::to_string(n - 1));
    if (max_card < 0 || max_card == 1)
        throw InputError("max-card must be 0 (full powerset) or >= 2");
    if (fcm_fuzzifier <= 1.0) throw InputError("fcm fuzzifier must be > 1");
    if (fcm_threshold <= 0.0 || fcm_threshold >= 1.0)
        throw InputError("fcm lambda must be in (0, 1)");
    ecm.validate();
}

FocalSetCatalog SweepConfig::make_catalog(int c) const {
    if (max_card == 0) {
        if (c > full_powerset_limit)
            throw InputError(
                "full powerset catalog refused for c = " + std::to_string(c) +
                " (> " + std::to_string(full_powerset_limit) +
                "); pass --max-card 2 for a pair-restricted catalog");
        return FocalSetCatalog::full_powerset(c);
    }
    return FocalSetCatalog(c, std::min(max_card, c));
}

namespace {

// Per-column rescaling to unit max absolute value, so the default delta
// dominates typical inter-point distances.
Eigen::MatrixXd rescale_columns(const Eigen::MatrixXd& coords) {
    Eigen::MatrixXd out = coords;
    for (int j = 0; j < out.cols(); ++j) {
        const double top = out.col(j).cwiseAbs().maxCoeff();
        if (top > 0.0) out.col(j) /= top;
    }
    return out;
}

std::vector<int> argmax_labels(const Eigen::MatrixXd& rows) {
    std::vector<int> labels(rows.rows());
    for (int i = 0; i < rows.rows(); ++i) {
        int arg = 0;
        rows.row(i).maxCoeff(&arg);
        labels[i] = arg;
    }
    return labels;
}

}  // namespace

std::vector<int> baseline_cm(const Eigen::MatrixXd& points, int c,
                             std::uint64_t seed, int restarts, int max_iter) {
    const int n = static_cast<int>(points.rows());
    if (n < c) throw InputError("cm: fewer points than clusters");

    std::vector<int> best_labels;
    double best_sse = std::numeric_limits<double>::infinity();
    std::string last_error;

    for (int r = 0; r < restarts; ++r) {
        Eigen::MatrixXd centers = farthest_point_init(points, c, seed, r);
        std::vector<int> labels(n, -1);
        bool failed = false;
        for (int iter = 0; iter < max_iter; ++iter) {
            bool changed = false;
            for (int i = 0; i < n; ++i) {
                int arg = 0;
                (centers.rowwise() - points.row(i))
                    .rowwise()
                    .squaredNorm()
                    .minCoeff(&arg);
                if (arg != labels[i]) {
                    labels[i] = arg;
                    changed = true;
                }
            }
            if (!changed) break;
            Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(c, points.cols());
            Eigen::VectorXd counts = Eigen::VectorXd::Zero(c);
            for (int i = 0; i < n; ++i) {
                sums.row(labels[i]) += points.row(i);
                counts(labels[i]) += 1.0;
            }
            if ((counts.array() == 0.0).any()) {
                failed = true;
                last_error = "cm: empty cluster in restart " + std::to_string(r);
                break;
            }
            centers = counts.cwiseInverse().asDiagonal() * sums;
        }
        if (failed) continue;
        double sse = 0.0;
        for (int i = 0; i < n; ++i)
            sse += (points.row(i) - centers.row(labels[i])).squaredNorm();
        if (sse < best_sse) {
            best_sse = sse;
            best_labels = std::move(labels);
        }
    }
    if (best_labels.empty())
        throw NumericError("cm: all restarts collapsed to an empty cluster; " +
                           last_error);
    return best_labels;
}

Eigen::MatrixXd baseline_fcm(const Eigen::MatrixXd& points, int c,
                             double fuzzifier, std::uint64_t seed, int restarts,
                             int max_iter, double tol) {
    const int n = static_cast<int>(points.rows());
    if (n < c) throw InputError("fcm: fewer points than clusters");
    if (fuzzifier <= 1.0) throw InputError("fcm: fuzzifier must be > 1");
    const double expo = -1.0 / (fuzzifier - 1.0);

    Eigen::MatrixXd best_u;
    double best_j = std::numeric_limits<double>::infinity();

    std::string last_error;
    for (int r = 0; r < restarts; ++r) {
      try {
        Eigen::MatrixXd centers = farthest_point_init(points, c, seed, r);
        Eigen::MatrixXd u(n, c);
        double prev_j = std::numeric_limits<double>::infinity();
        double j_final = std::numeric_limits<double>::infinity();
        for (int iter = 0; iter < max_iter; ++iter) {
            // membership update
            for (int i = 0; i < n; ++i) {
                Eigen::VectorXd d2 =
                    (centers.rowwise() - points.row(i)).rowwise().squaredNorm();
                if ((d2.array() == 0.0).any()) {
                    const int zeros = static_cast<int>((d2.array() == 0.0).count());
                    for (int k = 0; k < c; ++k)
                        u(i, k) = d2(k) == 0.0 ? 1.0 / zeros : 0.0;
                } else {
                    Eigen::VectorXd t = d2.array().pow(expo);
                    u.row(i) = t / t.sum();
                }
            }
            const Eigen::MatrixXd um = u.array().pow(fuzzifier);
            // objective + convergence
            double j_now = 0.0;
            for (int i = 0; i < n; ++i)
                j_now += (um.row(i).array() *
                          (centers.rowwise() - points.row(i))
                              .rowwise()
                              .squaredNorm()
                              .transpose()
                              .array())
                             .sum();
            j_final = j_now;
            if (std::isfinite(prev_j) &&
                std::abs(prev_j - j_now) / std::max(std::abs(j_now), 1e-300) < tol)
                break;
            prev_j = j_now;
            // prototype update
            for (int k = 0; k < c; ++k) {
                const double total = um.col(k).sum();
                if (total <= 0.0)
                    throw NumericError("fcm: cluster " + std::to_string(k + 1) +
                                       " lost all membership");
                centers.row(k) = (um.col(k).transpose() * points) / total;
            }
        }
        if (j_final < best_j) {
            best_j = j_final;
            best_u = u;
        }
      } catch (const NumericError& e) {
        last_error = e.what();
      }
    }
    if (best_u.size() == 0)
        throw NumericError("fcm: all restarts failed; " + last_error);
    return best_u;
}

DetectionReport detect(const Graph& g, const SweepConfig& cfg) {
    cfg.validate(g.size());

    DetectionReport report;
    for (int c = cfg.c_min; c <= cfg.c_max; ++c) {
        try {
            PerCResult res;
            res.c = c;
            res.embedding = embed(g, c);
            const Eigen::MatrixXd points = rescale_columns(res.embedding.coords);
            const FocalSetCatalog cat = cfg.make_catalog(c);

            EcmResult ecm = ecm_cluster(points, cat, cfg.ecm);
            res.partition = std::move(ecm.partition);
            res.ecm_objective = ecm.objective;
            res.ecm_iterations = ecm.iterations;
            res.ecm_best_restart = ecm.best_restart;
            res.objective_trace = std::move(ecm.objective_trace);

            res.contour = contour_matrix(res.partition, cfg.pl_normalized);
            res.pignistic = pignistic_matrix(res.partition);
            res.pignistic_labels = argmax_labels(res.pignistic);
            res.hard_credal =
                hard_credal_assignment(res.partition, cfg.outlier_threshold);
            for (bool o : res.hard_credal.outlier)
                if (o) ++res.outlier_count;

            res.q_e = evidential_modularity(g, res.partition, cfg.pl_normalized);
            res.q_h_pignistic = hard_modularity(g, res.pignistic_labels);
            res.q_fuzzy_pignistic = fuzzy_modularity(g, res.pignistic);

            if (cfg.run_baselines) {
                CmBaseline cm;
                cm.labels = baseline_cm(points, c, cfg.ecm.seed, cfg.ecm.restarts,
                                        cfg.ecm.max_iter);
                cm.q_h = hard_modularity(g, cm.labels);
                res.cm = std::move(cm);

                FcmBaseline fcm;
                fcm.memberships =
                    baseline_fcm(points, c, cfg.fcm_fuzzifier, cfg.ecm.seed,
                                 cfg.ecm.restarts, cfg.ecm.max_iter, cfg.ecm.tol);
                fcm.labels = argmax_labels(fcm.memberships);
                fcm.q_h = hard_modularity(g, fcm.labels);
                fcm.q_fuzzy = fuzzy_modularity(g, fcm.memberships);
                fcm.multi.resize(g.size());
                for (int i = 0; i < g.size(); ++i) {
                    FocalSet s = 0;
                    for (int k = 0; k < c; ++k)
                        if (fcm.memberships(i, k) > cfg.fcm_threshold)
                            s |= FocalSet{1} << k;
                    fcm.multi[i] = s;
                }
                res.fcm = std::move(fcm);
            }
            report.per_c.push_back(std::move(res));
        } catch (const NumericError& e) {
            throw NumericError("c = " + std::to_string(c) + ": " + e.what());
        } catch (const InputError& e) {
            throw InputError("c = " + std::to_string(c) + ": " + e.what());
        }
    }

    report.best_c = report.per_c.front().c;
    double best_q = report.per_c.front().q_e;
    for (const auto& res : report.per_c) {
        if (res.q_e > best_q) {
            best_q = res.q_e;
            report.best_c = res.c;
        }
    }
    return report;
}

}  // namespace evcd
