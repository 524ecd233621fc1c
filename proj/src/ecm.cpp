#include "evcd/ecm.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "evcd/errors.hpp"

namespace evcd {

void EcmParams::validate() const {
    if (beta <= 1.0) throw InputError("ecm: beta must be > 1");
    if (alpha < 0.0) throw InputError("ecm: alpha must be >= 0");
    if (delta <= 0.0) throw InputError("ecm: delta must be > 0");
    if (tol <= 0.0) throw InputError("ecm: tol must be > 0");
    if (max_iter < 1) throw InputError("ecm: max_iter must be >= 1");
    if (restarts < 1) throw InputError("ecm: restarts must be >= 1");
}

Barycenters barycenters(const FocalSetCatalog& cat,
                        const Eigen::MatrixXd& prototypes) {
    const int d = static_cast<int>(prototypes.cols());
    Barycenters out;
    out.prototypes = prototypes;
    out.centers.resize(cat.size() - 1, d);
    for (int j = 1; j < cat.size(); ++j) {
        Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(d);
        FocalSet s = cat.set(j);
        for (int k = 0; s != 0; ++k, s >>= 1)
            if (s & 1u) mean += prototypes.row(k);
        out.centers.row(j - 1) = mean / cat.cardinality(j);
    }
    return out;
}

double ecm_objective(const Eigen::MatrixXd& points, const CredalPartition& p,
                     const Eigen::MatrixXd& prototypes, const EcmParams& params) {
    const int n = static_cast<int>(points.rows());
    const FocalSetCatalog& cat = p.catalog;
    if (p.masses.rows() != n || p.masses.cols() != cat.size() ||
        prototypes.rows() != cat.frame_size() ||
        prototypes.cols() != points.cols())
        throw InputError("ecm_objective: dimension mismatch");

    const Barycenters bary = barycenters(cat, prototypes);
    const double delta2 = params.delta * params.delta;
    double j_total = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j < cat.size(); ++j) {
            const double d2 =
                (points.row(i) - bary.centers.row(j - 1)).squaredNorm();
            j_total += std::pow(cat.cardinality(j), params.alpha) *
                       std::pow(p.masses(i, j), params.beta) * d2;
        }
        j_total += delta2 * std::pow(p.masses(i, 0), params.beta);
    }
    return j_total;
}

CredalPartition update_masses(const Eigen::MatrixXd& points,
                              const FocalSetCatalog& cat,
                              const Barycenters& bary, const EcmParams& params) {
    const int n = static_cast<int>(points.rows());
    const int f = cat.size();
    const double expo = -1.0 / (params.beta - 1.0);
    const double t_empty = std::pow(params.delta * params.delta, expo);

    CredalPartition out{cat, Eigen::MatrixXd::Zero(n, f)};
    Eigen::VectorXd d2(f - 1);
    for (int i = 0; i < n; ++i) {
        int zero_count = 0, min_zero_card = cat.frame_size() + 1;
        for (int j = 1; j < f; ++j) {
            d2(j - 1) = (points.row(i) - bary.centers.row(j - 1)).squaredNorm();
            if (d2(j - 1) == 0.0)
                min_zero_card = std::min(min_zero_card, cat.cardinality(j));
        }
        for (int j = 1; j < f; ++j)
            if (d2(j - 1) == 0.0 && cat.cardinality(j) == min_zero_card)
                ++zero_count;

        if (zero_count > 0) {
            // limit of the closed form: all mass on the coincident set(s),
            // most specific ones preferred
            for (int j = 1; j < f; ++j)
                if (d2(j - 1) == 0.0 && cat.cardinality(j) == min_zero_card)
                    out.masses(i, j) = 1.0 / zero_count;
            continue;
        }

        double total = t_empty;
        for (int j = 1; j < f; ++j) {
            const double t =
                std::pow(std::pow(cat.cardinality(j), params.alpha) * d2(j - 1),
                         expo);
            out.masses(i, j) = t;
            total += t;
        }
        out.masses.row(i) /= total;
        out.masses(i, 0) = t_empty / total;
    }
    return out;
}

Eigen::MatrixXd update_prototypes(const Eigen::MatrixXd& points,
                                  const CredalPartition& p,
                                  const EcmParams& params) {
    const FocalSetCatalog& cat = p.catalog;
    const int n = static_cast<int>(points.rows());
    const int c = cat.frame_size();
    const int d = static_cast<int>(points.cols());

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(c, c);
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(c, d);
    for (int j = 1; j < cat.size(); ++j) {
        const int card = cat.cardinality(j);
        const double wh = std::pow(card, params.alpha - 2.0);
        const double wr = std::pow(card, params.alpha - 1.0);
        const FocalSet s = cat.set(j);
        double mass_sum = 0.0;
        Eigen::RowVectorXd weighted = Eigen::RowVectorXd::Zero(d);
        for (int i = 0; i < n; ++i) {
            const double mb = std::pow(p.masses(i, j), params.beta);
            mass_sum += mb;
            weighted += mb * points.row(i);
        }
        for (int k = 0; k < c; ++k) {
            if (!(s & (FocalSet{1} << k))) continue;
            r.row(k) += wr * weighted;
            for (int l = 0; l < c; ++l)
                if (s & (FocalSet{1} << l)) h(l, k) += wh * mass_sum;
        }
    }

    for (int k = 0; k < c; ++k)
        if (h(k, k) <= 0.0)
            throw NumericError("ecm: degenerate partition, cluster " +
                               std::to_string(k + 1) + " carries no mass");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(h);
    if (!lu.isInvertible())
        throw NumericError("ecm: singular prototype system (degenerate masses)");
    return lu.solve(r);
}

Eigen::MatrixXd farthest_point_init(const Eigen::MatrixXd& points, int c,
                                    std::uint64_t seed, int restart) {
    const int n = static_cast<int>(points.rows());
    if (c > n) throw InputError("ecm: fewer points than clusters");

    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> pick(0, n - 1);

    std::vector<int> chosen{pick(rng)};
    Eigen::VectorXd min_d2 =
        (points.rowwise() - points.row(chosen[0])).rowwise().squaredNorm();
    while (static_cast<int>(chosen.size()) < c) {
        int arg = 0;
        min_d2.maxCoeff(&arg);  // smallest index on ties
        chosen.push_back(arg);
        min_d2 = min_d2.cwiseMin(
            (points.rowwise() - points.row(arg)).rowwise().squaredNorm());
    }

    Eigen::MatrixXd protos(c, points.cols());
    for (int k = 0; k < c; ++k) protos.row(k) = points.row(chosen[k]);
    return protos;
}

EcmResult ecm_cluster(const Eigen::MatrixXd& points, const FocalSetCatalog& cat,
                      const EcmParams& params) {
    params.validate();
    const int c = cat.frame_size();
    const int n = static_cast<int>(points.rows());
    if (n < c) throw InputError("ecm: need at least c points");

    EcmResult best{CredalPartition{cat, Eigen::MatrixXd()},
                   Eigen::MatrixXd(),
                   std::numeric_limits<double>::infinity(),
                   0,
                   0,
                   {}};
    std::string last_error;
    bool any_ok = false;

    for (int r = 0; r < params.restarts; ++r) {
        try {
            Eigen::MatrixXd protos = farthest_point_init(points, c, params.seed, r);
            CredalPartition part{cat, Eigen::MatrixXd()};
            std::vector<double> trace;
            double prev_j = std::numeric_limits<double>::infinity();
            int iter = 0;
            for (; iter < params.max_iter; ++iter) {
                const Barycenters bary = barycenters(cat, protos);
                part = update_masses(points, cat, bary, params);
                const double j_now = ecm_objective(points, part, protos, params);
                trace.push_back(j_now);
                if (std::isfinite(prev_j)) {
                    const double rel =
                        std::abs(prev_j - j_now) / std::max(std::abs(j_now), 1e-300);
                    if (rel < params.tol) {
                        ++iter;
                        break;
                    }
                }
                prev_j = j_now;
                protos = update_prototypes(points, part, params);
            }
            const double j_final = trace.back();
            if (j_final < best.objective) {
                best.partition = std::move(part);
                best.prototypes = std::move(protos);
                best.objective = j_final;
                best.iterations = iter;
                best.best_restart = r;
                best.objective_trace = std::move(trace);
            }
            any_ok = true;
        } catch (const NumericError& e) {
            last_error = e.what();
        }
    }
    if (!any_ok)
        throw NumericError("ecm: all " + std::to_string(params.restarts) +
                           " restarts failed; last error: " + last_error);
    return best;
}

}  // namespace evcd
