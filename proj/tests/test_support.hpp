#ifndef EVCD_TEST_SUPPORT_HPP
#define EVCD_TEST_SUPPORT_HPP

// Shared test helpers: fixture loading, random generators, and independent
// brute-force oracles. Everything here recomputes quantities from first
// principles and must stay decoupled from the library's own evaluation paths.

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evcd/belief.hpp"
#include "evcd/graph.hpp"

#ifndef EVCD_DATA_DIR
#define EVCD_DATA_DIR "data"
#endif

namespace evcd_test {

inline std::string fixture_path(const std::string& name) {
    return std::string(EVCD_DATA_DIR) + "/" + name;
}

inline evcd::Graph load_fixture_gml(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    return evcd::parse_gml(in);
}

inline evcd::Graph graph_from_string(const std::string& text) {
    std::istringstream in(text);
    return evcd::parse_edge_list(in);
}

// Random connected-ish undirected graph: a spanning path plus extra edges.
inline evcd::Graph random_graph(int n, double extra_edge_prob,
                                std::mt19937_64& rng) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    std::uniform_real_distribution<double> weight(0.5, 2.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i + 1 < n; ++i) {
        const double v = weight(rng);
        w(i, i + 1) = w(i + 1, i) = v;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (coin(rng) < extra_edge_prob) {
                const double v = weight(rng);
                w(i, j) = w(j, i) = v;
            }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "n" + std::to_string(i);
    return evcd::Graph(labels, std::move(w));
}

// Random bba over a catalog (Dirichlet-ish via exponentials).
inline Eigen::VectorXd random_bba(int f, std::mt19937_64& rng) {
    std::exponential_distribution<double> exp1(1.0);
    Eigen::VectorXd m(f);
    for (int j = 0; j < f; ++j) m(j) = exp1(rng);
    return m / m.sum();
}

inline Eigen::MatrixXd random_mass_matrix(int n, int f, std::mt19937_64& rng) {
    Eigen::MatrixXd m(n, f);
    for (int i = 0; i < n; ++i) m.row(i) = random_bba(f, rng);
    return m;
}

// ---- brute-force belief oracles (full powerset summation) ----

inline double bel_oracle(const evcd::FocalSetCatalog& cat,
                         const Eigen::VectorXd& m, evcd::FocalSet a) {
    double total = 0.0;
    const evcd::FocalSet omega = (evcd::FocalSet{1} << cat.frame_size()) - 1u;
    for (evcd::FocalSet b = 1; b <= omega; ++b) {
        bool subset = (b & ~a) == 0u;
        if (!subset) continue;
        int j = cat.index_of(b);
        if (j >= 0) total += m(j);
    }
    return total;
}

inline double pl_oracle(const evcd::FocalSetCatalog& cat,
                        const Eigen::VectorXd& m, evcd::FocalSet a) {
    double total = 0.0;
    const evcd::FocalSet omega = (evcd::FocalSet{1} << cat.frame_size()) - 1u;
    for (evcd::FocalSet b = 1; b <= omega; ++b) {
        if ((b & a) == 0u) continue;
        int j = cat.index_of(b);
        if (j >= 0) total += m(j);
    }
    return total;
}

// ---- modularity double-sum oracles (direct evaluation, O(c n^2)) ----

inline double hard_modularity_oracle(const evcd::Graph& g,
                                     const std::vector<int>& labels) {
    const auto& w = g.weights();
    const auto& k = g.degrees();
    const double norm = g.total_weight();
    const int c = *std::max_element(labels.begin(), labels.end()) + 1;
    double q = 0.0;
    for (int comm = 0; comm < c; ++comm)
        for (int i = 0; i < g.size(); ++i)
            for (int j = 0; j < g.size(); ++j)
                if (labels[i] == comm && labels[j] == comm)
                    q += w(i, j) - k(i) * k(j) / norm;
    return q / norm;
}

// Direct double sum over an arbitrary n x c coefficient matrix (works for
// fuzzy memberships and contour matrices alike).
inline double bilinear_modularity_oracle(const evcd::Graph& g,
                                         const Eigen::MatrixXd& coeff) {
    const auto& w = g.weights();
    const auto& k = g.degrees();
    const double norm = g.total_weight();
    double q = 0.0;
    for (int comm = 0; comm < coeff.cols(); ++comm)
        for (int i = 0; i < g.size(); ++i)
            for (int j = 0; j < g.size(); ++j)
                q += (w(i, j) - k(i) * k(j) / norm) * coeff(i, comm) *
                     coeff(j, comm);
    return q / norm;
}

// Contour matrix computed by brute force from the masses.
inline Eigen::MatrixXd contour_oracle(const evcd::FocalSetCatalog& cat,
                                      const Eigen::MatrixXd& masses) {
    Eigen::MatrixXd pl(masses.rows(), cat.frame_size());
    for (int i = 0; i < masses.rows(); ++i)
        for (int k = 0; k < cat.frame_size(); ++k)
            pl(i, k) = pl_oracle(cat, masses.row(i), evcd::FocalSet{1} << k);
    return pl;
}

// ---- ECM objective by direct term-by-term summation ----

inline double ecm_objective_oracle(const Eigen::MatrixXd& points,
                                   const evcd::FocalSetCatalog& cat,
                                   const Eigen::MatrixXd& masses,
                                   const Eigen::MatrixXd& prototypes,
                                   double alpha, double beta, double delta) {
    double total = 0.0;
    for (int i = 0; i < points.rows(); ++i) {
        for (int j = 1; j < cat.size(); ++j) {
            const evcd::FocalSet s = cat.set(j);
            const int card = std::popcount(s);
            Eigen::RowVectorXd bary = Eigen::RowVectorXd::Zero(points.cols());
            for (int k = 0; k < cat.frame_size(); ++k)
                if (s & (evcd::FocalSet{1} << k)) bary += prototypes.row(k);
            bary /= card;
            const double d2 = (points.row(i) - bary).squaredNorm();
            total += std::pow(card, alpha) * std::pow(masses(i, j), beta) * d2;
        }
        total += delta * delta * std::pow(masses(i, 0), beta);
    }
    return total;
}

// ---- numeric minimizers (independent of the closed-form updates) ----

// Euclidean projection onto the probability simplex.
inline Eigen::VectorXd project_simplex(Eigen::VectorXd v) {
    const int n = static_cast<int>(v.size());
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cumsum = 0.0, theta = 0.0;
    int rho = 0;
    for (int i = 0; i < n; ++i) {
        cumsum += u[i];
        const double t = (cumsum - 1.0) / (i + 1);
        if (u[i] - t > 0.0) {
            rho = i + 1;
            theta = t;
        }
    }
    for (int i = 0; i < n; ++i) v(i) = std::max(v(i) - theta, 0.0);
    return v;
}

// Minimize sum_j coef_j * m_j^beta over the simplex by projected gradient
// with backtracking. coef(0) is the empty-set coefficient delta^2.
inline Eigen::VectorXd minimize_row_objective(const Eigen::VectorXd& coef,
                                              double beta, int iters = 20000) {
    const int f = static_cast<int>(coef.size());
    Eigen::VectorXd m = Eigen::VectorXd::Constant(f, 1.0 / f);
    auto value = [&](const Eigen::VectorXd& x) {
        double s = 0.0;
        for (int j = 0; j < f; ++j) s += coef(j) * std::pow(x(j), beta);
        return s;
    };
    double step = 1.0 / coef.maxCoeff();
    for (int it = 0; it < iters; ++it) {
        Eigen::VectorXd grad(f);
        for (int j = 0; j < f; ++j)
            grad(j) = coef(j) * beta * std::pow(std::max(m(j), 0.0), beta - 1.0);
        const double before = value(m);
        Eigen::VectorXd trial = project_simplex(m - step * grad);
        int guard = 0;
        while (value(trial) > before && guard++ < 60) {
            step *= 0.5;
            trial = project_simplex(m - step * grad);
        }
        if ((trial - m).lpNorm<Eigen::Infinity>() < 1e-14) break;
        m = trial;
        step *= 1.1;
    }
    return m;
}

}  // namespace evcd_test

#endif
