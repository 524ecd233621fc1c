#include "evcd/modularity.hpp"

#include <algorithm>

#include "evcd/errors.hpp"

namespace evcd {

namespace {

double bilinear_modularity(const Graph& g, const Eigen::MatrixXd& u) {
    if (u.rows() != g.size())
        throw InputError("membership matrix rows do not match graph size");
    const Eigen::MatrixXd b = g.modularity_matrix();
    return (u.transpose() * b * u).trace() / g.total_weight();
}

}  // namespace

double hard_modularity(const Graph& g, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != g.size())
        throw InputError("label vector does not match graph size");
    const int c = *std::max_element(labels.begin(), labels.end()) + 1;
    for (int l : labels)
        if (l < 0) throw InputError("negative community label");
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(g.size(), c);
    for (int i = 0; i < g.size(); ++i) u(i, labels[i]) = 1.0;
    return bilinear_modularity(g, u);
}

double fuzzy_modularity(const Graph& g, const Eigen::MatrixXd& memberships) {
    for (int i = 0; i < memberships.rows(); ++i)
        if (std::abs(memberships.row(i).sum() - 1.0) > 1e-9)
            throw InputError("membership row " + std::to_string(i) +
                             " does not sum to 1");
    return bilinear_modularity(g, memberships);
}

double evidential_modularity(const Graph& g, const CredalPartition& p,
                             bool normalized) {
    return bilinear_modularity(g, contour_matrix(p, normalized));
}

}  // namespace evcd
