#ifndef EVCD_GRAPH_HPP
#define EVCD_GRAPH_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

namespace evcd {

/// Undirected weighted graph with a dense symmetric weight matrix.
/// Immutable after construction; validation happens at load time.
class Graph {
public:
    // Takes a symmetric non-negative matrix; throws InputError on any
    // violated invariant (asymmetry, negative weight, isolated node,
    // duplicate label, empty graph).
    Graph(std::vector<std::string> labels, Eigen::MatrixXd weights);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Eigen::MatrixXd& weights() const { return weights_; }

    // k_i = sum_j w_ij
    const Eigen::VectorXd& degrees() const { return degrees_; }
    // ||W|| = sum_ij w_ij (an undirected unit edge contributes 2)
    double total_weight() const { return total_weight_; }

    bool has_self_loops() const { return has_self_loops_; }
    int component_count() const;

    // B_ij = w_ij - k_i k_j / ||W||; rows sum to zero.
    Eigen::MatrixXd modularity_matrix() const;

    // Index of a label, or -1.
    int index_of(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    Eigen::MatrixXd weights_;
    Eigen::VectorXd degrees_;
    double total_weight_ = 0.0;
    bool has_self_loops_ = false;
};

// "src dst [weight]" per line, '#' comments, labels kept in first-appearance
// order, duplicate edges summed.
Graph parse_edge_list(std::istream& in);

// GML subset: graph [ node [ id N label "..." ] ... edge [ source A target B
// value X ] ... ]. Unknown keys inside blocks are ignored.
Graph parse_gml(std::istream& in);

// One "u v w" line per undirected edge (i <= j), for round-tripping.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace evcd

#endif
