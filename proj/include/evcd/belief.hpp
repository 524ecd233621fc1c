#ifndef EVCD_BELIEF_HPP
#define EVCD_BELIEF_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace evcd {

using FocalSet = std::uint32_t;  // bitset over {0, ..., c-1}

/// Ordered enumeration of the focal elements over a frame of c communities.
/// Order: empty set first, then by cardinality ascending, lexicographic on
/// sorted member indices within a cardinality class; the full frame is always
/// included. max_card == c gives the full powerset, max_card == 2 the
/// pair-restricted variant (singletons + pairs + full frame).
class FocalSetCatalog {
public:
    FocalSetCatalog(int c, int max_card);

    static FocalSetCatalog full_powerset(int c) { return {c, c}; }
    static FocalSetCatalog pair_restricted(int c) { return {c, 2}; }

    int frame_size() const { return c_; }
    int max_card() const { return max_card_; }
    int size() const { return static_cast<int>(sets_.size()); }
    const std::vector<FocalSet>& sets() const { return sets_; }
    FocalSet set(int j) const { return sets_[j]; }
    int cardinality(int j) const;
    bool is_full_powerset() const { return max_card_ == c_; }

    // Index of a set in the catalog, -1 if absent.
    int index_of(FocalSet s) const;

    // "{}", "{1,3}", ... (1-based community labels).
    std::string set_name(int j) const;

private:
    int c_;
    int max_card_;
    std::vector<FocalSet> sets_;
};

std::string focal_set_name(FocalSet s);

/// Per-node mass functions aligned with a catalog; row i is the bba of node i.
struct CredalPartition {
    FocalSetCatalog catalog;
    Eigen::MatrixXd masses;  // n x |catalog|

    int nodes() const { return static_cast<int>(masses.rows()); }

    // Throws InputError if a row is negative or does not sum to 1 (1e-9).
    void validate() const;
};

// Bel(A) = sum of masses of nonempty subsets of A.
double bel(const FocalSetCatalog& cat, const Eigen::VectorXd& m, FocalSet a);
// Pl(A) = sum of masses of sets intersecting A.
double pl(const FocalSetCatalog& cat, const Eigen::VectorXd& m, FocalSet a);

// Plausibilities of the singletons, unnormalized.
Eigen::VectorXd contour(const FocalSetCatalog& cat, const Eigen::VectorXd& m);
Eigen::MatrixXd contour_matrix(const CredalPartition& p, bool normalized = false);

// BetP; throws NumericError when m(empty) == 1.
Eigen::VectorXd pignistic(const FocalSetCatalog& cat, const Eigen::VectorXd& m);
Eigen::MatrixXd pignistic_matrix(const CredalPartition& p);

struct HardCredalAssignment {
    std::vector<int> set_index;   // catalog index of the max-mass nonempty set
    std::vector<bool> imprecise;  // winner is non-singleton
    std::vector<bool> outlier;    // m(empty) above threshold
};

// Max-mass focal set per node, empty set excluded; ties broken toward smaller
// cardinality, then catalog order.
HardCredalAssignment hard_credal_assignment(const CredalPartition& p,
                                            double outlier_threshold = 0.5);

}  // namespace evcd

#endif
