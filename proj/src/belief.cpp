#include "evcd/belief.hpp"

#include <algorithm>
#include <bit>

#include "evcd/errors.hpp"

namespace evcd {

namespace {

std::vector<int> members(FocalSet s) {
    std::vector<int> out;
    for (int k = 0; s != 0; ++k, s >>= 1)
        if (s & 1u) out.push_back(k);
    return out;
}

// cardinality ascending, then lexicographic on sorted member indices
bool catalog_less(FocalSet a, FocalSet b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    return members(a) < members(b);
}

}  // namespace

FocalSetCatalog::FocalSetCatalog(int c, int max_card) : c_(c), max_card_(max_card) {
    if (c < 1 || c > 30) throw InputError("frame size must be in [1, 30]");
    if (max_card < 1 || max_card > c)
        throw InputError("focal cardinality cap must be in [1, c]");
    const FocalSet omega = (FocalSet{1} << c) - 1u;
    sets_.push_back(0u);  // empty set
    for (FocalSet s = 1; s <= omega; ++s)
        if (std::popcount(s) <= max_card) sets_.push_back(s);
    if (max_card < c) sets_.push_back(omega);
    std::sort(sets_.begin() + 1, sets_.end(), catalog_less);
}

int FocalSetCatalog::cardinality(int j) const { return std::popcount(sets_[j]); }

int FocalSetCatalog::index_of(FocalSet s) const {
    for (int j = 0; j < size(); ++j)
        if (sets_[j] == s) return j;
    return -1;
}

std::string focal_set_name(FocalSet s) {
    std::string out = "{";
    bool first = true;
    for (int k : members(s)) {
        if (!first) out += ',';
        out += std::to_string(k + 1);
        first = false;
    }
    out += '}';
    return out;
}

std::string FocalSetCatalog::set_name(int j) const {
    return focal_set_name(sets_[j]);
}

void CredalPartition::validate() const {
    if (masses.cols() != catalog.size())
        throw InputError("mass matrix width does not match catalog size");
    for (int i = 0; i < nodes(); ++i) {
        if ((masses.row(i).array() < 0.0).any())
            throw InputError("negative mass in row " + std::to_string(i));
        if (std::abs(masses.row(i).sum() - 1.0) > 1e-9)
            throw InputError("mass row " + std::to_string(i) +
                             " does not sum to 1");
    }
}

double bel(const FocalSetCatalog& cat, const Eigen::VectorXd& m, FocalSet a) {
    double total = 0.0;
    for (int j = 0; j < cat.size(); ++j) {
        const FocalSet b = cat.set(j);
        if (b != 0u && (b & ~a) == 0u) total += m(j);
    }
    return total;
}

double pl(const FocalSetCatalog& cat, const Eigen::VectorXd& m, FocalSet a) {
    double total = 0.0;
    for (int j = 0; j < cat.size(); ++j)
        if ((cat.set(j) & a) != 0u) total += m(j);
    return total;
}

Eigen::VectorXd contour(const FocalSetCatalog& cat, const Eigen::VectorXd& m) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(cat.frame_size());
    for (int j = 0; j < cat.size(); ++j) {
        FocalSet s = cat.set(j);
        for (int k = 0; s != 0; ++k, s >>= 1)
            if (s & 1u) out(k) += m(j);
    }
    return out;
}

Eigen::MatrixXd contour_matrix(const CredalPartition& p, bool normalized) {
    const int n = p.nodes();
    Eigen::MatrixXd out(n, p.catalog.frame_size());
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd row = contour(p.catalog, p.masses.row(i));
        if (normalized) {
            const double open = 1.0 - p.masses(i, 0);
            if (open <= 0.0)
                throw NumericError("cannot normalize contour: m(empty) = 1 at row " +
                                   std::to_string(i));
            row /= open;
        }
        out.row(i) = row;
    }
    return out;
}

Eigen::VectorXd pignistic(const FocalSetCatalog& cat, const Eigen::VectorXd& m) {
    const double open = 1.0 - m(0);
    if (open <= 0.0)
        throw NumericError("pignistic transform undefined: m(empty) = 1");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(cat.frame_size());
    for (int j = 1; j < cat.size(); ++j) {
        const double share = m(j) / (cat.cardinality(j) * open);
        FocalSet s = cat.set(j);
        for (int k = 0; s != 0; ++k, s >>= 1)
            if (s & 1u) out(k) += share;
    }
    return out;
}

Eigen::MatrixXd pignistic_matrix(const CredalPartition& p) {
    Eigen::MatrixXd out(p.nodes(), p.catalog.frame_size());
    for (int i = 0; i < p.nodes(); ++i)
        out.row(i) = pignistic(p.catalog, p.masses.row(i));
    return out;
}

HardCredalAssignment hard_credal_assignment(const CredalPartition& p,
                                            double outlier_threshold) {
    const int n = p.nodes();
    HardCredalAssignment out;
    out.set_index.resize(n);
    out.imprecise.resize(n);
    out.outlier.resize(n);
    for (int i = 0; i < n; ++i) {
        int best = 1;
        for (int j = 2; j < p.catalog.size(); ++j) {
            const double mj = p.masses(i, j), mb = p.masses(i, best);
            if (mj > mb) {
                best = j;
            } else if (mj == mb &&
                       p.catalog.cardinality(j) < p.catalog.cardinality(best)) {
                best = j;  // prefer the more specific set on exact ties
            }
        }
        out.set_index[i] = best;
        out.imprecise[i] = p.catalog.cardinality(best) > 1;
        out.outlier[i] = p.masses(i, 0) > outlier_threshold;
    }
    return out;
}

}  // namespace evcd
