#include "evcd/graph.hpp"

#include <cctype>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "evcd/errors.hpp"

namespace evcd {

Graph::Graph(std::vector<std::string> labels, Eigen::MatrixXd weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
    const int n = static_cast<int>(labels_.size());
    if (n == 0) throw InputError("empty graph");
    if (weights_.rows() != n || weights_.cols() != n)
        throw InputError("weight matrix does not match label count");

    std::unordered_map<std::string, int> seen;
    for (int i = 0; i < n; ++i) {
        auto [it, inserted] = seen.emplace(labels_[i], i);
        if (!inserted)
            throw InputError("duplicate node label '" + labels_[i] + "'");
    }

    for (int i = 0; i < n; ++i) {
        if (weights_(i, i) != 0.0) has_self_loops_ = true;
        for (int j = 0; j < n; ++j) {
            const double w = weights_(i, j);
            if (w < 0.0)
                throw InputError("negative weight between '" + labels_[i] +
                                 "' and '" + labels_[j] + "'");
            if (w != weights_(j, i))
                throw InputError("weight matrix not symmetric at (" +
                                 labels_[i] + ", " + labels_[j] + ")");
        }
    }

    degrees_ = weights_.rowwise().sum();
    for (int i = 0; i < n; ++i) {
        if (degrees_(i) <= 0.0)
            throw InputError("isolated node '" + labels_[i] + "' (degree 0)");
    }
    total_weight_ = degrees_.sum();
}

int Graph::component_count() const {
    const int n = size();
    std::vector<int> comp(n, -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (weights_(u, v) > 0.0 && comp[v] < 0) {
                    comp[v] = count;
                    stack.push_back(v);
                }
            }
        }
        ++count;
    }
    return count;
}

Eigen::MatrixXd Graph::modularity_matrix() const {
    return weights_ - degrees_ * degrees_.transpose() / total_weight_;
}

int Graph::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

namespace {

struct EdgeAccum {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    // (i, j) with i <= j -> summed weight
    std::map<std::pair<int, int>, double> edges;

    int node(const std::string& label) {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(label);
        index.emplace(label, id);
        return id;
    }

    void edge(int u, int v, double w) {
        if (u > v) std::swap(u, v);
        edges[{u, v}] += w;
    }

    Graph build() const {
        const int n = static_cast<int>(labels.size());
        if (n == 0) throw InputError("empty graph");
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
        for (const auto& [ij, wt] : edges) {
            w(ij.first, ij.second) += wt;
            if (ij.first != ij.second) w(ij.second, ij.first) += wt;
        }
        return Graph(labels, std::move(w));
    }
};

}  // namespace

Graph parse_edge_list(std::istream& in) {
    EdgeAccum acc;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.erase(pos);
        std::istringstream ls(line);
        std::string src, dst;
        if (!(ls >> src)) continue;  // blank
        double w = 1.0;
        if (!(ls >> dst))
            throw InputError("edge list line " + std::to_string(lineno) +
                             ": expected 'src dst [weight]'");
        std::string rest;
        if (ls >> rest) {
            try {
                size_t used = 0;
                w = std::stod(rest, &used);
                if (used != rest.size()) throw std::invalid_argument(rest);
            } catch (const std::exception&) {
                throw InputError("edge list line " + std::to_string(lineno) +
                                 ": bad weight '" + rest + "'");
            }
            std::string extra;
            if (ls >> extra)
                throw InputError("edge list line " + std::to_string(lineno) +
                                 ": trailing token '" + extra + "'");
        }
        if (w < 0.0)
            throw InputError("edge list line " + std::to_string(lineno) +
                             ": negative weight");
        const int u = acc.node(src);
        const int v = acc.node(dst);
        acc.edge(u, v, w);
    }
    return acc.build();
}

void write_edge_list(const Graph& g, std::ostream& out) {
    const auto& w = g.weights();
    out.precision(std::numeric_limits<double>::max_digits10);
    for (int i = 0; i < g.size(); ++i)
        for (int j = i; j < g.size(); ++j)
            if (w(i, j) > 0.0)
                out << g.labels()[i] << ' ' << g.labels()[j] << ' ' << w(i, j)
                    << '\n';
}

namespace {

// Minimal GML tokenizer: brackets, quoted strings, bare words/numbers.
class GmlLexer {
public:
    explicit GmlLexer(std::istream& in) : in_(in) {}

    // Returns false at end of input.
    bool next(std::string& tok) {
        char c;
        while (in_.get(c)) {
            if (c == '#') {  // comment to end of line
                std::string skip;
                std::getline(in_, skip);
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c == '[' || c == ']') {
                tok.assign(1, c);
                return true;
            }
            if (c == '"') {
                tok.clear();
                while (in_.get(c) && c != '"') tok.push_back(c);
                if (c != '"') throw InputError("gml: unterminated string");
                quoted_ = true;
                return true;
            }
            tok.assign(1, c);
            while (in_.get(c)) {
                if (std::isspace(static_cast<unsigned char>(c)) || c == '[' ||
                    c == ']') {
                    in_.unget();
                    break;
                }
                tok.push_back(c);
            }
            return true;
        }
        return false;
    }

    bool last_was_quoted() const { return quoted_; }
    void clear_quoted() { quoted_ = false; }

private:
    std::istream& in_;
    bool quoted_ = false;
};

double gml_number(const std::string& tok, const std::string& key) {
    try {
        size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw InputError("gml: expected a number after '" + key + "', got '" +
                         tok + "'");
    }
}

}  // namespace

Graph parse_gml(std::istream& in) {
    GmlLexer lex(in);
    std::string tok;

    // scan to the top-level "graph ["
    bool found = false;
    while (lex.next(tok)) {
        if (tok == "graph") {
            if (!lex.next(tok) || tok != "[")
                throw InputError("gml: expected '[' after 'graph'");
            found = true;
            break;
        }
    }
    if (!found) throw InputError("gml: no 'graph [' block");

    struct NodeRec {
        long id = 0;
        bool has_id = false;
        std::string label;
        bool has_label = false;
    };
    struct EdgeRec {
        long source = 0, target = 0;
        bool has_source = false, has_target = false;
        double value = 1.0;
    };
    std::vector<NodeRec> nodes;
    std::vector<EdgeRec> edges;

    auto skip_block = [&]() {  // consume a balanced [ ... ]
        int depth = 1;
        std::string t;
        while (depth > 0) {
            if (!lex.next(t)) throw InputError("gml: unbalanced brackets");
            if (t == "[") ++depth;
            if (t == "]") --depth;
        }
    };

    int depth = 1;
    while (depth > 0) {
        if (!lex.next(tok)) throw InputError("gml: unbalanced brackets");
        if (tok == "]") {
            --depth;
            continue;
        }
        if (tok == "[") throw InputError("gml: unexpected '['");
        if (tok == "node" || tok == "edge") {
            const bool is_node = (tok == "node");
            if (!lex.next(tok) || tok != "[")
                throw InputError("gml: expected '[' after '" +
                                 std::string(is_node ? "node" : "edge") + "'");
            NodeRec nr;
            EdgeRec er;
            std::string key;
            while (true) {
                if (!lex.next(key)) throw InputError("gml: unbalanced brackets");
                if (key == "]") break;
                if (key == "[") throw InputError("gml: unexpected '['");
                std::string val;
                lex.clear_quoted();
                if (!lex.next(val))
                    throw InputError("gml: missing value for key '" + key + "'");
                if (val == "[") {  // nested block under an unknown key
                    skip_block();
                    continue;
                }
                if (is_node) {
                    if (key == "id") {
                        nr.id = static_cast<long>(gml_number(val, key));
                        nr.has_id = true;
                    } else if (key == "label") {
                        nr.label = val;
                        nr.has_label = true;
                    }
                } else {
                    if (key == "source") {
                        er.source = static_cast<long>(gml_number(val, key));
                        er.has_source = true;
                    } else if (key == "target") {
                        er.target = static_cast<long>(gml_number(val, key));
                        er.has_target = true;
                    } else if (key == "value" || key == "weight") {
                        er.value = gml_number(val, key);
                    }
                }
            }
            if (is_node) {
                if (!nr.has_id) throw InputError("gml: node without id");
                nodes.push_back(std::move(nr));
            } else {
                if (!er.has_source || !er.has_target)
                    throw InputError("gml: edge without source/target");
                edges.push_back(er);
            }
            continue;
        }
        // unknown top-level key: consume its value (possibly a block)
        std::string val;
        if (!lex.next(val))
            throw InputError("gml: missing value for key '" + tok + "'");
        if (val == "[") skip_block();
    }

    EdgeAccum acc;
    std::unordered_map<long, int> by_id;
    for (const auto& nr : nodes) {
        if (by_id.count(nr.id))
            throw InputError("gml: duplicate node id " + std::to_string(nr.id));
        std::string label = nr.has_label ? nr.label : std::to_string(nr.id);
        by_id.emplace(nr.id, acc.node(label));
        if (static_cast<int>(acc.labels.size()) != static_cast<int>(by_id.size()))
            throw InputError("gml: duplicate node label '" + label + "'");
    }
    for (const auto& er : edges) {
        auto s = by_id.find(er.source);
        auto t = by_id.find(er.target);
        if (s == by_id.end())
            throw InputError("gml: edge references unknown id " +
                             std::to_string(er.source));
        if (t == by_id.end())
            throw InputError("gml: edge references unknown id " +
                             std::to_string(er.target));
        if (er.value < 0.0) throw InputError("gml: negative edge value");
        acc.edge(s->second, t->second, er.value);
    }
    return acc.build();
}

}  // namespace evcd
