#include "evcd/report_io.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <ostream>

#include <nlohmann/json.hpp>

namespace evcd {

using json = nlohmann::ordered_json;

namespace {

json vector_to_json(const Eigen::VectorXd& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

json matrix_rows_to_json(const Eigen::MatrixXd& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i)
        out.push_back(vector_to_json(m.row(i)));
    return out;
}

json per_c_to_json(const Graph& g, const PerCResult& res) {
    json out;
    out["c"] = res.c;
    out["Q_e"] = res.q_e;
    out["Q_h_pignistic"] = res.q_h_pignistic;
    out["Q_fuzzy_pignistic"] = res.q_fuzzy_pignistic;
    out["eigenvalues"] = vector_to_json(res.embedding.eigenvalues);

    const FocalSetCatalog& cat = res.partition.catalog;
    json focal = json::array();
    for (int j = 0; j < cat.size(); ++j) focal.push_back(cat.set_name(j));
    out["focal_sets"] = focal;

    json masses;
    for (int j = 0; j < cat.size(); ++j)
        masses[cat.set_name(j)] = vector_to_json(res.partition.masses.col(j));
    out["masses"] = masses;

    out["contour"] = matrix_rows_to_json(res.contour);
    out["pignistic"] = matrix_rows_to_json(res.pignistic);

    json pig_labels = json::array();
    for (int l : res.pignistic_labels) pig_labels.push_back(l + 1);
    out["pignistic_argmax"] = pig_labels;

    json hard = json::array();
    json imprecise = json::array();
    json outliers = json::array();
    for (int i = 0; i < g.size(); ++i) {
        hard.push_back(cat.set_name(res.hard_credal.set_index[i]));
        if (res.hard_credal.imprecise[i]) imprecise.push_back(g.labels()[i]);
        if (res.hard_credal.outlier[i]) outliers.push_back(g.labels()[i]);
    }
    out["hard_credal"] = hard;
    out["imprecise_nodes"] = imprecise;
    out["outlier_nodes"] = outliers;
    out["outlier_count"] = res.outlier_count;

    json ecm;
    ecm["objective"] = res.ecm_objective;
    ecm["iterations"] = res.ecm_iterations;
    ecm["best_restart"] = res.ecm_best_restart;
    ecm["objective_trace"] = res.objective_trace;
    out["ecm"] = ecm;

    if (res.cm) {
        json cm;
        json labels = json::array();
        for (int l : res.cm->labels) labels.push_back(l + 1);
        cm["labels"] = labels;
        cm["Q_h"] = res.cm->q_h;
        out["cm"] = cm;
    }
    if (res.fcm) {
        json fcm;
        fcm["memberships"] = matrix_rows_to_json(res.fcm->memberships);
        json labels = json::array();
        for (int l : res.fcm->labels) labels.push_back(l + 1);
        fcm["labels"] = labels;
        json multi = json::array();
        for (FocalSet s : res.fcm->multi) multi.push_back(focal_set_name(s));
        fcm["multi_membership"] = multi;
        fcm["Q_h"] = res.fcm->q_h;
        fcm["Q_fuzzy"] = res.fcm->q_fuzzy;
        out["fcm"] = fcm;
    }
    return out;
}

}  // namespace

std::string report_to_json(const Graph& g, const DetectionReport& report,
                           const RunConfig& cfg) {
    json root;

    json config;
    config["input"] = cfg.input;
    config["format"] = cfg.format;
    config["cmin"] = cfg.sweep.c_min;
    config["cmax"] = cfg.sweep.c_max;
    config["alpha"] = cfg.sweep.ecm.alpha;
    config["beta"] = cfg.sweep.ecm.beta;
    config["delta"] = cfg.sweep.ecm.delta;
    config["seed"] = cfg.sweep.ecm.seed;
    config["restarts"] = cfg.sweep.ecm.restarts;
    config["max_iter"] = cfg.sweep.ecm.max_iter;
    config["tol"] = cfg.sweep.ecm.tol;
    config["max_card"] =
        cfg.sweep.max_card == 0 ? json("full") : json(cfg.sweep.max_card);
    config["pl_normalized"] = cfg.sweep.pl_normalized;
    config["baselines"] = cfg.sweep.run_baselines;
    config["fcm_fuzzifier"] = cfg.sweep.fcm_fuzzifier;
    config["fcm_lambda"] = cfg.sweep.fcm_threshold;
    config["outlier_threshold"] = cfg.sweep.outlier_threshold;
    root["config"] = config;

    json summary;
    summary["nodes"] = g.size();
    summary["total_weight"] = g.total_weight();
    summary["components"] = g.component_count();
    summary["self_loops"] = g.has_self_loops();
    root["graph_summary"] = summary;

    json per_c = json::array();
    for (const auto& res : report.per_c) per_c.push_back(per_c_to_json(g, res));
    root["per_c"] = per_c;
    root["best_c"] = report.best_c;

    return root.dump(2) + "\n";
}

void write_curve_csv(const DetectionReport& report, std::ostream& out) {
    out << "c,Q_e,Q_h,Q_fuzzy\n";
    out.precision(17);
    for (const auto& res : report.per_c)
        out << res.c << ',' << res.q_e << ',' << res.q_h_pignistic << ','
            << res.q_fuzzy_pignistic << '\n';
}

void write_embedding_csv(const Graph& g, const PerCResult& res,
                         std::ostream& out) {
    out << "label";
    for (int j = 0; j < res.embedding.coords.cols(); ++j)
        out << ",coord_" << (j + 1);
    out << '\n';
    out.precision(17);
    for (int i = 0; i < g.size(); ++i) {
        out << g.labels()[i];
        for (int j = 0; j < res.embedding.coords.cols(); ++j)
            out << ',' << res.embedding.coords(i, j);
        out << '\n';
    }
}

void write_dot(const Graph& g, const PerCResult& res, std::ostream& out) {
    static constexpr std::array<const char*, 14> kPalette = {
        "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3", "#a6d854",
        "#ffd92f", "#e5c494", "#b3b3b3", "#1b9e77", "#d95f02",
        "#7570b3", "#e7298a", "#66a61e", "#e6ab02"};

    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.labels()[a] < g.labels()[b];
    });

    const FocalSetCatalog& cat = res.partition.catalog;
    out << "graph communities {\n  node [style=filled];\n";
    for (int i : order) {
        const int j = res.hard_credal.set_index[i];
        out << "  \"" << g.labels()[i] << "\" [";
        if (res.hard_credal.imprecise[i]) {
            out << "style=\"filled,dashed\" fillcolor=\"lightgray\"";
        } else {
            FocalSet s = cat.set(j);
            int k = 0;
            while (!(s & 1u)) {
                s >>= 1;
                ++k;
            }
            out << "fillcolor=\"" << kPalette[k % kPalette.size()] << "\"";
        }
        if (res.hard_credal.outlier[i]) out << " shape=diamond";
        out << " tooltip=\"" << cat.set_name(j) << "\"];\n";
    }
    for (int a : order)
        for (int b : order) {
            if (g.labels()[a] > g.labels()[b]) continue;
            if (a != b && g.weights()(a, b) <= 0.0) continue;
            if (a == b && g.weights()(a, a) == 0.0) continue;
            out << "  \"" << g.labels()[a] << "\" -- \"" << g.labels()[b]
                << "\"";
            if (g.weights()(a, b) != 1.0)
                out << " [weight=" << g.weights()(a, b) << "]";
            out << ";\n";
        }
    out << "}\n";
}

}  // namespace evcd
