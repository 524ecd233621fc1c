#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "evcd/errors.hpp"
#include "evcd/graph.hpp"
#include "evcd/pipeline.hpp"
#include "evcd/report_io.hpp"

namespace {

std::string detect_format(const std::string& format, const std::string& path) {
    if (format == "gml" || format == "edge-list") return format;
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".gml")
        return "gml";
    return "edge-list";
}

evcd::Graph load_graph(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in)
        throw evcd::InputError("cannot open input file '" + path + "'");
    return format == "gml" ? evcd::parse_gml(in) : evcd::parse_edge_list(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw evcd::InputError("cannot open output file '" + path + "'");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Overlapping community detection via spectral embedding, evidential "
        "c-means, and evidential modularity"};

    evcd::RunConfig cfg;
    std::string format = "auto";
    int max_card = 0;
    std::string output_path, dot_path, embedding_path, curve_path;
    bool verbose = false;

    app.add_option("--input", cfg.input, "Graph file (edge list or GML)")
        ->required();
    app.add_option("--format", format, "edge-list | gml | auto (by extension)")
        ->check(CLI::IsMember({"edge-list", "gml", "auto"}));
    app.add_option("--cmin", cfg.sweep.c_min, "Smallest community count");
    app.add_option("--cmax", cfg.sweep.c_max, "Largest community count");
    app.add_option("--alpha", cfg.sweep.ecm.alpha, "ECM cardinality exponent");
    app.add_option("--beta", cfg.sweep.ecm.beta, "ECM fuzzifier (> 1)");
    app.add_option("--delta", cfg.sweep.ecm.delta, "ECM outlier distance");
    app.add_option("--seed", cfg.sweep.ecm.seed, "Random seed");
    app.add_option("--restarts", cfg.sweep.ecm.restarts, "ECM restarts");
    app.add_option("--max-iter", cfg.sweep.ecm.max_iter, "ECM iteration cap");
    app.add_option("--tol", cfg.sweep.ecm.tol,
                   "ECM relative convergence threshold");
    app.add_option("--max-card", max_card,
                   "Focal-set cardinality cap (0 = full powerset)");
    app.add_flag("--pl-normalized", cfg.sweep.pl_normalized,
                 "Normalize contour rows by 1 - m(empty)");
    app.add_flag("--baselines", cfg.sweep.run_baselines,
                 "Also run the CM and FCM baselines");
    app.add_option("--fcm-lambda", cfg.sweep.fcm_threshold,
                   "Membership threshold for FCM multi-membership reporting");
    app.add_option("--output", output_path, "Report path (default: stdout)");
    app.add_option("--dot", dot_path, "DOT export of the best-c partition");
    app.add_option("--embedding-out", embedding_path,
                   "CSV export of the best-c spectral embedding");
    app.add_option("--emit-curve", curve_path, "CSV of (c, Q_e, Q_h, Q_fuzzy)");
    app.add_flag("--verbose", verbose, "Progress diagnostics on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        cfg.format = detect_format(format, cfg.input);
        cfg.sweep.max_card = max_card;

        const evcd::Graph g = load_graph(cfg.input, cfg.format);
        if (g.has_self_loops())
            std::cerr << "warning: '" << cfg.input
                      << "' contains self-loops; they count toward degrees and "
                         "total weight\n";
        if (const int comps = g.component_count(); comps > 1)
            std::cerr << "warning: graph has " << comps
                      << " connected components\n";
        if (verbose)
            std::cerr << "loaded " << g.size() << " nodes, ||W|| = "
                      << g.total_weight() << "\n";

        const evcd::DetectionReport report = evcd::detect(g, cfg.sweep);
        if (verbose)
            for (const auto& res : report.per_c)
                std::cerr << "c = " << res.c << "  Q_e = " << res.q_e << "\n";

        const std::string json = evcd::report_to_json(g, report, cfg);
        if (output_path.empty())
            std::cout << json;
        else
            write_file(output_path, json);

        const evcd::PerCResult* best = nullptr;
        for (const auto& res : report.per_c)
            if (res.c == report.best_c) best = &res;

        if (!curve_path.empty()) {
            std::ostringstream csv;
            evcd::write_curve_csv(report, csv);
            write_file(curve_path, csv.str());
        }
        if (!dot_path.empty()) {
            std::ostringstream dot;
            evcd::write_dot(g, *best, dot);
            write_file(dot_path, dot.str());
        }
        if (!embedding_path.empty()) {
            std::ostringstream csv;
            evcd::write_embedding_csv(g, *best, csv);
            write_file(embedding_path, csv.str());
        }
        return 0;
    } catch (const evcd::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const evcd::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
