// Command-line surface for the matching-polytope library: analysis reports,
// h* computation, IDP certification and split demonstrations.
//
// Exit codes: 0 success/certified, 1 mathematical negative (counterexample,
// non-t-matching input), 2 input error, 3 resource budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "matchpoly/ehrhart.hpp"
#include "matchpoly/errors.hpp"
#include "matchpoly/gorenstein.hpp"
#include "matchpoly/graph.hpp"
#include "matchpoly/idp.hpp"
#include "matchpoly/io.hpp"
#include "matchpoly/polytope.hpp"
#include "matchpoly/structures.hpp"

namespace {

using matchpoly::Graph;
using json = nlohmann::ordered_json;

struct GraphSource {
    std::optional<int> wheel, cycle, path;
    std::vector<int> multipartite;
    bool chortling = false;
    bool chorded = false;
    std::string file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--wheel", wheel, "wheel graph W_n");
        cmd->add_option("--cycle", cycle, "cycle C_n");
        cmd->add_option("--path", path, "path on n vertices");
        cmd->add_option("--complete-multipartite", multipartite,
                        "complete multipartite part sizes r1,r2,...")
            ->delimiter(',');
        cmd->add_flag("--chortling-c5", chortling, "the 5-cycle with chords {1,3} and {2,4}");
        cmd->add_flag("--chorded-c5", chorded, "the 5-cycle with one chord");
        cmd->add_option("--file", file, "edge-list file");
    }

    std::pair<Graph, std::string> build() const {
        int sources = 0;
        for (bool set : {wheel.has_value(), cycle.has_value(), path.has_value(),
                         !multipartite.empty(), chortling, chorded, !file.empty()})
            sources += set ? 1 : 0;
        if (sources != 1)
            throw matchpoly::InputError("choose exactly one graph source");
        if (wheel) return {matchpoly::make_wheel(*wheel), "wheel " + std::to_string(*wheel)};
        if (cycle) return {matchpoly::make_cycle(*cycle), "cycle " + std::to_string(*cycle)};
        if (path) return {matchpoly::make_path(*path), "path " + std::to_string(*path)};
        if (!multipartite.empty()) {
            std::string name = "complete multipartite";
            for (int p : multipartite) name += " " + std::to_string(p);
            return {matchpoly::make_complete_multipartite(multipartite), name};
        }
        if (chortling) return {matchpoly::make_chortling_c5(), "chortling C5"};
        if (chorded) return {matchpoly::make_chorded_c5(), "chorded C5"};
        return {matchpoly::read_edge_list_file(file), "file " + file};
    }
};

double budget_seconds_default() {
    if (const char* env = std::getenv("MATCHPOLY_BUDGET"))
        return std::atof(env);
    return 600.0;
}

std::string hstar_text(const matchpoly::HStarVector& h) {
    std::string out = "[";
    for (std::size_t i = 0; i < h.coefficients.size(); ++i)
        out += (i ? ", " : "") + h.coefficients[i].str();
    return out + "]";
}

json hstar_json(const matchpoly::HStarVector& h) {
    json arr = json::array();
    for (const auto& c : h.coefficients) arr.push_back(c.str());
    return arr;
}

const char* class_name(matchpoly::GorensteinClass c) {
    switch (c) {
    case matchpoly::GorensteinClass::type_a: return "type_a";
    case matchpoly::GorensteinClass::type_b: return "type_b";
    case matchpoly::GorensteinClass::type_c: return "type_c";
    case matchpoly::GorensteinClass::none: return "none";
    }
    return "?";
}

std::vector<int> parse_weights(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ','))
        if (!token.empty()) out.push_back(std::stoi(token));
    return out;
}

std::string weights_text(const std::vector<int>& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
    return out + ")";
}

int run_analyze(const GraphSource& source, bool with_hstar, bool with_idp, double budget,
                bool as_json) {
    auto [g, name] = source.build();
    json report;
    report["graph"] = name;
    report["vertices"] = g.vertex_count();
    report["edges"] = g.edge_count();

    const auto bip = matchpoly::is_bipartite(g);
    report["bipartite"] = bip.bipartite;

    const auto bd = matchpoly::blocks(g);
    report["blocks"] = bd.blocks.size();
    report["cut_vertices"] = bd.cut_vertices;
    report["essential_vertices"] = matchpoly::essential_vertices(g);

    int exit_code = 0;
    json gor;
    if (matchpoly::is_connected(g)) {
        const auto r = matchpoly::check_conditions(g);
        const auto s = matchpoly::classify_structure(g);
        gor["verdict"] = r.verdict;
        gor["class"] = class_name(s.cls);
        if (r.verdict) {
            gor["delta"] = *r.delta;
            gor["index"] = *r.index_k;
            gor["lattice_witness"] =
                *r.index_k >= 2 ? matchpoly::verify_lattice_witness(g, *r.index_k) : true;
        } else if (r.degree_witness) {
            gor["witness"] = "essential vertices " + std::to_string(r.degree_witness->first) +
                             " and " + std::to_string(r.degree_witness->second) +
                             " have different degrees";
        } else if (r.structure_witness) {
            gor["witness"] = "odd structure on " +
                             std::to_string(r.structure_witness->vertices.size()) +
                             " vertices violates the edge-count equality";
        }
    } else {
        gor["verdict"] = nullptr;
        gor["note"] = "disconnected graph: analyze components separately";
    }
    report["gorenstein"] = gor;
    report["blocks_sufficient_for_idp"] = matchpoly::blocks_sufficient(g);

    // Budget exhaustion in the optional sections still emits the partial
    // report, with exit code 3.
    std::optional<matchpoly::HStarVector> h;
    bool budget_hit = false;
    if (with_hstar) {
        try {
            h = matchpoly::hstar(g, matchpoly::Budget(budget));
            report["hstar"] = hstar_json(*h);
            report["hstar_unimodal"] = matchpoly::is_unimodal(*h);
            report["hstar_palindromic"] = matchpoly::is_palindromic(*h);
        } catch (const matchpoly::BudgetError&) {
            report["hstar"] = "budget exceeded";
            budget_hit = true;
        }
    }
    if (with_idp) {
        const int t_max = std::max(2, matchpoly::default_idp_level(g));
        try {
            const auto cert = matchpoly::idp_check(g, t_max, matchpoly::Budget(budget));
            report["idp_certified_t_max"] = cert.certified ? json(cert.t_max) : json(nullptr);
            if (!cert.certified) exit_code = 1;
        } catch (const matchpoly::BudgetError&) {
            report["idp_certified_t_max"] = "budget exceeded";
            budget_hit = true;
        }
    }
    if (budget_hit) exit_code = 3;

    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return exit_code;
    }
    std::cout << "graph: " << name << " (" << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges)\n";
    std::cout << "bipartite: " << (bip.bipartite ? "yes" : "no") << "\n";
    std::cout << "blocks: " << bd.blocks.size() << ", cut vertices:";
    for (int u : bd.cut_vertices) std::cout << " " << u;
    std::cout << "\nessential vertices:";
    for (int u : matchpoly::essential_vertices(g)) std::cout << " " << u;
    std::cout << "\n";
    if (gor.contains("note")) {
        std::cout << "gorenstein: skipped (" << gor["note"].get<std::string>() << ")\n";
    } else if (gor["verdict"].get<bool>()) {
        std::cout << "gorenstein: yes, class " << gor["class"].get<std::string>() << ", delta "
                  << gor["delta"].get<int>() << ", index " << gor["index"].get<int>() << "\n";
    } else {
        std::cout << "gorenstein: no, " << gor["witness"].get<std::string>() << "\n";
    }
    std::cout << "blocks sufficient for IDP: "
              << (report["blocks_sufficient_for_idp"].get<bool>() ? "yes" : "inconclusive")
              << "\n";
    if (with_hstar) {
        if (h)
            std::cout << "h*: " << hstar_text(*h) << " unimodal "
                      << (matchpoly::is_unimodal(*h) ? "yes" : "no") << ", palindromic "
                      << (matchpoly::is_palindromic(*h) ? "yes" : "no") << "\n";
        else
            std::cout << "h*: budget exceeded (partial report)\n";
    }
    if (with_idp) {
        if (report["idp_certified_t_max"].is_string())
            std::cout << "idp: budget exceeded (partial report)\n";
        else if (report["idp_certified_t_max"].is_null())
            std::cout << "idp: counterexample found\n";
        else
            std::cout << "idp: certified for t <= " << report["idp_certified_t_max"].get<int>()
                      << "\n";
    }
    return exit_code;
}

int run_hstar(const GraphSource& source, double budget, bool as_json) {
    auto [g, name] = source.build();
    const auto h = matchpoly::hstar(g, matchpoly::Budget(budget));
    if (as_json) {
        json out;
        out["graph"] = name;
        out["hstar"] = hstar_json(h);
        out["degree"] = h.degree();
        out["unimodal"] = matchpoly::is_unimodal(h);
        out["palindromic"] = matchpoly::is_palindromic(h);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << hstar_text(h) << "\n";
        std::cout << "unimodal: " << (matchpoly::is_unimodal(h) ? "yes" : "no")
                  << ", palindromic: " << (matchpoly::is_palindromic(h) ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_idp(const GraphSource& source, int t_max, double budget, bool as_json) {
    auto [g, name] = source.build();
    const auto cert = matchpoly::idp_check(g, t_max, matchpoly::Budget(budget));
    if (as_json) {
        json out;
        out["graph"] = name;
        out["t_max"] = t_max;
        out["certified"] = cert.certified;
        out["instances_per_level"] = cert.instances;
        if (cert.counterexample) {
            out["counterexample"] = cert.counterexample->weights;
            out["counterexample_level"] = cert.counterexample_level;
        }
        std::cout << out.dump(2) << "\n";
    } else if (cert.certified) {
        std::cout << "IDP certified for t <= " << t_max << "\n";
    } else {
        std::cout << "IDP counterexample at t = " << cert.counterexample_level << ": "
                  << weights_text(cert.counterexample->weights) << "\n";
    }
    return cert.certified ? 0 : 1;
}

int run_split(const GraphSource& source, const std::string& weights_arg,
              const std::string& weights_file, int t, double budget, bool as_json) {
    auto [g, name] = source.build();
    std::vector<int> weights;
    if (!weights_arg.empty()) {
        weights = parse_weights(weights_arg);
    } else if (!weights_file.empty()) {
        std::ifstream in(weights_file);
        if (!in) throw matchpoly::InputError("cannot open " + weights_file);
        int w;
        while (in >> w) weights.push_back(w);
    } else {
        throw matchpoly::InputError("provide --weights or --weights-file");
    }
    if (static_cast<int>(weights.size()) != g.edge_count())
        throw matchpoly::InputError("expected " + std::to_string(g.edge_count()) +
                                    " weights, got " + std::to_string(weights.size()));

    matchpoly::EdgeWeighting x{weights, t};
    if (!matchpoly::is_t_matching(g, x, t)) {
        std::cout << "not a " << t << "-matching\n";
        return 1;
    }
    const auto result = matchpoly::split_any(g, x, t, matchpoly::Budget(budget));
    if (!result) {
        std::cout << "no decomposition exists: the weighting does not split\n";
        return 1;
    }
    if (as_json) {
        json out;
        out["graph"] = name;
        out["t"] = t;
        out["method"] = matchpoly::split_method_name(result->method);
        out["fallback_used"] = result->fallback_used;
        json parts = json::array();
        for (const auto& p : result->parts) parts.push_back(p.weights);
        out["parts"] = parts;
        out["trace"] = result->trace;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "split into " << result->parts.size() << " matchings (method "
                  << matchpoly::split_method_name(result->method)
                  << (result->fallback_used ? ", exhaustive fallback used" : "") << ")\n";
        for (const auto& p : result->parts) {
            std::cout << "  " << weights_text(p.weights) << " =";
            for (int i = 0; i < g.edge_count(); ++i)
                if (p.weights[static_cast<std::size_t>(i)])
                    std::cout << " {" << g.edge(i).u << "," << g.edge(i).v << "}";
            std::cout << "\n";
        }
        for (const auto& line : result->trace) std::cout << "  # " << line << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching polytope analysis"};
    app.require_subcommand(1);
    app.fallthrough(); // --json/--budget are accepted after the subcommand too

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    double budget = budget_seconds_default();
    app.add_option("--budget", budget, "wall-clock budget in seconds");

    GraphSource analyze_src, hstar_src, idp_src, split_src;

    auto* analyze = app.add_subcommand("analyze", "structure and Gorenstein report");
    analyze_src.attach(analyze);
    bool with_hstar = false, with_idp = false;
    analyze->add_flag("--hstar", with_hstar, "also compute the h*-vector");
    analyze->add_flag("--idp", with_idp, "also certify the IDP up to the default level");

    auto* hstar_cmd = app.add_subcommand("hstar", "h*-vector by exact lattice-point counting");
    hstar_src.attach(hstar_cmd);

    auto* idp_cmd = app.add_subcommand("idp", "certify the integer decomposition property");
    idp_src.attach(idp_cmd);
    int t_max = 4;
    idp_cmd->add_option("--tmax", t_max, "largest dilation level to certify");

    auto* split_cmd = app.add_subcommand("split", "decompose a t-matching into t matchings");
    split_src.attach(split_cmd);
    std::string weights_arg, weights_file;
    int split_t = 2;
    split_cmd->add_option("--weights", weights_arg, "comma-separated edge weights");
    split_cmd->add_option("--weights-file", weights_file, "whitespace-separated weights file");
    split_cmd->add_option("--t", split_t, "dilation level of the weighting")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(analyze_src, with_hstar, with_idp, budget, as_json);
        if (app.got_subcommand(hstar_cmd)) return run_hstar(hstar_src, budget, as_json);
        if (app.got_subcommand(idp_cmd)) return run_idp(idp_src, t_max, budget, as_json);
        if (app.got_subcommand(split_cmd))
            return run_split(split_src, weights_arg, weights_file, split_t, budget, as_json);
    } catch (const matchpoly::BudgetError& e) {
        std::cerr << "resource budget exceeded: " << e.what() << " (work units: " << e.work_done
                  << ", elapsed " << e.elapsed_seconds << "s)\n";
        return 3;
    } catch (const matchpoly::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
