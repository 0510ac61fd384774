// Command-line front end.  Exit codes: 0 success, 1 negative mathematical
// result (exceptional canvas, illegal sequence, exhausted search), 2 input
// error, 3 internal diagnostic (a stuck solver is a bug, not bad input).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "planedeg/generator.hpp"
#include "planedeg/solver.hpp"
#include "planedeg/text_io.hpp"

using namespace planedeg;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string girth_str(Girth g) {
    return g ? std::to_string(*g) : std::string("inf");
}

const char* class_str(GirthClass c) {
    switch (c) {
        case GirthClass::G3: return "3";
        case GirthClass::G4: return "4";
        default: return "ge5";
    }
}

SolveOptions trace_options(bool trace) {
    SolveOptions opt;
    if (trace)
        opt.trace = [](const TraceEvent& e) {
            std::cerr << "step " << e.rule;
            for (Vertex v : e.witness) std::cerr << " " << v;
            std::cerr << "\n";
        };
    return opt;
}

int cmd_girth(const std::string& graph_file) {
    PlaneGraph g = parse_plane_graph(slurp(graph_file));
    for (Vertex v : g.vertices()) {
        Girth gv = girth_of_vertex(g, v);
        std::cout << v << " " << girth_str(gv) << " "
                  << class_str(girth_class(gv)) << "\n";
    }
    return 0;
}

int cmd_localf(const std::string& graph_file) {
    PlaneGraph g = parse_plane_graph(slurp(graph_file));
    std::cout << serialize_weights(g, local_girth_function(g));
    return 0;
}

int cmd_solve(const std::string& graph_file, const std::string& weights_file,
              bool trace) {
    PlaneGraph g = parse_plane_graph(slurp(graph_file));
    std::optional<WeightFn> f;
    if (!weights_file.empty()) f = parse_weights(slurp(weights_file), g);
    OpSeq seq = solve_local_girth(g, f, trace_options(trace));
    std::cout << serialize_sequence(seq);
    return 0;
}

int cmd_run(const std::string& graph_file, const std::string& weights_file,
            const std::string& seq_file) {
    PlaneGraph g = parse_plane_graph(slurp(graph_file));
    WeightFn f = parse_weights(slurp(weights_file), g);
    OpSeq ops = parse_sequence(slurp(seq_file));
    RunResult r = run_sequence(g, f, ops);
    if (!r.ok()) {
        std::cout << "illegal at index " << r.error->index << ": "
                  << to_string(r.error->op) << " (" << r.error->reason
                  << ")\n";
        return 1;
    }
    for (std::size_t i = 0; i < r.availabilities.size(); ++i)
        std::cout << "availability " << i << " " << r.availabilities[i]
                  << "\n";
    bool all = r.state.g.empty();
    std::cout << "removes_all " << (all ? "yes" : "no") << "\n";
    if (all && ops.size() == r.availabilities.size()) {
        AverageAvailability avg = average_availability(g, f, ops);
        std::cout << "product " << avg.product << "\n";
        std::cout << "average " << avg.mean() << "\n";
    }
    return 0;
}

int cmd_canvas_check(const std::string& canvas_file) {
    Canvas k = parse_canvas(slurp(canvas_file));
    auto viol = validate_canvas(k);
    if (!viol.empty()) {
        for (const auto& v : viol) {
            std::cout << "violation";
            for (Vertex x : v.verts) std::cout << " " << x;
            std::cout << ": " << v.detail << "\n";
        }
        return 2;
    }
    if (auto e = classify_exception(k)) {
        std::cout << "exception " << to_string(e->kind);
        for (Vertex v : e->witnesses) std::cout << " " << v;
        std::cout << "\n";
        return 1;
    }
    std::cout << "canvas ok\n";
    return 0;
}

int cmd_canvas_solve(const std::string& canvas_file, bool trace) {
    Canvas k = parse_canvas(slurp(canvas_file));
    SolveOutcome out = solve_canvas(k, trace_options(trace));
    if (out.exception) {
        std::cout << "exception " << to_string(out.exception->kind);
        for (Vertex v : out.exception->witnesses) std::cout << " " << v;
        std::cout << "\n";
        return 1;
    }
    std::cout << serialize_sequence(out.seq);
    return 0;
}

int cmd_wd_exact(const std::string& graph_file,
                 const std::string& weights_file, std::uint64_t budget,
                 bool no_prune) {
    PlaneGraph g = parse_plane_graph(slurp(graph_file));
    WeightFn f = parse_weights(slurp(weights_file), g);
    SearchResult r = exact_weakly_degenerate(g, f, budget, !no_prune);
    switch (r.status) {
        case SearchStatus::Found:
            std::cout << "found\n" << serialize_sequence(r.witness);
            return 0;
        case SearchStatus::ExhaustedNo:
            std::cout << "exhausted_no\n";
            return 1;
        default:
            std::cout << "budget_exceeded\n";
            return 1;
    }
}

int cmd_color(const std::string& graph_file, const std::string& weights_file,
              const std::string& seq_file, const std::string& assign_file) {
    PlaneGraph g = parse_plane_graph(slurp(graph_file));
    WeightFn f = parse_weights(slurp(weights_file), g);
    OpSeq ops = parse_sequence(slurp(seq_file));
    CorrespondenceAssignment a = parse_assignment(slurp(assign_file), g);
    if (!removes_all(g, f, ops)) {
        std::cout << "sequence is not a full legal removal\n";
        return 1;
    }
    Coloring phi = color_via_sequence(g, a, f, ops);
    for (auto [v, c] : phi) std::cout << "color " << v << " " << c << "\n";
    return 0;
}

int cmd_count(const std::string& graph_file, const std::string& assign_file) {
    PlaneGraph g = parse_plane_graph(slurp(graph_file));
    CorrespondenceAssignment a = parse_assignment(slurp(assign_file), g);
    std::cout << count_colorings(g, a) << "\n";
    return 0;
}

int cmd_bound(const std::string& graph_file, const std::string& weights_file,
              const std::string& seq_file) {
    PlaneGraph g = parse_plane_graph(slurp(graph_file));
    WeightFn f = parse_weights(slurp(weights_file), g);
    OpSeq ops = parse_sequence(slurp(seq_file));
    if (!removes_all(g, f, ops)) {
        std::cout << "sequence is not a full legal removal\n";
        return 1;
    }
    ColoringBound b = coloring_count_lower_bound(g, f, ops);
    AverageAvailability avg{b.product, b.n};
    std::cout << "product " << b.product << "\n";
    std::cout << "average " << avg.mean() << "\n";
    return 0;
}

int cmd_gen(std::uint64_t seed, int n, double keep) {
    std::cout << serialize(generate_plane_graph(seed, n, keep));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak degeneracy of plane graphs under girth-graded "
                 "weights"};
    app.require_subcommand(1);

    std::string graph, weights, seq, canvas, assign;
    bool trace = false, no_prune = false;
    std::uint64_t budget = 10'000'000, seed = 0;
    int n = 10;
    double keep = 1.0;

    auto* c_girth = app.add_subcommand("girth", "per-vertex girths");
    c_girth->add_option("graph", graph)->required();

    auto* c_localf = app.add_subcommand(
        "localf", "minimal girth-graded weights of a graph");
    c_localf->add_option("graph", graph)->required();

    auto* c_solve = app.add_subcommand(
        "solve", "emit a full removal sequence for a plane graph");
    c_solve->add_option("graph", graph)->required();
    c_solve->add_option("--f", weights, "weight file (defaults to minimal)");
    c_solve->add_flag("--trace", trace, "log reductions to stderr");

    auto* c_run = app.add_subcommand(
        "run", "validate a sequence and report availabilities");
    c_run->add_option("graph", graph)->required();
    c_run->add_option("weights", weights)->required();
    c_run->add_option("sequence", seq)->required();

    auto* c_check = app.add_subcommand("canvas-check",
                                       "validate and classify a canvas");
    c_check->add_option("canvas", canvas)->required();

    auto* c_csolve = app.add_subcommand("canvas-solve",
                                        "solve a canvas to a sequence");
    c_csolve->add_option("canvas", canvas)->required();
    c_csolve->add_flag("--trace", trace);

    auto* c_exact = app.add_subcommand(
        "wd-exact", "exhaustive weak-degeneracy decision");
    c_exact->add_option("graph", graph)->required();
    c_exact->add_option("weights", weights)->required();
    c_exact->add_option("--budget", budget, "search node budget");
    c_exact->add_flag("--no-prune", no_prune, "disable all pruning");

    auto* c_color = app.add_subcommand(
        "color", "extract a correspondence colouring along a sequence");
    c_color->add_option("graph", graph)->required();
    c_color->add_option("weights", weights)->required();
    c_color->add_option("sequence", seq)->required();
    c_color->add_option("assignment", assign)->required();

    auto* c_count = app.add_subcommand("count",
                                       "count valid colourings exactly");
    c_count->add_option("graph", graph)->required();
    c_count->add_option("assignment", assign)->required();

    auto* c_bound = app.add_subcommand(
        "bound", "guaranteed colouring count from a sequence");
    c_bound->add_option("graph", graph)->required();
    c_bound->add_option("weights", weights)->required();
    c_bound->add_option("sequence", seq)->required();

    auto* c_gen = app.add_subcommand("gen", "generate a random plane graph");
    c_gen->add_option("--seed", seed)->required();
    c_gen->add_option("--n", n)->required();
    c_gen->add_option("--keep", keep, "edge keep probability")
        ->default_val(1.0);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_girth->parsed()) return cmd_girth(graph);
        if (c_localf->parsed()) return cmd_localf(graph);
        if (c_solve->parsed()) return cmd_solve(graph, weights, trace);
        if (c_run->parsed()) return cmd_run(graph, weights, seq);
        if (c_check->parsed()) return cmd_canvas_check(canvas);
        if (c_csolve->parsed()) return cmd_canvas_solve(canvas, trace);
        if (c_exact->parsed())
            return cmd_wd_exact(graph, weights, budget, no_prune);
        if (c_color->parsed()) return cmd_color(graph, weights, seq, assign);
        if (c_count->parsed()) return cmd_count(graph, assign);
        if (c_bound->parsed()) return cmd_bound(graph, weights, seq);
        if (c_gen->parsed()) return cmd_gen(seed, n, keep);
    } catch (const solver_stuck& e) {
        std::cerr << "diagnostic: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "diagnostic: " << e.what() << "\n";
        return 3;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
