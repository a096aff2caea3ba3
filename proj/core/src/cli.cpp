#include "burn/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "burn/bounds.hpp"
#include "burn/burning.hpp"
#include "burn/errors.hpp"
#include "burn/families.hpp"
#include "burn/format.hpp"
#include "burn/lazy.hpp"
#include "burn/structure.hpp"

namespace burn {

namespace {

struct Options {
    std::string file;
    std::string family;
    int k = 0;
    int n = 0;
    int m = 0;
    std::string sizes;
    std::string sources;
    std::string format = "text";
    int max_vertices = 0;
    int max_depth = 0;
    // verify
    std::string kind;
    int value = 0;
    std::string witness;
};

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in list '" + csv + "'");
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

Hypergraph load_instance(const Options& opt) {
    if (!opt.file.empty()) {
        std::ifstream in(opt.file, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open '" + opt.file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_hypergraph(buf.str());
    }
    FamilySpec spec;
    spec.id = parse_family_id(opt.family);
    spec.k = opt.k;
    spec.n = opt.n;
    spec.m = opt.m;
    if (!opt.sizes.empty()) spec.sizes = parse_int_list(opt.sizes);
    return make_family(spec);
}

std::vector<int> sources_to_indices(const Hypergraph& h, const std::string& csv) {
    std::vector<int> out;
    std::stringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto idx = h.index_of_label(tok);
        if (!idx) throw std::invalid_argument("unknown vertex label '" + tok + "'");
        out.push_back(*idx);
    }
    if (out.empty()) throw std::invalid_argument("empty source list");
    return out;
}

std::string join_labels(const Hypergraph& h, const std::vector<int>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += h.label(vs[i]);
    }
    return s;
}

std::string join_labels(const Hypergraph& h, const VertexSet& set) {
    return join_labels(h, set.to_vector());
}

nlohmann::json label_array(const Hypergraph& h, const std::vector<int>& vs) {
    nlohmann::json a = nlohmann::json::array();
    for (int v : vs) a.push_back(h.label(v));
    return a;
}

SolverGuard burn_guard(const Options& opt) {
    SolverGuard g;
    if (opt.max_vertices > 0) g.max_vertices = opt.max_vertices;
    g.max_depth = opt.max_depth;
    return g;
}

SolverGuard lazy_guard(const Options& opt) {
    SolverGuard g = lazy_default_guard();
    if (opt.max_vertices > 0) g.max_vertices = opt.max_vertices;
    g.max_depth = opt.max_depth;
    return g;
}

int cmd_solve(const Options& opt, std::ostream& out) {
    Hypergraph h = load_instance(opt);
    BurnResult r = burning_number_exact(h, burn_guard(opt));
    if (opt.format == "json") {
        nlohmann::json j;
        j["b"] = r.value;
        j["witness"] = label_array(h, r.witness.sources);
        j["nodes_explored"] = r.nodes_explored;
        j["lower_bound"] = r.lower_bound;
        j["upper_bound"] = r.upper_bound;
        out << j.dump(2) << '\n';
    } else {
        out << "b = " << r.value << '\n';
        out << "witness = " << join_labels(h, r.witness.sources) << '\n';
    }
    return 0;
}

int cmd_lazy(const Options& opt, std::ostream& out) {
    Hypergraph h = load_instance(opt);
    LazyResult r = lazy_burning_number_exact(h, lazy_guard(opt));
    if (opt.format == "json") {
        nlohmann::json j;
        j["b_lazy"] = r.value;
        j["witness"] = label_array(h, r.witness.to_vector());
        j["nodes_explored"] = r.nodes_explored;
        j["lower_bound"] = r.lower_bound;
        j["upper_bound"] = r.upper_bound;
        out << j.dump(2) << '\n';
    } else {
        out << "b_L = " << r.value << '\n';
        out << "witness = " << join_labels(h, r.witness) << '\n';
    }
    return 0;
}

int cmd_simulate(const Options& opt, std::ostream& out) {
    Hypergraph h = load_instance(opt);
    std::vector<int> sources = sources_to_indices(h, opt.sources);
    Schedule s = run_schedule(h, sources);

    if (opt.format == "json") {
        nlohmann::json j;
        nlohmann::json rounds = nlohmann::json::array();
        for (const auto& fs : s.trace) {
            nlohmann::json row;
            row["round"] = fs.round;
            row["source"] = h.label(sources[fs.round - 1]);
            nlohmann::json ignited = nlohmann::json::array();
            for (int v = 0; v < h.vertex_count(); ++v)
                if (fs.burn_round[v] == fs.round && v != sources[fs.round - 1])
                    ignited.push_back(h.label(v));
            row["ignited"] = ignited;
            row["burned"] = label_array(h, fs.burned.to_vector());
            rounds.push_back(row);
        }
        j["rounds"] = rounds;
        switch (s.verdict) {
            case ScheduleVerdict::ValidAndComplete:
                j["verdict"] = "valid-and-complete";
                j["completion_round"] = s.rounds();
                break;
            case ScheduleVerdict::ValidButIncomplete: j["verdict"] = "valid-but-incomplete"; break;
            case ScheduleVerdict::NonValid:
                j["verdict"] = "non-valid";
                j["invalid_round"] = s.invalid_round;
                break;
        }
        out << j.dump(2) << '\n';
        return 0;
    }

    for (const auto& fs : s.trace) {
        out << "round " << fs.round << ": source=" << h.label(sources[fs.round - 1]);
        std::vector<int> ignited;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (fs.burn_round[v] == fs.round && v != sources[fs.round - 1]) ignited.push_back(v);
        out << " ignited=" << (ignited.empty() ? "-" : join_labels(h, ignited));
        out << " burned=" << join_labels(h, fs.burned) << '\n';
    }
    switch (s.verdict) {
        case ScheduleVerdict::ValidAndComplete:
            out << "verdict: valid-and-complete at round " << s.rounds() << '\n';
            break;
        case ScheduleVerdict::ValidButIncomplete:
            out << "verdict: valid-but-incomplete after round " << s.rounds() << " ("
                << s.trace.back().burned.count() << " of " << h.vertex_count() << " burned)\n";
            break;
        case ScheduleVerdict::NonValid:
            out << "verdict: non-valid at round " << s.invalid_round << " (source "
                << h.label(sources[s.invalid_round - 1]) << " was already burned)\n";
            break;
    }
    return 0;
}

int cmd_generate(const Options& opt, std::ostream& out) {
    Hypergraph h = load_instance(opt);
    out << serialize_hypergraph(h);
    return 0;
}

int cmd_bounds(const Options& opt, std::ostream& out) {
    Hypergraph h = load_instance(opt);
    BoundsOptions bopt{burn_guard(opt), lazy_guard(opt)};
    BoundsReport r = bounds_report(h, bopt);
    const bool disconnected = !r.connected;

    if (opt.format == "json") {
        nlohmann::json j;
        j["bounds"] = nlohmann::json::parse(bounds_report_json(r));
        if (disconnected)
            j["composition"] =
                nlohmann::json::parse(composition_report_json(disconnected_composition_check(h, bopt)));
        else
            j["composition"] = nullptr;
        out << j.dump(2) << '\n';
    } else {
        out << bounds_report_text(r);
        if (disconnected) {
            std::istringstream in(composition_report_text(disconnected_composition_check(h, bopt)));
            std::string line;
            while (std::getline(in, line)) out << "composition." << line << '\n';
        }
    }
    return 0;
}

int cmd_components(const Options& opt, std::ostream& out) {
    Hypergraph h = load_instance(opt);
    auto parts = component_partition(h);
    if (opt.format == "json") {
        nlohmann::json j;
        j["count"] = parts.size();
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : parts) arr.push_back(label_array(h, p.to_vector()));
        j["components"] = arr;
        out << j.dump(2) << '\n';
    } else {
        out << "components = " << parts.size() << '\n';
        for (size_t i = 0; i < parts.size(); ++i)
            out << "component " << i + 1 << ": " << join_labels(h, parts[i]) << '\n';
    }
    return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    Hypergraph h = load_instance(opt);
    std::string failure;

    if (opt.kind == "burning") {
        std::vector<int> sources = sources_to_indices(h, opt.witness);
        Schedule s = run_schedule(h, sources);
        if (s.verdict == ScheduleVerdict::NonValid)
            failure = "schedule is non-valid at round " + std::to_string(s.invalid_round);
        else if (s.verdict == ScheduleVerdict::ValidButIncomplete)
            failure = "schedule does not burn the whole instance";
        else if (s.rounds() != opt.value)
            failure = "schedule completes at round " + std::to_string(s.rounds()) + ", claimed " +
                      std::to_string(opt.value);
    } else if (opt.kind == "lazy") {
        std::vector<int> seeds = sources_to_indices(h, opt.witness);
        VertexSet set(h.vertex_count());
        for (int v : seeds) set.set(v);
        if (set.count() != int(seeds.size()))
            failure = "witness set repeats a vertex";
        else if (!is_lazy_burning_set(h, set))
            failure = "seed set does not burn the whole instance";
        else if (set.count() != opt.value)
            failure = "seed set has size " + std::to_string(set.count()) + ", claimed " +
                      std::to_string(opt.value);
    } else {
        throw std::invalid_argument("--kind must be 'burning' or 'lazy'");
    }

    if (opt.format == "json") {
        nlohmann::json j;
        j["pass"] = failure.empty();
        if (!failure.empty()) j["reason"] = failure;
        out << j.dump(2) << '\n';
    } else {
        if (failure.empty())
            out << "verify: PASS\n";
        else
            out << "verify: FAIL (" << failure << ")\n";
    }
    return failure.empty() ? 0 : 1;
}

void add_input_flags(CLI::App* cmd, Options& opt, bool family_only = false) {
    auto* family = cmd->add_option("--family", opt.family,
                                   "family name: tight-path, loose-path, single-edge, "
                                   "disjoint-edges, star, nested, strwk, graph-path");
    cmd->add_option("--k", opt.k, "uniformity parameter")->needs(family);
    cmd->add_option("--n", opt.n, "order parameter")->needs(family);
    cmd->add_option("--m", opt.m, "edge-count parameter (loose-path)")->needs(family);
    cmd->add_option("--sizes", opt.sizes, "comma-separated edge sizes")->needs(family);
    if (family_only) {
        family->required();
    } else {
        auto* file = cmd->add_option("--file", opt.file, "instance file in canonical format");
        file->excludes(family);
        family->excludes(file);
    }
}

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--max-vertices", opt.max_vertices, "override the solver vertex guards");
    cmd->add_option("--max-depth", opt.max_depth, "cap search depth (schedule length / set size)");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    // BURN_THREADS caps solver parallelism; the exact solvers run single-
    // threaded, which satisfies any positive cap.
    if (const char* threads = std::getenv("BURN_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(threads, &end, 10);
        if (end == threads || v < 1) {
            err << "error: BURN_THREADS must be a positive integer\n";
            return 2;
        }
    }

    Options opt;
    CLI::App app{"exact toolkit for round-based and lazy hypergraph burning"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "exact burning number with witness schedule");
    add_input_flags(solve, opt);
    add_common_flags(solve, opt);

    auto* lazy = app.add_subcommand("lazy", "exact lazy burning number with witness set");
    add_input_flags(lazy, opt);
    add_common_flags(lazy, opt);

    auto* simulate = app.add_subcommand("simulate", "play a source sequence and print the trace");
    add_input_flags(simulate, opt);
    add_common_flags(simulate, opt);
    simulate->add_option("--sources", opt.sources, "comma-separated source labels")->required();

    auto* generate = app.add_subcommand("generate", "emit a family instance in canonical format");
    add_input_flags(generate, opt, /*family_only=*/true);

    auto* bounds = app.add_subcommand("bounds", "parameter report with inequality verdicts");
    add_input_flags(bounds, opt);
    add_common_flags(bounds, opt);

    auto* components = app.add_subcommand("components", "connected components");
    add_input_flags(components, opt);
    add_common_flags(components, opt);

    auto* verify = app.add_subcommand("verify", "check a claimed value against its witness");
    add_input_flags(verify, opt);
    add_common_flags(verify, opt);
    verify->add_option("--kind", opt.kind, "burning or lazy")
        ->check(CLI::IsMember({"burning", "lazy"}))
        ->required();
    verify->add_option("--value", opt.value, "claimed value")->required();
    verify->add_option("--witness", opt.witness,
                       "comma-separated labels (sequence for burning, set for lazy)")
        ->required();

    std::vector<const char*> argv;
    argv.push_back("burn");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(opt, out);
        if (lazy->parsed()) return cmd_lazy(opt, out);
        if (simulate->parsed()) return cmd_simulate(opt, out);
        if (generate->parsed()) return cmd_generate(opt, out);
        if (bounds->parsed()) return cmd_bounds(opt, out);
        if (components->parsed()) return cmd_components(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const UndefinedValue& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace burn
