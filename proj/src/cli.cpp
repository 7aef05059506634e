#include "qlan/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qlan/error.hpp"
#include "qlan/io.hpp"
#include "qlan/oracle/verify.hpp"
#include "qlan/topology.hpp"
#include "qlan/vertex_cover.hpp"

namespace qlan::cli {

namespace {

using io::Json;

// Raised for problems the user fixes by changing the command line.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string output;
    std::string format = "json";
    std::string kind;
    std::optional<std::size_t> k, kc, kbmin, no, ci, cj, n_max, samples;
    std::uint64_t seed = 1;
    std::string fictitious;
    std::string order;
    std::string plan;
    std::string demand;
    std::string topology = "none";
    bool exhaustive = false;
};

std::vector<std::size_t> parse_index_list(const std::string& text, const char* flag) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            const unsigned long long v = std::stoull(item, &used);
            if (used != item.size() || item.empty() || item[0] == '-' || item[0] == '+') throw std::invalid_argument("");
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": '" + item + "' is not a non-negative integer");
        }
    }
    return out;
}

std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
        buf << file.rdbuf();
    }
    return buf.str();
}

// Input is either a bare graph or a state (a graph with roles).
struct Source {
    std::optional<QlanState> state;
    Graph graph;
};

class Runner {
public:
    Runner(const Options& o, std::istream& in) : o_(o), in_(in) {}

    Source source(bool graph_ok) const {
        if (!o_.input.empty()) {
            Json j = io::parse_json(read_source(o_.input, in_));
            if (j.is_object() && j.contains("roles")) {
                QlanState s = io::state_from_json(j);
                return Source{s, s.graph()};
            }
            if (!graph_ok) throw Error(ErrorKind::Parse, "input has no \"roles\"; this command needs a QLAN state");
            return Source{std::nullopt, io::graph_from_json(j)};
        }
        QlanState s = build();
        return Source{s, s.graph()};
    }

    QlanState state() const { return *source(false).state; }

    QlanState build() const {
        std::set<std::size_t> fict;
        for (std::size_t i : parse_index_list(o_.fictitious, "--fictitious")) fict.insert(i);
        std::string kind = o_.kind;
        if (kind.empty()) {
            if (o_.kc || o_.kbmin || o_.no) kind = "tree";
            else if (o_.k) kind = "chain";
            else throw UsageError("give --input, --k (chain) or --kc/--kbmin/--no (tree)");
        }
        if (kind == "chain") {
            if (!o_.k) throw UsageError("--k is required for a chain state");
            return build_chain_state(*o_.k, fict);
        }
        if (!o_.kc || !o_.kbmin || !o_.no) throw UsageError("--kc, --kbmin and --no are required for a tree-like state");
        return build_tree_like_state(TreeShape{*o_.kc, *o_.kbmin, *o_.no}, fict);
    }

    std::pair<VertexId, VertexId> endpoints(const QlanState& s) const {
        if (!o_.ci) throw UsageError("--ci is required");
        if (!o_.cj) throw UsageError("--cj is required");
        return {s.client(*o_.ci), s.client(*o_.cj)};
    }

    MeasurementPlan plan() const {
        if (o_.plan.empty()) throw UsageError("--plan is required");
        const std::string text = o_.plan.front() == '{' ? o_.plan : read_source(o_.plan, in_);
        return io::plan_from_json(io::parse_json(text));
    }

    void require_json(const std::string& command) const {
        if (o_.format != "json") throw UsageError("--format " + o_.format + " is not available for " + command);
    }

    std::string emit(const Json& j) const { return j.dump(2) + "\n"; }

    std::string report(const TopologyReport& r) const {
        if (o_.format == "dot") return io::to_dot(r.final, r.initial);
        return emit(io::to_json(r));
    }

    std::string dispatch(const std::string& command) const {
        if (command == "build") {
            QlanState s = build();
            return o_.format == "dot" ? io::to_dot(s) : emit(io::to_json(s));
        }
        if (command == "measure") {
            Source src = source(true);
            PlanResult r = apply_plan(src.graph, plan());
            if (o_.format == "dot") return src.state ? io::to_dot(r.final, *src.state) : io::to_dot(r.final);
            Json trajectory = Json::array();
            for (const Graph& g : r.trajectory) trajectory.push_back(io::to_json(g));
            return emit(Json{{"final", io::to_json(r.final)}, {"trajectory", trajectory}});
        }
        if (command == "bus") {
            return report(to_bus(state(), parse_index_list(o_.order, "--order")));
        }
        if (command == "epr") return report(extract_epr_pairs(state()));
        if (command == "roll") {
            QlanState s = state();
            auto [a, b] = endpoints(s);
            return report(chain_client_count(s) ? roll_chain(s, a, b) : roll_tree(s, a, b));
        }
        if (command == "ring") return report(to_enhanced_ring(state()));
        if (command == "reduce") {
            LcReduction red = lc_reduce_enhanced_ring(state());
            if (o_.format == "dot") return io::to_dot(red.reduced);
            Graph replay = red.reduced.graph();
            for (VertexId v : red.certificate) replay = local_complement(replay, v);
            Json cert = Json::array();
            for (VertexId v : red.certificate) cert.push_back(v);
            return emit(Json{{"reduced", io::to_json(red.reduced)},
                             {"certificate", cert},
                             {"ring", io::to_json(red.ring)},
                             {"replay_matches", replay == red.ring}});
        }
        if (command == "schmidt") {
            require_json(command);
            Source src = source(true);
            if (src.state) {
                return emit(Json{{"n_o", src.state->orchestrator_count()},
                                 {"schmidt_measure", schmidt_measure_enhanced_ring(*src.state)}});
            }
            SchmidtBounds b = schmidt_bounds(src.graph);
            return emit(Json{{"lower", b.lower}, {"upper", b.upper}, {"exact", b.lower == b.upper}});
        }
        if (command == "persistency") {
            require_json(command);
            Source src = source(o_.topology == "none");
            if (o_.topology == "ring") return emit(Json{{"persistency", enhanced_ring_persistency(*src.state)}});
            Graph g = o_.topology == "bus" ? to_bus(*src.state, {}, quiet()).final : src.graph;
            Json cover = Json::array();
            for (VertexId v : min_vertex_cover(g)) cover.push_back(v);
            return emit(Json{{"persistency", cover.size()}, {"z_measurements", cover}});
        }
        if (command == "plan") {
            QlanState s = state();
            if (o_.demand.empty()) throw UsageError("--demand is required");
            Demand d;
            std::stringstream ss(o_.demand);
            std::string item;
            while (std::getline(ss, item, ',')) {
                const auto dash = item.find('-');
                if (dash == std::string::npos) throw UsageError("--demand: '" + item + "' is not of the form i-j");
                auto ends = parse_index_list(item.substr(0, dash) + "," + item.substr(dash + 1), "--demand");
                if (ends.size() != 2) throw UsageError("--demand: '" + item + "' is not of the form i-j");
                d.pairs.emplace_back(s.client(ends[0]), s.client(ends[1]));
            }
            DemandPlan p = plan_for_demand(s, d);
            if (o_.format == "dot") return io::to_dot(p.final, s);
            return emit(io::to_json(p));
        }
        if (command == "verify") {
            require_json(command);
            if (!o_.plan.empty()) {
                Source src = source(true);
                oracle::PlanVerdict v = oracle::verify_plan(src.graph, plan());
                verified_ = v.pass;
                Json j{{"pass", v.pass}, {"histories", v.histories}, {"predicted", io::to_json(v.predicted)}};
                if (!v.detail.empty()) j["detail"] = v.detail;
                return emit(j);
            }
            const std::size_t n_max = o_.n_max.value_or(4);
            oracle::SweepSummary sum = o_.exhaustive
                                           ? oracle::verify_rules_exhaustive(n_max)
                                           : oracle::verify_rules_sampled(n_max, o_.samples.value_or(200), o_.seed);
            verified_ = sum.pass();
            return emit(Json{{"mode", o_.exhaustive ? "exhaustive" : "sampled"},
                             {"n_max", n_max},
                             {"graphs", sum.graphs},
                             {"steps", sum.steps},
                             {"branches", sum.branches},
                             {"failures", sum.failures},
                             {"examples", sum.examples},
                             {"pass", sum.pass()}});
        }
        if (command == "export") {
            if (o_.input.empty()) throw UsageError("--input is required");
            Source src = source(true);
            if (o_.format == "dot") return src.state ? io::to_dot(*src.state) : io::to_dot(src.graph);
            return emit(src.state ? io::to_json(*src.state) : io::to_json(src.graph));
        }
        throw UsageError("unknown command " + command);
    }

    // False after a verification that found failures.
    bool verified() const { return verified_; }

private:
    static ReportOptions quiet() {
        ReportOptions r;
        r.oracle_max_qubits = 0;
        return r;
    }

    const Options& o_;
    std::istream& in_;
    mutable bool verified_ = true;
};

struct CommandInfo {
    const char* name;
    const char* help;
};

constexpr CommandInfo commands[] = {
    {"build", "Build a chain or tree-like QLAN state"},
    {"measure", "Apply a measurement plan to a graph or state"},
    {"bus", "Measure every orchestrator of a chain in Y (bus topology)"},
    {"epr", "Extract disjoint EPR pairs from a chain"},
    {"roll", "Create a direct link between two clients by entanglement rolling"},
    {"ring", "Measure every orchestrator of a tree-like state in Y (enhanced ring)"},
    {"reduce", "LC-reduce the enhanced ring to a smaller tree-like state"},
    {"schmidt", "Schmidt measure of an enhanced ring, or bounds for a plain graph"},
    {"persistency", "Minimum number of Z measurements that disentangle the state"},
    {"plan", "Plan measurements for a set of client pairs"},
    {"verify", "Check rewrite rules or a plan against the stabilizer simulation"},
    {"export", "Convert a graph or state to JSON or DOT"},
};

void add_state_flags(CLI::App* sub, Options& o) {
    sub->add_option("--input", o.input, "JSON graph or state file, - for stdin");
    sub->add_option("--kind", o.kind, "State family")->check(CLI::IsMember({"chain", "tree"}));
    sub->add_option("--k", o.k, "Number of chain clients");
    sub->add_option("--kc", o.kc, "Clients per orchestrator");
    sub->add_option("--kbmin", o.kbmin, "Bridges shared by consecutive orchestrators");
    sub->add_option("--no", o.no, "Number of orchestrator qubits");
    sub->add_option("--fictitious", o.fictitious, "Comma-separated 1-based fictitious client indices");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Graph-state QLAN topology engineering", "qlan"};
    app.require_subcommand(1, 1);
    app.add_option("--output", o.output, "Write the result to this file");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    app.add_option("--seed", o.seed, "Seed for sampled sweeps");
    app.fallthrough();

    for (const CommandInfo& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        const std::string name = c.name;
        add_state_flags(sub, o);
        if (name == "bus") sub->add_option("--order", o.order, "Comma-separated orchestrator order");
        if (name == "roll") {
            sub->add_option("--ci", o.ci, "1-based index of the first client");
            sub->add_option("--cj", o.cj, "1-based index of the second client");
        }
        if (name == "measure" || name == "verify") sub->add_option("--plan", o.plan, "Plan JSON file or inline JSON");
        if (name == "plan") sub->add_option("--demand", o.demand, "Client pairs such as 1-3,2-4");
        if (name == "persistency") {
            sub->add_option("--topology", o.topology, "Measure the bus or ring first")
                ->check(CLI::IsMember({"none", "bus", "ring"}));
        }
        if (name == "verify") {
            sub->add_option("--n-max", o.n_max, "Largest graph order in a rule sweep");
            sub->add_flag("--exhaustive", o.exhaustive, "Sweep every labelled graph");
            sub->add_option("--samples", o.samples, "Graphs drawn in a sampled sweep");
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage_error;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Runner runner(o, in);
    std::string result;
    try {
        result = runner.dispatch(command);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain_error;
    }

    if (o.output.empty()) {
        out << result;
    } else {
        std::ofstream file(o.output, std::ios::binary);
        file << result;
        if (!file) {
            err << "error: cannot write '" << o.output << "'\n";
            return exit_domain_error;
        }
    }
    return runner.verified() ? exit_ok : exit_domain_error;
}

}  // namespace qlan::cli
