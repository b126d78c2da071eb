#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "autonet/commutativity.hpp"
#include "autonet/dot.hpp"
#include "autonet/dynamics.hpp"
#include "autonet/enumeration.hpp"
#include "autonet/lifts.hpp"
#include "autonet/netdoc.hpp"
#include "autonet/synthesis.hpp"
#include "autonet/verify.hpp"

namespace {

using autonet::Guard;
using autonet::Network;
using autonet::NodeSet;
using autonet::PairLevel;
using autonet::Scope;
using autonet::state_t;
using nlohmann::json;

json nodes_json(NodeSet s) {
    json out = json::array();
    s.for_each_node([&](int i) { out.push_back(i); });
    return out;
}

json spec_json(const autonet::ArrangementNetworkSpec& spec) {
    json cubes = json::array();
    for (const autonet::Subcube& c : spec.arrangement.cubes()) {
        json cube = json::object();
        c.support().for_each_node([&](int i) { cube["x" + std::to_string(i)] = c.value_at(i); });
        cubes.push_back(std::move(cube));
    }
    json fc = json::object();
    for (const auto& [node, choice] : spec.free_choice)
        fc["x" + std::to_string(node)] = autonet::free_choice_name(choice);
    return json{{"cubes", std::move(cubes)}, {"free_choice", std::move(fc)}};
}

struct Options {
    bool json_output = false;
    std::uint64_t cap = Guard{}.cost_cap;
    bool no_guard = false;
    Guard guard() const { return Guard{cap, !no_guard}; }
};

void emit(const Options& opt, const json& machine, const std::string& human) {
    if (opt.json_output)
        std::cout << machine.dump() << "\n";
    else
        std::cout << human;
}

int run_check(const Options& opt, const std::string& property, std::string scope, const std::string& file) {
    const bool commutativity_family = property == "c1" || property == "cs" || property == "ic";
    if (!commutativity_family && property != "dynlocal" && property != "bijective" &&
        property != "idempotent")
        throw CLI::ValidationError("--property", "expected c1, cs, ic, dynlocal, bijective or idempotent");
    const Network f = autonet::load_network(file);

    if (scope.empty()) {
        if (property == "c1")
            scope = "pairwise";
        else if (commutativity_family)
            scope = "all-subsets";
        else
            scope = "global";
    }

    bool holds = false;
    json machine{{"command", "check"}, {"property", property}, {"scope", scope}};
    std::string human;

    if (commutativity_family) {
        PairLevel level;
        if (scope == "pairwise")
            level = PairLevel::Pairwise;
        else if (scope == "disjoint-subsets")
            level = PairLevel::DisjointSubsets;
        else if (scope == "all-subsets")
            level = PairLevel::AllSubsets;
        else
            throw CLI::ValidationError("--scope", "commutativity scopes: pairwise, disjoint-subsets, all-subsets");
        const auto verdict = autonet::check_commutativity(f, level, property == "ic", opt.guard());
        holds = verdict.holds;
        human = std::string(property) + " (" + scope + "): " + (holds ? "holds" : "fails");
        if (verdict.witness) {
            const auto& w = *verdict.witness;
            machine["witness"] = {{"first", nodes_json(w.first)},
                                  {"second", nodes_json(w.second)},
                                  {"x", f.format_state(w.state)}};
            human += "  witness: s=" + w.first.to_string() + " t=" + w.second.to_string() +
                     " x=" + f.format_state(w.state);
        }
    } else {
        Scope sc;
        if (scope == "global")
            sc = Scope::Global;
        else if (scope == "singletons")
            sc = Scope::Singletons;
        else if (scope == "all-subsets")
            sc = Scope::AllSubsets;
        else
            throw CLI::ValidationError("--scope", "dynamics scopes: global, singletons, all-subsets");
        autonet::ScopeVerdict verdict;
        if (property == "dynlocal")
            verdict = autonet::check_dynamically_local(f, sc, opt.guard());
        else if (property == "bijective")
            verdict = autonet::check_bijective(f, sc, opt.guard());
        else
            verdict = autonet::check_idempotent(f, sc, opt.guard());
        holds = verdict.holds;
        human = property + " (" + scope + "): " + (holds ? "holds" : "fails");
        if (verdict.witness) {
            const auto& w = *verdict.witness;
            machine["witness"] = {{"set", nodes_json(w.scope_set)}, {"x", f.format_state(w.x)}};
            human += "  witness: s=" + w.scope_set.to_string() + " x=" + f.format_state(w.x);
            if (w.x2) {
                machine["witness"]["x2"] = f.format_state(*w.x2);
                human += " x'=" + f.format_state(*w.x2);
            }
        }
    }
    machine["holds"] = holds;
    emit(opt, machine, human + "\n");
    return holds ? 0 : 1;
}

int run_dynamics(const Options& opt, const std::string& file) {
    const Network f = autonet::load_network(file);
    const autonet::OrbitReport orbit = autonet::orbit_analysis(f);
    const std::uint64_t piq = autonet::pi(f.q());
    emit(opt,
         json{{"command", "dynamics"}, {"transient", orbit.transient}, {"period", orbit.period}, {"pi_q", piq}},
         "transient " + std::to_string(orbit.transient) + ", period " + std::to_string(orbit.period) +
             " (pi_q = " + std::to_string(piq) + ")\n");
    return 0;
}

int run_components(const Options& opt, const std::string& file, const std::string& dot_file, bool full_arcs) {
    const Network f = autonet::load_network(file);
    const autonet::ComponentDecomposition comp = autonet::components(f, opt.guard());

    auto states_json = [&](const std::vector<state_t>& xs) {
        json out = json::array();
        for (state_t x : xs) out.push_back(f.format_state(x));
        return out;
    };
    json machine{{"command", "components"}, {"component_count", comp.components.size()}};
    json parts = json::array();
    for (const auto& members : comp.components) parts.push_back(states_json(members));
    machine["components"] = std::move(parts);
    machine["unreachable_fixed"] = states_json(comp.unreachable_fixed);
    machine["fixed_points"] = states_json(comp.fixed_points);
    machine["gardens_of_eden"] = states_json(comp.gardens_of_eden);

    std::string human = std::to_string(comp.components.size()) + " components\n";
    for (const auto& members : comp.components) {
        human += " ";
        for (state_t x : members) human += " " + f.format_state(x);
        human += "\n";
    }
    human += "unreachable fixed points:";
    for (state_t x : comp.unreachable_fixed) human += " " + f.format_state(x);
    human += "\nfixed points:";
    for (state_t x : comp.fixed_points) human += " " + f.format_state(x);
    human += "\ngardens of eden:";
    for (state_t x : comp.gardens_of_eden) human += " " + f.format_state(x);
    human += "\n";
    emit(opt, machine, human);

    if (!dot_file.empty()) {
        std::ofstream out(dot_file);
        if (!out) throw std::runtime_error("cannot write " + dot_file);
        autonet::write_transition_graph_dot(out, f, {full_arcs}, opt.guard());
    }
    return 0;
}

int run_classify(const Options& opt, const std::string& file) {
    const Network f = autonet::load_network(file);
    const autonet::ClassificationReport report = autonet::classify(f, opt.guard());

    json machine{{"command", "classify"}, {"is_globally_commutative", report.is_globally_commutative}};
    json parts = json::array();
    std::string human = report.is_globally_commutative ? "globally commutative: union of arrangement networks\n"
                                                       : "not globally commutative\n";
    for (const auto& part : report.parts) {
        json pj;
        json members = json::array();
        std::string line = "  component {";
        for (std::size_t k = 0; k < part.members.size(); ++k) {
            members.push_back(f.format_state(part.members[k]));
            line += (k ? "," : "") + f.format_state(part.members[k]);
        }
        line += "}: ";
        pj["members"] = std::move(members);
        if (part.spec) {
            pj["spec"] = spec_json(*part.spec);
            line += "arrangement network";
            for (const auto& [node, choice] : part.spec->free_choice)
                line += std::string(" x") + std::to_string(node) + "=" + autonet::free_choice_name(choice);
        } else {
            pj["failure"] = autonet::classify_failure_name(*part.failure);
            pj["failing_node"] = part.failing_node;
            line += std::string("fails: ") + autonet::classify_failure_name(*part.failure);
            if (part.failing_node) line += " (node " + std::to_string(part.failing_node) + ")";
        }
        parts.push_back(std::move(pj));
        human += line + "\n";
    }
    machine["parts"] = std::move(parts);
    emit(opt, machine, human);
    return report.is_globally_commutative ? 0 : 1;
}

int run_influences(const Options& opt, const std::string& file, int node, const std::string& xs,
                   const std::string& ys) {
    const Network f = autonet::load_network(file);
    const state_t x = f.parse_state(xs);
    const state_t y = f.parse_state(ys);
    const autonet::InfluenceSet inf = autonet::influences(f, node, x, y);

    json machine{{"command", "influences"}, {"node", node}, {"x", xs}, {"y", ys}};
    json list = json::array();
    std::string human = "minimal influences of f_" + std::to_string(node) + " for (" + xs + ", " + ys + "):";
    for (const NodeSet& u : inf.minimal) {
        list.push_back(nodes_json(u));
        human += " " + u.to_string();
    }
    machine["influences"] = std::move(list);
    emit(opt, machine, human + "\n");
    return 0;
}

int run_count_partitions(const Options& opt, int n) {
    const std::uint64_t count = autonet::count_cube_partitions(n);
    emit(opt, json{{"command", "count-partitions"}, {"n", n}, {"count", count}}, std::to_string(count) + "\n");
    return 0;
}

int run_verify(autonet::VerifyOptions vopts, const Options& opt) {
    std::ostringstream sink;
    if (opt.json_output) vopts.out = &sink;  // criterion lines end up in the JSON instead
    const auto results = autonet::run_acceptance(vopts);
    if (opt.json_output) {
        json list = json::array();
        for (const auto& r : results)
            list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        std::cout << json{{"command", "verify"}, {"criteria", std::move(list)}}.dump() << "\n";
    }
    return autonet::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"automata network analysis: update schedules, commutativity, dynamics, and the\n"
                 "classification of globally commutative Boolean networks"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json_output, "machine-readable output");
    app.add_option("--cap", opt.cap, "cost cap for exhaustive sweeps");
    app.add_flag("--no-guard", opt.no_guard, "disable the sweep size guard");

    std::string file, scope, property, dot_file, out_file, spec_file, xs, ys;
    int node = 1, n = 1;
    bool full_arcs = false;
    std::uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "decide a property, exit 0/1 accordingly");
    check->add_option("--property", property, "c1|cs|ic|dynlocal|bijective|idempotent")->required();
    check->add_option("--scope", scope, "pairwise|disjoint-subsets|all-subsets|global|singletons");
    check->add_option("file", file, "network document")->required();

    auto* dynamics = app.add_subcommand("dynamics", "orbit report (transient and period)");
    dynamics->add_option("file", file)->required();

    auto* comps = app.add_subcommand("components", "transition graph components and special points");
    comps->add_option("file", file)->required();
    comps->add_option("--dot", dot_file, "write a DOT rendering of the transition graph");
    comps->add_flag("--full-arcs", full_arcs, "draw all interval arcs, not just single-coordinate ones");

    auto* classify_cmd = app.add_subcommand("classify", "structure-theorem classification (q = 2)");
    classify_cmd->add_option("file", file)->required();

    auto* infl = app.add_subcommand("influences", "minimal influences of a local function");
    infl->add_option("-i,--node", node, "node index")->required();
    infl->add_option("-x", xs, "first configuration (digit string)")->required();
    infl->add_option("-y", ys, "second configuration (digit string)")->required();
    infl->add_option("file", file)->required();

    auto* countp = app.add_subcommand("count-partitions", "partitions of the n-cube into subcubes");
    countp->add_option("-n", n, "cube dimension")->required();

    auto* gen = app.add_subcommand("generate", "build networks from specs, unions, or at random");
    auto* gen_arr = gen->add_subcommand("arrangement", "arrangement network from a spec document");
    gen_arr->add_option("spec", spec_file, "arrangement spec document")->required();
    gen_arr->add_option("--out", out_file, "output network document")->required();
    auto* gen_union = gen->add_subcommand("union", "union of networks with disjoint reachable regions");
    std::vector<std::string> union_files;
    gen_union->add_option("files", union_files, "network documents")->required()->expected(-1);
    gen_union->add_option("--out", out_file, "output network document")->required();
    auto* gen_rand = gen->add_subcommand("random-cs", "random globally commutative Boolean network");
    gen_rand->add_option("-n", n, "node count")->required();
    gen_rand->add_option("--seed", seed, "random seed");
    gen_rand->add_option("--out", out_file, "output network document")->required();
    gen->require_subcommand(1);

    auto* lift = app.add_subcommand("lift", "non-Boolean lifts of Boolean networks");
    auto* lift_q3 = lift->add_subcommand("q3", "ternary lift (f_i independent of x_i required)");
    lift_q3->add_option("file", file)->required();
    lift_q3->add_option("--out", out_file)->required();
    auto* lift_q4 = lift->add_subcommand("q4", "quaternary two-track lift");
    lift_q4->add_option("file", file)->required();
    lift_q4->add_option("--out", out_file)->required();
    lift->require_subcommand(1);

    autonet::VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "run the full theorem-verification suite");
    verify->add_option("--fixtures", vopts.fixture_dir, "fixture directory (default: fixtures)");
    verify->add_option("--threads", vopts.threads, "worker threads (0 = hardware)");
    verify->add_option("--sample-n3", vopts.n3_sample, "sample size for the n=3 sweep (0 = full)");
    verify->add_option("--sample-q3", vopts.q3_sample, "sample size for the q=3 sweep (0 = full)");
    verify->add_option("--seed", vopts.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check(opt, property, scope, file);
        if (dynamics->parsed()) return run_dynamics(opt, file);
        if (comps->parsed()) return run_components(opt, file, dot_file, full_arcs);
        if (classify_cmd->parsed()) return run_classify(opt, file);
        if (infl->parsed()) return run_influences(opt, file, node, xs, ys);
        if (countp->parsed()) return run_count_partitions(opt, n);
        if (gen->parsed()) {
            if (gen_arr->parsed()) {
                autonet::save_network(autonet::build_arrangement_network(autonet::load_spec(spec_file)),
                                      out_file);
            } else if (gen_union->parsed()) {
                std::vector<Network> parts;
                for (const std::string& path : union_files) parts.push_back(autonet::load_network(path));
                autonet::save_network(autonet::union_networks(parts, opt.guard()), out_file);
            } else {
                autonet::save_network(autonet::random_commutative_network(n, seed), out_file);
            }
            return 0;
        }
        if (lift->parsed()) {
            const Network f = autonet::load_network(file);
            autonet::save_network(lift_q3->parsed() ? autonet::lift_q3(f) : autonet::lift_q4(f), out_file);
            return 0;
        }
        if (verify->parsed()) return run_verify(vopts, opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
