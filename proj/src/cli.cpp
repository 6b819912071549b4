#include "splines/cli.hpp"

#include "splines/cycle_basis.hpp"
#include "splines/errors.hpp"
#include "splines/families.hpp"
#include "splines/json_io.hpp"
#include "splines/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace splines::cli {

namespace {

using io::json;

json read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        parts.push_back(item);
    if (!text.empty() && text.back() == sep)
        parts.emplace_back();
    return parts;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<Integer> parse_list(const std::string& text) {
    std::vector<Integer> out;
    for (const auto& part : split(text, ','))
        out.push_back(parse_integer(trim(part)));
    if (out.empty())
        throw UsageError("empty integer list");
    return out;
}

std::vector<Congruence> parse_pairs(const std::string& text) {
    std::vector<Congruence> out;
    for (const auto& pair : split(text, ';')) {
        const auto fields = split(pair, ',');
        if (fields.size() != 2)
            throw UsageError("expected 'residue,modulus', got '" + pair + "'");
        out.emplace_back(parse_integer(trim(fields[0])), parse_integer(trim(fields[1])));
    }
    if (out.empty())
        throw UsageError("--pairs needs at least one congruence");
    return out;
}

const std::vector<Integer>& cycle_labels(const EdgeLabeledGraph& g) {
    if (g.family() != Family::cycle)
        throw DomainError(std::string("command needs a cycle graph, got ") + family_name(g.family()));
    return std::get<CycleParams>(g.params()).labels;
}

/// Result of a command body: payload plus exit code.
struct Outcome {
    json payload;
    int code = kOk;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized splines over the integers on edge-labeled graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::uint64_t seed = 0x5eed;
    std::uint64_t budget = kDefaultSearchBudget;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));
    app.add_option("--seed", seed, "Seed for randomized tooling");
    app.add_option("--budget", budget, "Maximum candidates visited by enumeration")->check(CLI::PositiveNumber);

    std::function<Outcome()> body;

    std::string graph_path, spline_path;

    auto* basis = app.add_subcommand("basis", "Smallest flow-up basis of a cycle");
    basis->add_option("graph", graph_path, "Graph JSON file")->required();
    basis->callback([&] {
        body = [&] {
            const auto labels = cycle_labels(io::graph_from_json(read_document(graph_path)));
            return Outcome{io::basis_to_json(flowup_basis(labels))};
        };
    });

    auto* verify_cmd = app.add_subcommand("verify", "Check every edge congruence");
    verify_cmd->add_option("graph", graph_path, "Graph JSON file")->required();
    verify_cmd->add_option("spline", spline_path, "Spline JSON file")->required();
    verify_cmd->callback([&] {
        body = [&] {
            const auto graph = io::graph_from_json(read_document(graph_path));
            const auto spline = io::spline_from_json(read_document(spline_path));
            const auto verdict = verify(graph, spline);
            return Outcome{io::verdict_to_json(verdict), verdict.valid() ? kOk : kNegative};
        };
    });

    auto* decompose_cmd = app.add_subcommand("decompose", "Coefficients of a cycle spline in the flow-up basis");
    decompose_cmd->add_option("graph", graph_path, "Graph JSON file")->required();
    decompose_cmd->add_option("spline", spline_path, "Spline JSON file")->required();
    decompose_cmd->callback([&] {
        body = [&] {
            const auto graph = io::graph_from_json(read_document(graph_path));
            const auto& labels = cycle_labels(graph);
            const auto spline = io::spline_from_json(read_document(spline_path));
            if (const auto verdict = verify(graph, spline); !verdict.valid())
                return Outcome{io::verdict_to_json(verdict), kNegative};
            return Outcome{io::decomposition_to_json(decompose(labels, spline))};
        };
    });

    std::string labels_text, leaves_text;
    auto* solve_star = app.add_subcommand("solve-star", "Center value of a star from its leaves");
    solve_star->add_option("--labels", labels_text, "Edge labels l1,...,ln")->required();
    solve_star->add_option("--leaves", leaves_text, "Leaf values g1,...,gn")->required();
    solve_star->callback([&] {
        body = [&] {
            const auto center = star_center(parse_list(labels_text), parse_list(leaves_text));
            return Outcome{io::crt_to_json(center, "center"), center ? kOk : kNegative};
        };
    });

    bool wheel = false, complete = false;
    std::string spokes_text, star_text;
    auto* extend = app.add_subcommand("extend", "Add a hub (wheel) or a new vertex (complete graph)");
    auto* wheel_flag = extend->add_flag("--wheel", wheel, "Base graph is the rim cycle of a wheel");
    auto* complete_flag = extend->add_flag("--complete", complete, "Base graph is a complete graph");
    wheel_flag->excludes(complete_flag);
    extend->add_option("graph", graph_path, "Base graph JSON file")->required();
    extend->add_option("spline", spline_path, "Spline JSON file")->required();
    auto* spokes_opt = extend->add_option("--spokes", spokes_text, "Spoke labels for --wheel");
    auto* star_opt = extend->add_option("--star", star_text, "Labels joining the new vertex for --complete");
    spokes_opt->needs(wheel_flag);
    star_opt->needs(complete_flag);
    extend->callback([&] {
        body = [&] {
            if (wheel == complete)
                throw UsageError("extend needs exactly one of --wheel or --complete");
            const auto graph = io::graph_from_json(read_document(graph_path));
            const auto spline = io::spline_from_json(read_document(spline_path));
            if (wheel) {
                if (spokes_text.empty())
                    throw UsageError("--wheel needs --spokes");
                const auto& rim = cycle_labels(graph);
                const auto spokes = parse_list(spokes_text);
                const auto wheel_graph = make_wheel(rim, spokes);
                if (const auto verdict = verify(graph, spline); !verdict.valid())
                    return Outcome{io::verdict_to_json(verdict), kNegative};
                const auto hub = wheel_extend(rim, spokes, spline);
                if (!hub)
                    return Outcome{json{{"solvable", false}}, kNegative};
                auto values = spline.values();
                values.push_back(hub->value);
                json payload = io::crt_to_json(hub, "center");
                payload["graph"] = io::graph_to_json(wheel_graph);
                payload["values"] = io::to_json(values);
                return Outcome{std::move(payload)};
            }
            if (star_text.empty())
                throw UsageError("--complete needs --star");
            auto base = graph;
            if (graph.family() == Family::cycle && graph.vertex_count() == 3)
                base = make_complete(cycle_labels(graph), {});
            if (base.family() != Family::complete)
                throw DomainError(std::string("--complete needs a complete graph, got ") + family_name(base.family()));
            if (const auto verdict = verify(base, spline); !verdict.valid())
                return Outcome{io::verdict_to_json(verdict), kNegative};
            const auto grown = complete_extend(base, spline, parse_list(star_text));
            if (!grown)
                return Outcome{json{{"solvable", false}}, kNegative};
            json payload = io::crt_to_json(grown->center, "center");
            payload["graph"] = io::graph_to_json(grown->graph);
            payload["values"] = io::to_json(grown->spline.values());
            return Outcome{std::move(payload)};
        };
    });

    std::uint64_t bound = 0;
    auto* enumerate = app.add_subcommand("enumerate", "All splines with entries in [0, bound)");
    enumerate->add_option("graph", graph_path, "Graph JSON file")->required();
    enumerate->add_option("--bound", bound, "Exclusive upper bound on entries")->required()->check(CLI::PositiveNumber);
    enumerate->callback([&] {
        body = [&] {
            const auto graph = io::graph_from_json(read_document(graph_path));
            return Outcome{io::enumeration_to_json(enumerate_splines(graph, bound, budget))};
        };
    });

    std::string pairs_text;
    auto* crt = app.add_subcommand("crt", "Solve a system of congruences");
    crt->add_option("--pairs", pairs_text, "Congruences as \"r,m;r,m;...\"")->required();
    crt->callback([&] {
        body = [&] {
            const auto solution = crt_system(parse_pairs(pairs_text));
            return Outcome{io::crt_to_json(solution, "value"), solution ? kOk : kNegative};
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        const auto outcome = body();
        out << outcome.payload.dump() << "\n";
        return outcome.code;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return kConsistency;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace splines::cli
