#include "cli.hpp"

#include "json_io.hpp"
#include "workers.hpp"

#include <dpdp/catalog.hpp>
#include <dpdp/minimality.hpp>
#include <dpdp/version.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace dpdp::cli {

namespace {

    struct InputError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };
    struct ConsistencyError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    struct Io {
        std::istream& in;
        std::ostream& out;
        std::ostream& err;
    };

    std::string read_text(const std::string& path, std::istream& in)
    {
        std::stringstream buffer;
        if (path == "-") {
            buffer << in.rdbuf();
            return buffer.str();
        }
        std::ifstream file(path, std::ios::binary);
        if (!file)
            throw InputError("cannot open '" + path + "'");
        buffer << file.rdbuf();
        return buffer.str();
    }

    void write_text(const std::string& path, const std::string& text)
    {
        std::ofstream file(path, std::ios::binary);
        if (!file)
            throw InputError("cannot write '" + path + "'");
        file << text;
    }

    std::string resolve_format(const std::string& format, const std::string& path)
    {
        if (format != "auto")
            return format;
        return path.size() >= 3 && path.ends_with(".g6") ? "g6" : "el";
    }

    std::vector<Multigraph> load_graphs(const std::string& path, const std::string& format, std::istream& in)
    {
        auto text = read_text(path, in);
        try {
            if (resolve_format(format, path) == "g6")
                return read_graph6_file(text);
            return {read_edge_list(text)};
        } catch (const std::invalid_argument& ex) {
            throw InputError(path + ": " + ex.what());
        } catch (const std::out_of_range& ex) {
            throw InputError(path + ": " + ex.what());
        }
    }

    Multigraph load_one(const std::string& path, const std::string& format, std::istream& in)
    {
        auto graphs = load_graphs(path, format, in);
        if (graphs.size() != 1)
            throw InputError(path + ": expected exactly one graph, found " + std::to_string(graphs.size()));
        return std::move(graphs.front());
    }

    Json verdict(const std::string& command, const std::string& input, Json result)
    {
        Json out;
        out["command"] = command;
        out["input"] = input;
        out["result"] = std::move(result);
        out["engine_version"] = std::string(engine_version);
        return out;
    }

    void emit(Io& io, const Json& j) { io.out << j.dump(2) << '\n'; }

    const DpPair& checked(const Multigraph& g, const DpPair& pair)
    {
        if (auto why = dp_pair_violation(g, pair))
            throw ConsistencyError("emitted DP-pair does not verify: " + *why);
        return pair;
    }

    const GoodSubgraphCertificate& checked(const Multigraph& h, const GoodSubgraphCertificate& cert)
    {
        if (auto why = good_certificate_violation(h, cert))
            throw ConsistencyError("emitted good-subgraph certificate does not verify: " + *why);
        return cert;
    }

    const S2Labeling& checked(const Multigraph& g, const S2Labeling& labeling)
    {
        if (!labeling_reproduces(g, labeling))
            throw ConsistencyError("emitted labeling does not rebuild the input graph");
        return labeling;
    }

    LeafMultiplicity parse_alpha(const std::string& text)
    {
        LeafMultiplicity alpha;
        if (text.empty())
            return alpha;
        std::stringstream entries(text);
        std::string entry;
        while (std::getline(entries, entry, ',')) {
            auto colon = entry.find(':');
            if (colon == std::string::npos)
                throw InputError("--alpha entry '" + entry + "' is not leaf:count");
            try {
                std::size_t used = 0;
                auto leaf = std::stoul(entry.substr(0, colon), &used);
                if (used != colon)
                    throw std::invalid_argument("leaf");
                auto rest = entry.substr(colon + 1);
                auto count = std::stoul(rest, &used);
                if (used != rest.size())
                    throw std::invalid_argument("count");
                if (!alpha.emplace(static_cast<Vertex>(leaf), count).second)
                    throw InputError("--alpha lists leaf " + std::to_string(leaf) + " twice");
            } catch (const std::logic_error&) {
                throw InputError("--alpha entry '" + entry + "' is not leaf:count");
            }
        }
        return alpha;
    }

    Json deletion_witness_json(const Multigraph& g, const DeletionWitness& w)
    {
        auto deletion = delete_edge(g, w.edge);
        checked(deletion.graph, w.pair);
        Json out;
        out["deleted_edge"] = edges_json(g, std::vector<EdgeId>{w.edge}).front();
        out["reduced_graph"] = graph_json(deletion.graph);
        out["pair"] = pair_json(deletion.graph, w.pair);
        return out;
    }

    Json reduction_json(const ReductionPlan& plan)
    {
        checked(plan.reduced, plan.pair);
        Json out;
        out["s2_graph"] = graph_json(plan.s2.graph);
        out["removed_edges"] = edges_json(plan.s2.graph, plan.removed_edges);
        out["reduced_graph"] = graph_json(plan.reduced);
        out["pair"] = pair_json(plan.reduced, plan.pair);
        return out;
    }

    // ---- commands -------------------------------------------------------

    int cmd_check(Io& io, const std::string& path, const std::string& format)
    {
        auto g = load_one(path, format, io.in);
        Json r;
        r["n"] = g.vertex_count();
        r["m"] = g.edge_count();
        auto pair = find_dp_pair(g);
        r["dpdp"] = pair.has_value();
        r["pair"] = pair ? pair_json(g, checked(g, *pair)) : Json(nullptr);
        emit(io, verdict("check", path, std::move(r)));
        return computed;
    }

    int cmd_pairs(Io& io, const std::string& path, const std::string& format, std::size_t cap)
    {
        if (cap == 0)
            throw InputError("--cap must be at least 1");
        auto g = load_one(path, format, io.in);
        auto pairs = enumerate_dp_pairs(g, cap);
        Json list = Json::array();
        for (const auto& p : pairs)
            list.push_back(pair_json(g, checked(g, p)));
        Json r;
        r["n"] = g.vertex_count();
        r["m"] = g.edge_count();
        r["cap"] = cap;
        r["count"] = pairs.size();
        r["cap_reached"] = pairs.size() == cap;
        r["pairs"] = std::move(list);
        emit(io, verdict("pairs", path, std::move(r)));
        return computed;
    }

    int cmd_minimal(Io& io, const std::string& path, const std::string& format)
    {
        auto g = load_one(path, format, io.in);
        auto report = classify(g);
        auto witness = report.is_dpdp ? find_deletion_witness(g) : std::nullopt;
        if (report.is_dpdp && report.minimal_by_deletion == witness.has_value())
            throw ConsistencyError("deletion witness disagrees with the minimality verdict");
        Json r;
        r["n"] = g.vertex_count();
        r["m"] = g.edge_count();
        r["dpdp"] = report.is_dpdp;
        r["minimal"] = report.minimal_by_deletion;
        r["witness"] = witness ? deletion_witness_json(g, *witness) : Json(nullptr);
        Json s;
        s["is_2_subdivision"] = report.inversion.has_value();
        if (report.inversion) {
            const auto& lab = checked(g, *report.inversion);
            s["base"] = graph_json(lab.base);
            s["alpha"] = alpha_json(lab.alpha);
            s["canonical_pair"] = pair_json(g, checked(g, canonical_dp_pair(g, lab)));
            s["good_subgraph_in_base"]
                = report.good_subgraph ? certificate_json(lab.base, checked(lab.base, *report.good_subgraph)) : Json(nullptr);
        } else {
            s["base"] = nullptr;
            s["alpha"] = nullptr;
            s["canonical_pair"] = nullptr;
            s["good_subgraph_in_base"] = nullptr;
        }
        s["canonical_pair_unique"] = report.canonical_pair_unique;
        s["exceptional_cycle"] = report.exceptional_cycle;
        s["verdicts_consistent"] = report.verdicts_consistent;
        r["structure"] = std::move(s);
        emit(io, verdict("minimal", path, std::move(r)));
        if (!report.verdicts_consistent) {
            io.err << "dpdp: characterizations of minimality disagree on " << path << '\n';
            return consistency_failure;
        }
        return computed;
    }

    int cmd_s2(Io& io, const std::string& path, const std::string& format, const std::string& alpha_text,
        const std::string& out_path, const std::string& labels_path)
    {
        auto h = load_one(path, format, io.in);
        auto alpha = parse_alpha(alpha_text);
        S2Build built;
        try {
            built = build_s2(h, alpha);
        } catch (const std::invalid_argument& ex) {
            throw InputError(path + ": " + ex.what());
        }
        checked(built.graph, built.labeling);
        auto labels = labeling_json(built.labeling);
        if (!out_path.empty()) {
            bool g6 = out_path.ends_with(".g6");
            write_text(out_path, g6 ? write_graph6(built.graph) + "\n" : write_edge_list(built.graph));
        }
        if (!labels_path.empty())
            write_text(labels_path, labels.dump(2) + "\n");
        Json r;
        r["graph"] = graph_json(built.graph);
        r["labeling"] = std::move(labels);
        r["canonical_pair"] = pair_json(built.graph, checked(built.graph, canonical_dp_pair(built.graph, built.labeling)));
        emit(io, verdict("s2", path, std::move(r)));
        return computed;
    }

    int cmd_invert(Io& io, const std::string& path, const std::string& format)
    {
        auto g = load_one(path, format, io.in);
        auto lab = invert_s2(g);
        Json r;
        r["is_2_subdivision"] = lab.has_value();
        r["labeling"] = lab ? labeling_json(checked(g, *lab)) : Json(nullptr);
        emit(io, verdict("invert", path, std::move(r)));
        return computed;
    }

    int cmd_goodsub(Io& io, const std::string& path, const std::string& format)
    {
        auto h = load_one(path, format, io.in);
        if (has_isolated_vertex(h))
            throw InputError(path + ": good-subgraph search needs a graph without isolated vertices");
        auto cert = find_good_subgraph(h);
        Json r;
        r["found"] = cert.has_value();
        if (cert) {
            r["certificate"] = certificate_json(h, checked(h, *cert));
            r["reduction"] = reduction_json(reduce_via_good_subgraph(h, {}, *cert));
        } else {
            r["certificate"] = nullptr;
            r["reduction"] = nullptr;
        }
        emit(io, verdict("goodsub", path, std::move(r)));
        return computed;
    }

    struct SurveyRow {
        std::size_t n = 0, m = 0;
        bool dpdp = false, minimal = false, s2 = false, good = false;
    };

    int cmd_survey(Io& io, const std::string& path, const std::string& format, const std::string& out_path)
    {
        auto graphs = load_graphs(path, format == "auto" ? "g6" : format, io.in);
        std::vector<SurveyRow> rows(graphs.size());
        parallel_for(graphs.size(), worker_count(), [&](std::size_t i) {
            const auto& g = graphs[i];
            SurveyRow row;
            row.n = g.vertex_count();
            row.m = g.edge_count();
            if (auto pair = find_dp_pair(g)) {
                checked(g, *pair);
                row.dpdp = true;
                row.minimal = is_minimal_by_deletion(g);
            }
            if (auto lab = invert_s2(g)) {
                checked(g, *lab);
                row.s2 = true;
            }
            if (!has_isolated_vertex(g) && g.edge_count() > 0) {
                if (auto cert = find_good_subgraph(g)) {
                    checked(g, *cert);
                    row.good = true;
                }
            }
            rows[i] = row;
        });
        std::ostringstream csv;
        auto b = [](bool x) { return x ? "true" : "false"; };
        csv << "n,m,dpdp,minimal,is_2_subdivision,good_subgraph_found\n";
        for (const auto& r : rows)
            csv << r.n << ',' << r.m << ',' << b(r.dpdp) << ',' << b(r.minimal) << ',' << b(r.s2) << ',' << b(r.good) << '\n';
        if (out_path.empty()) {
            io.out << csv.str();
            return computed;
        }
        write_text(out_path, csv.str());
        Json r;
        r["graphs"] = rows.size();
        r["csv"] = out_path;
        std::size_t dpdp = 0, minimal = 0;
        for (const auto& row : rows) {
            dpdp += row.dpdp;
            minimal += row.minimal;
        }
        r["dpdp_count"] = dpdp;
        r["minimal_count"] = minimal;
        emit(io, verdict("survey", path, std::move(r)));
        return computed;
    }

    int cmd_xcheck(Io& io, const std::string& path, const std::string& format, std::optional<std::size_t> max_edges)
    {
        std::vector<Multigraph> graphs;
        std::string input;
        if (max_edges) {
            if (!path.empty())
                throw InputError("give either --max-edges or an input file, not both");
            try {
                graphs = enumerate_connected_multigraphs(*max_edges);
            } catch (const std::invalid_argument& ex) {
                throw InputError(ex.what());
            }
            input = "catalog:max_edges=" + std::to_string(*max_edges);
        } else {
            if (path.empty())
                throw InputError("xcheck needs --max-edges K or an input file");
            graphs = load_graphs(path, format == "auto" ? "g6" : format, io.in);
            input = path;
        }
        struct Outcome {
            bool skipped = false;
            bool minimal = false;
            std::vector<std::string> failures;
        };
        std::vector<Outcome> outcomes(graphs.size());
        parallel_for(graphs.size(), worker_count(), [&](std::size_t i) {
            const auto& h = graphs[i];
            Outcome o;
            if (h.edge_count() == 0 || has_isolated_vertex(h) || !is_connected(h)) {
                o.skipped = true;
            } else {
                auto x = xcheck(h);
                o.minimal = x.minimal_by_deletion;
                o.failures = x.failures;
            }
            outcomes[i] = std::move(o);
        });
        std::size_t checked_count = 0, skipped = 0, minimal = 0;
        Json disagreements = Json::array();
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const auto& o = outcomes[i];
            if (o.skipped) {
                ++skipped;
                continue;
            }
            ++checked_count;
            minimal += o.minimal;
            if (!o.failures.empty()) {
                Json d;
                d["index"] = i;
                d["graph"] = graph_json(graphs[i]);
                d["failures"] = o.failures;
                disagreements.push_back(std::move(d));
            }
        }
        bool consistent = disagreements.empty();
        Json r;
        r["graphs_checked"] = checked_count;
        r["graphs_skipped"] = skipped;
        r["minimal_count"] = minimal;
        r["consistent"] = consistent;
        r["disagreements"] = std::move(disagreements);
        emit(io, verdict("xcheck", input, std::move(r)));
        if (!consistent) {
            io.err << "dpdp: xcheck found disagreements between the characterizations\n";
            return consistency_failure;
        }
        return computed;
    }

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Io io{in, out, err};
    CLI::App app{"Exact tools for DP-pairs, 2-subdivision graphs and good subgraphs", "dpdp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(engine_version));

    std::string path, format = "auto", alpha, out_path, labels_path;
    std::size_t cap = 16;
    std::optional<std::size_t> max_edges;
    const std::vector<std::string> formats{"auto", "g6", "el"};
    auto add_input = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("file", path, "Input graph file, '-' for stdin");
        if (required)
            opt->required();
        sub->add_option("--format", format, "Input format: g6, el, or auto (by extension)")
            ->check(CLI::IsMember(formats));
    };

    auto* check = app.add_subcommand("check", "Decide whether the graph has a DP-pair");
    add_input(check, true);
    auto* pairs = app.add_subcommand("pairs", "List DP-pairs, up to --cap");
    add_input(pairs, true);
    pairs->add_option("--cap", cap, "Maximum number of pairs");
    auto* minimal = app.add_subcommand("minimal", "Decide minimality of a DPDP graph");
    add_input(minimal, true);
    auto* s2 = app.add_subcommand("s2", "Build the 2-subdivision graph");
    add_input(s2, true);
    s2->add_option("--alpha", alpha, "Leaf multiplicities as leaf:count,...");
    s2->add_option("--out", out_path, "Write the graph here (.g6 for graph6, else edge list)");
    s2->add_option("--labels", labels_path, "Write the provenance labeling JSON here");
    auto* invert = app.add_subcommand("invert", "Recover (H, alpha) from a 2-subdivision graph");
    add_input(invert, true);
    auto* goodsub = app.add_subcommand("goodsub", "Search a good subgraph");
    add_input(goodsub, true);
    auto* survey = app.add_subcommand("survey", "Tabulate properties of every graph in a file");
    add_input(survey, true);
    survey->add_option("--out", out_path, "CSV destination (default: stdout)");
    auto* xcheck_cmd = app.add_subcommand("xcheck", "Cross-check the characterizations of minimality");
    add_input(xcheck_cmd, false);
    xcheck_cmd->add_option("--max-edges", max_edges, "Sweep catalog multigraphs with at most K edges");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return computed;
    } catch (const CLI::CallForVersion&) {
        out << engine_version << '\n';
        return computed;
    } catch (const CLI::ParseError& ex) {
        err << "dpdp: " << ex.what() << '\n';
        return input_error;
    }

    try {
        if (check->parsed())
            return cmd_check(io, path, format);
        if (pairs->parsed())
            return cmd_pairs(io, path, format, cap);
        if (minimal->parsed())
            return cmd_minimal(io, path, format);
        if (s2->parsed())
            return cmd_s2(io, path, format, alpha, out_path, labels_path);
        if (invert->parsed())
            return cmd_invert(io, path, format);
        if (goodsub->parsed())
            return cmd_goodsub(io, path, format);
        if (survey->parsed())
            return cmd_survey(io, path, format, out_path);
        if (xcheck_cmd->parsed())
            return cmd_xcheck(io, path, format, max_edges);
    } catch (const InputError& ex) {
        err << "dpdp: " << ex.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& ex) {
        err << "dpdp: " << ex.what() << '\n';
        return input_error;
    } catch (const std::out_of_range& ex) {
        err << "dpdp: " << ex.what() << '\n';
        return input_error;
    } catch (const ConsistencyError& ex) {
        err << "dpdp: consistency failure: " << ex.what() << '\n';
        return consistency_failure;
    } catch (const std::logic_error& ex) {
        err << "dpdp: consistency failure: " << ex.what() << '\n';
        return consistency_failure;
    }
    return input_error;
}

} // namespace dpdp::cli
