#include "netmx/cli.hpp"

#include "netmx/audit.hpp"
#include "netmx/io.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <optional>

namespace netmx::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

struct GlobalOptions
{
    std::string format = "csv";
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool quiet = false;
};

/// Files produced by a subcommand, written only after every one of them
/// has been computed.
struct OutputSet
{
    std::vector<std::pair<std::string, std::string>> files;

    void add(std::string name, std::string text) { files.emplace_back(std::move(name), std::move(text)); }

    void commit(const GlobalOptions& g, const std::string& subcommand, const std::vector<std::string>& inputs,
                json extra = json::object())
    {
        std::vector<std::string> names;
        for (const auto& f : files)
            names.push_back(f.first);
        names.push_back("manifest.json");

        json manifest{{"tool", "netmx"},
                      {"version", tool_version},
                      {"subcommand", subcommand},
                      {"inputs", inputs},
                      {"seed", g.seed},
                      {"output_dir", g.out_dir},
                      {"files", names}};
        for (auto& [k, v] : extra.items())
            manifest[k] = v;

        const fs::path dir(g.out_dir);
        fs::create_directories(dir);
        for (const auto& [name, text] : files)
            io::write_text(dir / name, text);
        io::write_text(dir / "manifest.json", manifest.dump(2) + "\n");
    }
};

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

// compute

int cmd_compute(const GlobalOptions& g, const std::string& graph_path, const std::string& traj_path, std::ostream& out)
{
    if (g.format != "csv" && g.format != "json")
        throw ConfigError("--format must be csv or json");

    const Dataset d = io::load_dataset(graph_path, traj_path);
    const StructureBundle s = build_structure(d.graph());
    const UtilizationBundle u = build_utilization(d, s);
    const auto& labels = d.graph().labels();

    const std::vector<std::pair<std::string, CountMatrix>> matrices{
        {"A", s.A},       {"P", s.P},       {"Phat", s.Phat}, {"E", s.E},       {"Ehat", s.Ehat},
        {"F", u.F},       {"D", u.D},       {"L", u.L},       {"T", u.T},       {"Tc", u.Tc},
        {"Fhat", u.Fhat}, {"Dhat", u.Dhat}, {"Lhat", u.Lhat}, {"That", u.That}, {"Tchat", u.Tchat},
    };

    OutputSet files;
    for (const auto& [name, m] : matrices) {
        if (g.format == "csv")
            files.add(name + ".csv", io::matrix_to_csv(m, labels));
        else
            files.add(name + ".json", dump(io::matrix_to_json(m, labels)));
    }

    const bool full = is_fully_utilized(u, s);
    const json summary{{"n", d.graph().n()},
                       {"edges", d.graph().edge_count()},
                       {"trajectories", d.trajectories().size()},
                       {"fully_utilized", full}};
    files.add("summary.json", dump(summary));
    files.commit(g, "compute", {graph_path, traj_path}, json{{"format", g.format}});

    if (!g.quiet)
        out << "wrote " << matrices.size() << " matrices to " << g.out_dir << " (n=" << d.graph().n()
            << ", fully_utilized=" << (full ? "true" : "false") << ")\n";
    return exit_ok;
}

// audit

int cmd_audit(const GlobalOptions& g, const std::string& graph_path, const std::string& traj_path,
              const std::string& catalogue_path, std::ostream& out)
{
    const Dataset d = io::load_dataset(graph_path, traj_path);

    std::vector<IdentitySpec> catalogue = list_identities();
    std::vector<std::string> inputs{graph_path, traj_path};
    if (!catalogue_path.empty()) {
        try {
            catalogue = io::catalogue_from_json(json::parse(io::read_text(catalogue_path)));
        } catch (const json::exception& e) {
            throw ParseError(catalogue_path, 0, e.what());
        }
        inputs.push_back(catalogue_path);
    }

    const AuditReport report = audit_dataset(d, catalogue, fs::path(graph_path).filename().string());
    const auto& labels = d.graph().labels();
    const std::string table = io::report_table(report, labels);

    OutputSet files;
    files.add("audit.json", dump(io::report_to_json(report, labels)));
    files.add("audit.txt", table);
    files.commit(g, "audit", inputs);

    if (!g.quiet)
        out << table;
    return report.sound() ? exit_ok : exit_unsound;
}

// gen

struct GenFlags
{
    GenConfig cfg;
    std::string config_path;
    bool fully_utilized = false;
    bool max_len_given = false;
};

int cmd_gen(const GlobalOptions& g, GenFlags flags, const CLI::App& sub, std::ostream& out)
{
    GenConfig cfg = flags.cfg;
    std::vector<std::string> inputs;
    if (!flags.config_path.empty()) {
        json j;
        try {
            j = json::parse(io::read_text(flags.config_path));
        } catch (const json::exception& e) {
            throw ParseError(flags.config_path, 0, e.what());
        }
        // File values form the base; explicit flags override them.
        GenConfig from_file = io::gen_config_from_json(j, GenConfig{});
        if (sub.count("--n") == 0)
            cfg.n = from_file.n;
        if (sub.count("--edge-prob") == 0)
            cfg.edge_prob = from_file.edge_prob;
        if (sub.count("--max-traj") == 0)
            cfg.max_traj = from_file.max_traj;
        if (sub.count("--max-len") == 0 && (j.contains("max_len") || j.contains("max-len"))) {
            cfg.max_len = from_file.max_len;
            flags.max_len_given = true;
        }
        if (sub.count("--allow-duplicates") == 0)
            cfg.allow_duplicates = from_file.allow_duplicates;
        if (j.contains("seed"))
            cfg.seed = from_file.seed;
        inputs.push_back(flags.config_path);
    }
    if (!flags.max_len_given)
        cfg.max_len = std::min<std::size_t>(4, cfg.n);

    const Dataset d = flags.fully_utilized ? gen_fully_utilized(cfg) : gen_dataset(cfg);

    OutputSet files;
    files.add("graph.txt", io::write_graph(d.graph()));
    files.add("trajectories.txt", io::write_trajectories(d));
    GlobalOptions effective = g;
    effective.seed = cfg.seed;
    files.commit(effective, "gen", inputs,
                 json{{"config", io::gen_config_to_json(cfg)}, {"fully_utilized", flags.fully_utilized}});

    if (!g.quiet)
        out << "generated n=" << d.graph().n() << " edges=" << d.graph().edge_count()
            << " trajectories=" << d.trajectories().size() << " into " << g.out_dir << "\n";
    return exit_ok;
}

// hunt

int cmd_hunt(const GlobalOptions& g, const std::string& id, SearchOptions opts, std::ostream& out)
{
    const IdentitySpec& spec = find_identity(id);
    opts.seed = g.seed;
    const auto found = search_counterexample(spec, opts);

    json report{{"id", spec.id},
                {"class", class_name(spec.cls)},
                {"identity", spec.to_string()},
                {"budget", opts.budget},
                {"seed", opts.seed},
                {"allow_duplicates", opts.allow_duplicates},
                {"max_nodes", opts.max_nodes},
                {"max_trajectories", opts.max_trajectories},
                {"found", found.has_value()}};

    OutputSet files;
    if (found) {
        const auto& labels = found->dataset.graph().labels();
        const auto& w = *found->verdict.witness;
        report["instance"] = found->instance;
        report["witness"] = json{{"row_label", labels[w.cell.row]},
                                 {"col_label", labels[w.cell.col]},
                                 {"lhs", w.lhs.is_inf() ? json(nullptr) : json(w.lhs.value())},
                                 {"rhs", w.rhs.is_inf() ? json(nullptr) : json(w.rhs.value())}};
        files.add("graph.txt", io::write_graph(found->dataset.graph()));
        files.add("trajectories.txt", io::write_trajectories(found->dataset));
    }
    files.add("hunt.json", dump(report));
    files.commit(g, "hunt", {}, json{{"identity", spec.id}, {"budget", opts.budget}});

    if (!g.quiet) {
        if (found) {
            const auto& labels = found->dataset.graph().labels();
            const auto& w = *found->verdict.witness;
            out << spec.id << ": counterexample found at instance " << found->instance << "; witness ("
                << labels[w.cell.row] << "," << labels[w.cell.col] << ") lhs=" << w.lhs << " rhs=" << w.rhs << "\n";
        } else {
            out << spec.id << ": no counterexample found in " << opts.budget << " instances\n";
        }
    }
    return exit_ok;
}

int cmd_catalogue(const GlobalOptions& g, std::ostream& out)
{
    OutputSet files;
    files.add("catalogue.json", dump(io::catalogue_to_json(list_identities())));
    files.commit(g, "catalogue", {});
    if (!g.quiet)
        for (const auto& s : list_identities())
            out << s.id << "  [" << class_name(s.cls) << "]  " << s.to_string() << "\n";
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Network structure and utilization matrices with Hadamard identity auditing", "netmx"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    GlobalOptions g;
    app.add_option("--format", g.format, "Matrix output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out_dir, "Output directory");
    app.add_option("--seed", g.seed, "Random seed");
    app.add_flag("--quiet", g.quiet, "Suppress console output");

    std::string graph_path;
    std::string traj_path;
    std::string catalogue_path;

    auto* compute = app.add_subcommand("compute", "Write every structure and utilization matrix");
    compute->add_option("graph", graph_path, "Graph edge-list file")->required();
    compute->add_option("trajectories", traj_path, "Trajectory file")->required();

    auto* audit = app.add_subcommand("audit", "Evaluate the identity catalogue on a dataset");
    audit->add_option("graph", graph_path, "Graph edge-list file")->required();
    audit->add_option("trajectories", traj_path, "Trajectory file")->required();
    audit->add_option("--catalogue", catalogue_path, "Catalogue JSON replacing the built-in one");

    GenFlags gen_flags;
    auto* gen = app.add_subcommand("gen", "Generate a random dataset");
    gen->add_option("--n", gen_flags.cfg.n, "Node count");
    gen->add_option("--edge-prob", gen_flags.cfg.edge_prob, "Edge probability");
    gen->add_option("--max-traj", gen_flags.cfg.max_traj, "Number of random trajectories to draw");
    gen->add_option("--max-len", gen_flags.cfg.max_len, "Maximum trajectory length in nodes");
    gen->add_flag("--allow-duplicates", gen_flags.cfg.allow_duplicates, "Emit repeated trajectories");
    gen->add_flag("--fully-utilized", gen_flags.fully_utilized, "Cover every reachable pair first");
    gen->add_option("--config", gen_flags.config_path, "JSON generator config");

    std::string hunt_id;
    SearchOptions search;
    bool no_duplicates = false;
    auto* hunt = app.add_subcommand("hunt", "Search random datasets for a counterexample");
    hunt->add_option("identity", hunt_id, "Identity id")->required();
    hunt->add_option("--budget", search.budget, "Number of random instances");
    hunt->add_option("--max-nodes", search.max_nodes, "Largest generated graph");
    hunt->add_option("--max-trajectories", search.max_trajectories, "Most trajectories per instance");
    hunt->add_flag("--no-duplicates", no_duplicates, "Disable repeated trajectories");

    auto* catalogue = app.add_subcommand("catalogue", "Export the identity catalogue");

    for (auto* sub : {compute, audit, gen, hunt, catalogue})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << tool_version << "\n";
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "netmx: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        gen_flags.max_len_given = gen->count("--max-len") > 0;
        if (*compute)
            return cmd_compute(g, graph_path, traj_path, out);
        if (*audit)
            return cmd_audit(g, graph_path, traj_path, catalogue_path, out);
        if (*gen) {
            gen_flags.cfg.seed = g.seed;
            return cmd_gen(g, gen_flags, *gen, out);
        }
        if (*hunt) {
            search.allow_duplicates = !no_duplicates;
            return cmd_hunt(g, hunt_id, search, out);
        }
        if (*catalogue)
            return cmd_catalogue(g, out);
    } catch (const CrossCheckFailure& e) {
        err << "netmx: internal consistency failure: " << e.what() << "\n";
        return exit_unsound;
    } catch (const Error& e) {
        err << "netmx: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "netmx: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace netmx::cli
