#include "doctest.h"

#include "oracles.hpp"

#include "netmx/cli.hpp"
#include "netmx/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace netmx;
namespace fs = std::filesystem;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result netmx_run(std::vector<std::string> args)
{
    args.insert(args.begin(), "netmx");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

/// Fresh scratch directory under the system temp dir.
fs::path scratch(const std::string& name)
{
    const fs::path p = fs::temp_directory_path() / ("netmx_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

void write_chord(const fs::path& dir, const std::string& trajectories = "A B C D\n")
{
    io::write_text(dir / "g.txt", "nodes: A B C D\nA B\nB C\nC D\nB D\n");
    io::write_text(dir / "t.txt", trajectories);
}

std::size_t file_count(const fs::path& dir)
{
    return static_cast<std::size_t>(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}));
}

} // namespace

TEST_CASE("usage errors exit 2")
{
    CHECK(netmx_run({}).code == cli::exit_usage);
    CHECK(netmx_run({"frobnicate"}).code == cli::exit_usage);
    CHECK(netmx_run({"compute"}).code == cli::exit_usage);
    CHECK(netmx_run({"--format", "xml", "catalogue"}).code == cli::exit_usage);

    const fs::path dir = scratch("usage");
    const Result r = netmx_run({"--out", (dir / "o").string(), "gen", "--n", "0"});
    CHECK(r.code == cli::exit_usage);
    CHECK_FALSE(r.err.empty());
    CHECK_FALSE(fs::exists(dir / "o"));

    CHECK(netmx_run({"--out", (dir / "o").string(), "hunt", "NO_SUCH_ID"}).code == cli::exit_usage);
    CHECK(netmx_run({"--version"}).code == cli::exit_ok);
}

TEST_CASE("compute writes every matrix")
{
    const fs::path dir = scratch("compute");
    write_chord(dir);
    const fs::path out = dir / "csv";
    const Result r = netmx_run({"--quiet", "--out", out.string(), "compute", (dir / "g.txt").string(), (dir / "t.txt").string()});
    REQUIRE(r.code == cli::exit_ok);
    CHECK(r.out.empty());
    // 15 matrices, the summary and the manifest.
    CHECK(file_count(out) == 17);
    CHECK(fs::exists(out / "summary.json"));
    CHECK(fs::exists(out / "manifest.json"));

    std::ifstream tf(out / "T.csv");
    const io::LabelledMatrix t = io::matrix_from_csv(tf, "T.csv");
    CHECK(t.matrix(oracle::B, oracle::D) == ExtendedCount(1));
    std::ifstream ef(out / "Ehat.csv");
    CHECK(io::matrix_from_csv(ef, "Ehat.csv").matrix(oracle::B, oracle::D) == ExtendedCount(0));

    const fs::path jout = dir / "json";
    REQUIRE(netmx_run({"--quiet", "--format", "json", "--out", jout.string(), "compute", (dir / "g.txt").string(),
                       (dir / "t.txt").string()})
                .code == cli::exit_ok);
    const auto l = io::matrix_from_json(io::json::parse(io::read_text(jout / "L.json")));
    CHECK(l.matrix(oracle::B, oracle::D) == ExtendedCount(1));
}

TEST_CASE("compute accepts an empty trajectory file")
{
    const fs::path dir = scratch("empty");
    write_chord(dir, "");
    const fs::path out = dir / "o";
    CHECK(netmx_run({"--quiet", "--out", out.string(), "compute", (dir / "g.txt").string(), (dir / "t.txt").string()})
              .code == cli::exit_ok);
    const auto summary = io::json::parse(io::read_text(out / "summary.json"));
    CHECK(summary.at("trajectories") == 0);
    CHECK(summary.at("fully_utilized") == false);
}

TEST_CASE("bad input leaves no partial output")
{
    const fs::path dir = scratch("bad");
    write_chord(dir, "A B\nA C\n");
    const fs::path out = dir / "o";
    const Result r = netmx_run({"--out", out.string(), "compute", (dir / "g.txt").string(), (dir / "t.txt").string()});
    CHECK(r.code == cli::exit_usage);
    CHECK(r.err.find(":2") != std::string::npos);
    CHECK_FALSE(fs::exists(out));

    CHECK(netmx_run({"--out", out.string(), "compute", (dir / "missing.txt").string(), (dir / "t.txt").string()}).code ==
          cli::exit_usage);
}

TEST_CASE("audit reports the chord counterexample and exits 0")
{
    const fs::path dir = scratch("audit");
    write_chord(dir);
    const fs::path out = dir / "o";
    const Result r = netmx_run({"--out", out.string(), "audit", (dir / "g.txt").string(), (dir / "t.txt").string()});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("X.EHAT_L_NEQ_L") != std::string::npos);
    const auto report = io::json::parse(io::read_text(out / "audit.json"));
    CHECK(report.at("sound") == true);
}

TEST_CASE("audit exits 1 when a universal identity fails")
{
    const fs::path dir = scratch("unsound");
    write_chord(dir);
    // A deliberately false identity registered as universal.
    io::json cat = io::json::array();
    cat.push_back({{"id", "USER.BAD"},
                   {"class", "UNIVERSAL"},
                   {"lhs", "Ehat * L"},
                   {"relation", "="},
                   {"rhs", "L"},
                   {"paper_section", "user"},
                   {"quote", "Ehat * L = L"}});
    io::write_text(dir / "cat.json", cat.dump());
    const Result r = netmx_run({"--quiet", "--out", (dir / "o").string(), "audit", (dir / "g.txt").string(),
                                (dir / "t.txt").string(), "--catalogue", (dir / "cat.json").string()});
    CHECK(r.code == cli::exit_unsound);

    io::write_text(dir / "broken.json", "[{");
    CHECK(netmx_run({"--quiet", "--out", (dir / "o2").string(), "audit", (dir / "g.txt").string(),
                     (dir / "t.txt").string(), "--catalogue", (dir / "broken.json").string()})
              .code == cli::exit_usage);
}

TEST_CASE("gen output round-trips through compute")
{
    const fs::path dir = scratch("gen");
    const Result r = netmx_run({"--quiet", "--seed", "17", "--out", (dir / "g").string(), "gen", "--n", "7",
                                "--edge-prob", "0.4", "--max-traj", "12", "--allow-duplicates"});
    REQUIRE(r.code == cli::exit_ok);

    GenConfig cfg;
    cfg.n = 7;
    cfg.edge_prob = 0.4;
    cfg.max_traj = 12;
    cfg.max_len = 4;
    cfg.allow_duplicates = true;
    cfg.seed = 17;
    const Dataset expected = gen_dataset(cfg);
    const Dataset loaded = io::load_dataset(dir / "g" / "graph.txt", dir / "g" / "trajectories.txt");
    CHECK(loaded == expected);

    CHECK(netmx_run({"--quiet", "--out", (dir / "c").string(), "compute", (dir / "g" / "graph.txt").string(),
                     (dir / "g" / "trajectories.txt").string()})
              .code == cli::exit_ok);

    const auto manifest = io::json::parse(io::read_text(dir / "g" / "manifest.json"));
    CHECK(manifest.at("seed") == 17);
    CHECK(io::gen_config_from_json(manifest.at("config")) == cfg);
}

TEST_CASE("gen reads a JSON config and flags override it")
{
    const fs::path dir = scratch("genconfig");
    io::write_text(dir / "cfg.json", R"({"n": 5, "edge-prob": 0.6, "max_traj": 4, "max_len": 3, "seed": 9})");
    REQUIRE(netmx_run({"--quiet", "--out", (dir / "a").string(), "gen", "--config", (dir / "cfg.json").string(),
                       "--max-traj", "6"})
                .code == cli::exit_ok);
    const auto manifest = io::json::parse(io::read_text(dir / "a" / "manifest.json"));
    const GenConfig cfg = io::gen_config_from_json(manifest.at("config"));
    CHECK(cfg.n == 5);
    CHECK(cfg.edge_prob == 0.6);
    CHECK(cfg.max_traj == 6);
    CHECK(cfg.max_len == 3);
    CHECK(cfg.seed == 9);

    io::write_text(dir / "bad.json", R"({"n": 3, "max_len": 9})");
    CHECK(netmx_run({"--quiet", "--out", (dir / "b").string(), "gen", "--config", (dir / "bad.json").string()}).code ==
          cli::exit_usage);
}

TEST_CASE("hunt writes the falsifier or says none was found")
{
    const fs::path dir = scratch("hunt");
    const Result found = netmx_run({"--out", (dir / "x").string(), "hunt", "X.EHAT_L_NEQ_L", "--budget", "1000"});
    CHECK(found.code == cli::exit_ok);
    CHECK(found.out.find("counterexample found") != std::string::npos);
    CHECK(fs::exists(dir / "x" / "graph.txt"));
    const auto report = io::json::parse(io::read_text(dir / "x" / "hunt.json"));
    CHECK(report.at("found") == true);
    const Dataset falsifier = io::load_dataset(dir / "x" / "graph.txt", dir / "x" / "trajectories.txt");
    CHECK_FALSE(audit_dataset(falsifier).verdict("X.EHAT_L_NEQ_L").holds);

    const Result none = netmx_run({"--out", (dir / "me").string(), "hunt", "ME.A_EHAT", "--budget", "1000"});
    CHECK(none.code == cli::exit_ok);
    CHECK(none.out.find("no counterexample found") != std::string::npos);
    CHECK_FALSE(fs::exists(dir / "me" / "graph.txt"));
}

TEST_CASE("catalogue export parses back")
{
    const fs::path dir = scratch("catalogue");
    REQUIRE(netmx_run({"--quiet", "--out", dir.string(), "catalogue"}).code == cli::exit_ok);
    const auto cat = io::catalogue_from_json(io::json::parse(io::read_text(dir / "catalogue.json")));
    CHECK(cat.size() == list_identities().size());
}
