#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "powercolor/cli.hpp"
#include "powercolor/formats.hpp"
#include "powercolor/generators.hpp"

using namespace powercolor;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "powercolor-cli-tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("build writes the three files and prints the count identities") {
    fs::path dir = scratch_dir();
    std::string prefix = (dir / "g32").string();
    CliResult r = run({"build", "--q", "3", "--k", "2", "--out-prefix", prefix});
    CHECK(r.code == 0);
    CHECK(r.out.find("vertices 57") != std::string::npos);
    CHECK(r.out.find("parts 19") != std::string::npos);
    CHECK(r.out.find("max-degree 3") != std::string::npos);
    CHECK(r.out.find("connected yes") != std::string::npos);
    CHECK(fs::exists(prefix + ".graph"));
    CHECK(fs::exists(prefix + ".parts"));
    CHECK(fs::exists(prefix + ".labels"));

    Graph g = read_graph_file(prefix + ".graph");
    CHECK(g.vertex_count() == 57);
    CHECK(g.edge_count() == 72);
}

TEST_CASE("build rejects a non-prime-power order with a usage error") {
    CliResult r = run({"build", "--q", "6", "--k", "2", "--out-prefix",
                       (scratch_dir() / "bad").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("prime power") != std::string::npos);
}

TEST_CASE("build runs over the extension field GF(4)") {
    fs::path dir = scratch_dir();
    CliResult r = run({"build", "--q", "4", "--k", "2", "--out-prefix",
                       (dir / "g42").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("vertices 132") != std::string::npos);  // 4^3*2+4
    CHECK(r.out.find("parts 33") != std::string::npos);      // 2*16+1
}

TEST_CASE("verify all on a small construction passes") {
    CliResult r = run({"verify", "all", "--q", "2", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify lemma1 from files; corrupted parts fail with exit 1") {
    fs::path dir = scratch_dir();
    std::string prefix = (dir / "v22").string();
    REQUIRE(run({"build", "--q", "2", "--k", "2", "--out-prefix", prefix}).code == 0);

    CliResult good = run({"verify", "lemma1", "--graph", prefix + ".graph", "--parts",
                          prefix + ".parts", "--k", "2"});
    CHECK(good.code == 0);

    // corrupt the parts file: swap two vertices between parts so that a part
    // holds a nearby pair
    std::vector<Part> parts = read_parts_file(prefix + ".parts");
    Graph g = read_graph_file(prefix + ".graph");
    int u = parts[0].vertices[0];
    int neighbor = g.neighbors(u)[0];
    // place u's neighbor into u's part
    for (auto& part : parts)
        for (auto& v : part.vertices)
            if (v == neighbor) v = parts[0].vertices[1];
    parts[0].vertices[1] = neighbor;
    std::string corrupted = (dir / "corrupted.parts").string();
    write_parts_file(corrupted, parts);

    CliResult bad = run({"verify", "lemma1", "--graph", prefix + ".graph", "--parts",
                         corrupted, "--k", "2"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("witness") != std::string::npos);
}

TEST_CASE("verify with a missing file exits 2") {
    CliResult r = run({"verify", "lemma1", "--graph", "/nonexistent/g.graph", "--parts",
                       "/nonexistent/g.parts", "--k", "2"});
    CHECK(r.code == 2);
}

TEST_CASE("color and choose round trip through files") {
    fs::path dir = scratch_dir();
    std::string petersen = (dir / "petersen.graph").string();
    write_graph_file(petersen, petersen_graph());
    CliResult color = run({"color", "--in", petersen});
    CHECK(color.code == 0);
    CHECK(color.out == "3\n");

    std::string k24 = (dir / "k24.graph").string();
    write_graph_file(k24, complete_bipartite(2, 4));
    std::string witness = (dir / "k24.lists").string();
    CliResult choose = run({"choose", "--in", k24, "--t", "2", "--witness-out", witness});
    CHECK(choose.code == 0);
    CHECK(choose.out.find("not-choosable") != std::string::npos);
    REQUIRE(fs::exists(witness));

    CliResult check = run({"choose", "--in", k24, "--check-witness", witness});
    CHECK(check.code == 0);
    CHECK(check.out.find("witness confirmed") != std::string::npos);
    CHECK(check.out.find("proper-colorings 0") != std::string::npos);

    // a witness that admits a coloring is refuted with exit 1
    std::string fake = (dir / "fake.lists").string();
    write_lists_file(fake, std::vector<std::vector<int>>(6, {0, 1}));
    CliResult refute = run({"choose", "--in", k24, "--check-witness", fake});
    CHECK(refute.code == 1);
    CHECK(refute.out.find("witness refuted") != std::string::npos);
}

TEST_CASE("power subcommand composes") {
    fs::path dir = scratch_dir();
    std::string prefix = (dir / "p22").string();
    REQUIRE(run({"build", "--q", "2", "--k", "2", "--out-prefix", prefix}).code == 0);

    std::string g8 = (dir / "g8.graph").string();
    std::string g4 = (dir / "g4.graph").string();
    std::string g4sq = (dir / "g4sq.graph").string();
    CHECK(run({"power", "--in", prefix + ".graph", "--k", "8", "--out", g8}).code == 0);
    CHECK(run({"power", "--in", prefix + ".graph", "--k", "4", "--out", g4}).code == 0);
    CHECK(run({"power", "--in", g4, "--k", "2", "--out", g4sq}).code == 0);
    CHECK(slurp(g8) == slurp(g4sq));
}

TEST_CASE("verify upper on a graph file") {
    fs::path dir = scratch_dir();
    std::string c7 = (dir / "c7.graph").string();
    write_graph_file(c7, cycle_graph(7));
    CHECK(run({"verify", "upper", "--graph", c7, "--k", "3"}).code == 0);
    // even k is a usage error, not a check failure
    CHECK(run({"verify", "upper", "--graph", c7, "--k", "4"}).code == 2);
}

TEST_CASE("verify upper and fk over seeded random graphs") {
    CliResult upper = run({"verify", "upper", "--random", "4", "--k", "3", "--max-n", "16"});
    CHECK(upper.code == 0);
    CliResult fk = run({"verify", "fk", "--random", "4", "--k", "2", "--max-n", "14"});
    CHECK(fk.code == 0);
    // same seed, same report
    CliResult fk2 = run({"verify", "fk", "--random", "4", "--k", "2", "--max-n", "14",
                         "--format", "json"});
    CliResult fk3 = run({"verify", "fk", "--random", "4", "--k", "2", "--max-n", "14",
                         "--format", "json"});
    CHECK(fk2.out == fk3.out);
}

TEST_CASE("verify upper on a construction at an odd power") {
    CliResult r = run({"verify", "upper", "--q", "2", "--k", "2", "--kpow", "3"});
    CHECK(r.code == 0);
}

TEST_CASE("--out writes the report to a file as well") {
    fs::path dir = scratch_dir();
    std::string path = (dir / "report.json").string();
    CliResult r = run({"report", "--q", "2", "--k", "2", "--format", "json", "--out", path});
    CHECK(r.code == 0);
    CHECK(slurp(path) == r.out);
}

TEST_CASE("report JSON is deterministic and carries schema and seed") {
    CliResult a = run({"report", "--q", "2", "--k", "2", "--format", "json"});
    CliResult b = run({"report", "--q", "2", "--k", "2", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"schema\": 1") != std::string::npos);
    CHECK(a.out.find("\"seed\": 12648430") != std::string::npos);  // 0xC0FFEE
    CHECK(a.out.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(a.out.find("\"elapsed_ms\": 0.0") != std::string::npos);
}

TEST_CASE("plane subcommand with dump") {
    fs::path dir = scratch_dir();
    std::string dump = (dir / "plane3.txt").string();
    CliResult r = run({"plane", "--q", "3", "--dump", dump});
    CHECK(r.code == 0);
    CHECK(fs::exists(dump));
    CHECK(slurp(dump).find("line 0 0 :") != std::string::npos);
}

TEST_CASE("help and usage errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "nonsense", "--q", "2", "--k", "2"}).code == 2);
}
