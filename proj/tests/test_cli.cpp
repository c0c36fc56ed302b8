#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "support/run_cli.hpp"
#include "topoidx/edgelist.hpp"
#include "topoidx/graph.hpp"

using nlohmann::json;

namespace {

// Scratch file that removes itself; contents written on construction.
struct TempFile {
    explicit TempFile(const std::string& stem, const std::string& text = "") {
        path = (std::filesystem::temp_directory_path() / ("topoidx_test_" + stem)).string();
        if (!text.empty()) cli::write_file(path, text);
    }
    ~TempFile() { std::remove(path.c_str()); }
    std::string path;
};

std::string sun_edge_list(std::int64_t k) { return topoidx::to_edge_list(topoidx::sun(k)); }

}  // namespace

TEST_CASE("gen writes canonical edge lists") {
    const auto path2 = cli::run("gen --family path --n 2");
    CHECK(path2.exit_code == 0);
    CHECK(path2.output == "2 1\n0 1\n");

    const auto sun4 = cli::run("gen --family sun --k 4");
    CHECK(sun4.exit_code == 0);
    CHECK(sun4.output.substr(0, 5) == "8 14\n");
    CHECK(std::count(sun4.output.begin(), sun4.output.end(), '\n') == 15);

    SECTION("to a file") {
        TempFile file("gen_sun5.edges");
        const auto run = cli::run("gen --family sun --k 5 -o " + file.path);
        CHECK(run.exit_code == 0);
        CHECK(run.output.empty());
        const topoidx::Graph g = topoidx::read_edge_list_file(file.path);
        CHECK(g.vertex_count() == 10);
        CHECK(g.edge_count() == 20);
    }
}

TEST_CASE("gen rejects bad parameters") {
    const auto small_k = cli::run("gen --family sun --k 2 2>&1 1>/dev/null");
    CHECK(small_k.exit_code == 2);
    CHECK(small_k.output.find("k must be >= 3") != std::string::npos);

    CHECK(cli::run("gen --family sun 2>/dev/null").exit_code == 2);        // --k missing
    CHECK(cli::run("gen --family path --k 4 2>/dev/null").exit_code == 2); // wrong size flag
    CHECK(cli::run("gen --family wheel --n 5 2>/dev/null").exit_code == 2);
    CHECK(cli::run("gen 2>/dev/null").exit_code == 2);
    CHECK(cli::run("gen --family cycle --n 2 2>/dev/null").exit_code == 2);
    CHECK(cli::run("gen --family sun --k 80000 2>/dev/null").exit_code == 2);  // vertex cap
}

TEST_CASE("compute emits the full JSON document") {
    TempFile file("sun3.edges", sun_edge_list(3));
    const auto run = cli::run("compute " + file.path);
    REQUIRE(run.exit_code == 0);

    // canonical bytes: compact, key-sorted, newline-terminated
    REQUIRE(!run.output.empty());
    CHECK(run.output.back() == '\n');
    const json doc = json::parse(run.output);
    CHECK(run.output == doc.dump() + "\n");

    CHECK(doc["n"] == 6);
    CHECK(doc["m"] == 9);
    CHECK(doc["diameter"] == 2);
    CHECK(doc["wiener"] == 21);
    CHECK(doc["wiener_polarity"] == 0);
    CHECK(doc["m1"] == 60);
    CHECK(doc["m2"] == 96);
    CHECK(doc["w_d"] == json::array({9, 6}));
    CHECK(doc["hosoya"] == json::array({9, 6}));
    CHECK(doc["relations"].size() == 4);
    CHECK(doc["provenance"]["version"] == "1.0.0");
    CHECK(run.output.find("\"hosoya\":[9,6]") != std::string::npos);
    CHECK(run.output.find("\"wiener\":21") != std::string::npos);

    SECTION("deterministic output bytes") {
        const auto again = cli::run("compute " + file.path);
        CHECK(again.output == run.output);
        const auto threaded = cli::run("compute --threads 4 " + file.path);
        CHECK(threaded.output == run.output);
    }
}

TEST_CASE("compute on other graphs") {
    TempFile k4("k4.edges", topoidx::to_edge_list(topoidx::generate({topoidx::Family::Complete, 4})));
    const auto complete = cli::run("compute " + k4.path);
    REQUIRE(complete.exit_code == 0);
    const json doc = json::parse(complete.output);
    CHECK(doc["wiener"] == 6);
    CHECK(doc["hosoya"] == json::array({6}));

    TempFile s4("sun4.edges", sun_edge_list(4));
    const auto sun = cli::run("compute " + s4.path);
    REQUIRE(sun.exit_code == 0);
    CHECK(sun.output.find("\"wiener_polarity\":2") != std::string::npos);
    CHECK(sun.output.find("{\"lhs\":44,\"name\":\"corollary_wiener\",\"rhs\":12,"
                          "\"status\":\"Violated\"}") != std::string::npos);

    SECTION("reads stdin with -") {
        const auto piped =
            cli::run_raw("cat " + s4.path + " | " + cli::binary() + " compute -");
        CHECK(piped.exit_code == 0);
        CHECK(json::parse(piped.output)["wiener"] == 44);
    }
}

TEST_CASE("compute csv") {
    TempFile file("sun3csv.edges", sun_edge_list(3));
    const auto run = cli::run("compute --format csv " + file.path);
    REQUIRE(run.exit_code == 0);
    CHECK(run.output == "n,m,diameter,wiener,wiener_polarity,m1,m2,w_1,w_2\n"
                        "6,9,2,21,0,60,96,9,6\n");
}

TEST_CASE("compute error handling") {
    CHECK(cli::run("compute /no/such/file.edges 2>/dev/null").exit_code == 2);

    TempFile malformed("malformed.edges", "not an edge list\n");
    CHECK(cli::run("compute " + malformed.path + " 2>/dev/null").exit_code == 2);

    TempFile truncated("truncated.edges", "4 3\n0 1\n");
    CHECK(cli::run("compute " + truncated.path + " 2>/dev/null").exit_code == 2);

    TempFile disconnected("disconnected.edges", "2 0\n");
    const auto run = cli::run("compute " + disconnected.path + " 2>&1 1>/dev/null");
    CHECK(run.exit_code == 3);
    CHECK(run.output.find("disconnected") != std::string::npos);

    TempFile capped("capped.edges", sun_edge_list(3));
    CHECK(cli::run("compute --max-n 3 " + capped.path + " 2>/dev/null").exit_code == 2);
}

TEST_CASE("relations report") {
    TempFile file("sun4rel.edges", sun_edge_list(4));
    const auto run = cli::run("relations " + file.path);
    REQUIRE(run.exit_code == 0);
    CHECK(run.output ==
          "[{\"lhs\":2,\"name\":\"polarity_bound\",\"rhs\":-30,\"status\":\"Violated\"},"
          "{\"lhs\":44,\"name\":\"corollary_wiener\",\"rhs\":12,\"status\":\"Violated\"},"
          "{\"lhs\":44,\"name\":\"proposition_wiener\",\"rhs\":44,\"status\":\"EqualityHolds\"},"
          "{\"lhs\":44,\"name\":\"wd_decomposition\",\"rhs\":44,\"status\":\"EqualityHolds\"}]\n");

    const auto csv = cli::run("relations --format csv " + file.path);
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output == "name,lhs,rhs,status\n"
                        "polarity_bound,2,-30,Violated\n"
                        "corollary_wiener,44,12,Violated\n"
                        "proposition_wiener,44,44,EqualityHolds\n"
                        "wd_decomposition,44,44,EqualityHolds\n");
}

TEST_CASE("verify sweeps") {
    const auto sweep = cli::run("verify --k-min 3 --k-max 50 2>/dev/null");
    CHECK(sweep.exit_code == 0);
    CHECK(sweep.output ==
          "{\"k_max\":50,\"k_min\":3,\"mismatches\":0,\"oracle_cap\":200,\"sizes\":48}\n");

    const auto summary = cli::run("verify --k-min 3 --k-max 50 2>&1 1>/dev/null");
    CHECK(summary.output.find("48 sizes, 0 mismatches") != std::string::npos);

    const auto single = cli::run("verify --k-min 3 --k-max 3 2>/dev/null");
    CHECK(single.exit_code == 0);
    CHECK(json::parse(single.output)["sizes"] == 1);

    const auto csv = cli::run("verify --k-min 3 --k-max 5 --format csv 2>/dev/null");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output == "k,W,W_p,d1,d2,d3\n"
                        "3,21,0,9,6,0\n"
                        "4,44,2,14,12,2\n"
                        "5,75,5,20,20,5\n");

    CHECK(cli::run("verify --k-min 5 --k-max 4 2>/dev/null").exit_code == 2);
    CHECK(cli::run("verify --k-min 2 --k-max 4 2>/dev/null").exit_code == 2);
    CHECK(cli::run("verify --k-max 9 2>/dev/null").exit_code == 2);
}

TEST_CASE("bench reports agreeing values") {
    const auto sun = cli::run("bench --family sun --k 3 2>/dev/null");
    REQUIRE(sun.exit_code == 0);
    const json doc = json::parse(sun.output);
    CHECK(doc["engine"]["wiener"] == 21);
    CHECK(doc["closed_form"]["wiener"] == 21);
    CHECK(doc["agree"] == true);
    CHECK(doc["k"] == 3);
    CHECK(doc["n"] == 6);

    const auto cycle = cli::run("bench --family cycle --n 30 2>/dev/null");
    REQUIRE(cycle.exit_code == 0);
    const json cycle_doc = json::parse(cycle.output);
    CHECK(cycle_doc["engine"]["wiener"] == 3375);  // n^3/8 for even cycles
    CHECK_FALSE(cycle_doc.contains("closed_form"));

    CHECK(cli::run("bench --family sun --k 4 --repeat 0 2>/dev/null").exit_code == 2);
}

TEST_CASE("global flags") {
    const auto version = cli::run("--version");
    CHECK(version.exit_code == 0);
    CHECK(version.output.find("topoidx 1.0.0") != std::string::npos);

    TempFile file("seeded.edges", sun_edge_list(3));
    const auto base = cli::run("compute " + file.path);
    const auto seeded = cli::run("--seed 7 compute " + file.path);
    CHECK(seeded.exit_code == 0);
    CHECK(seeded.output == base.output);

    CHECK(cli::run("2>/dev/null").exit_code == 2);            // subcommand required
    CHECK(cli::run("frobnicate 2>/dev/null").exit_code == 2); // unknown subcommand
}
