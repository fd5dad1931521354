#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsw/cli.hpp"

#include <json.hpp>

#include <sstream>

using nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = fsw::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("switch subcommand") {
    Run r = invoke({"switch", "--m", "4", "--n", "2", "--k", "3", "--json"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "switch");
    CHECK(j["result"]["virtual_rank"] == 3);
    REQUIRE(j["result"]["steps"].size() == 3);
    CHECK(j["result"]["steps"][0]["kind"] == "R0");
    CHECK(j["result"]["steps"][1]["kind"] == "R1");
    CHECK(j["result"]["steps"][2]["piece_rank"] == 3);

    // Parity violation is a domain error: exit 1 with a diagnostic.
    r = invoke({"switch", "--m", "3", "--n", "2", "--k", "1"});
    CHECK(r.status == 1);
    CHECK_FALSE(r.err.empty());

    // Usage error: exit 2.
    r = invoke({"switch", "--m", "4"});
    CHECK(r.status == 2);
    r = invoke({"nonsense"});
    CHECK(r.status == 2);
}

TEST_CASE("switch with base data") {
    Run r = invoke({"switch", "--m", "4", "--n", "2", "--k", "3", "--with-u", "--json"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["result"].contains("chern_of_v"));
    CHECK(j["result"]["sym_decomposition"].size() == 3);
    CHECK(j["result"]["sym_decomposition"][2]["exponent"] == 2);
    CHECK(j["result"]["sym_decomposition"][2]["dual"] == true);
}

TEST_CASE("hirzebruch subcommands") {
    Run r = invoke({"hirzebruch", "h0", "--n", "2", "--a", "3", "--b", "1"});
    CHECK(r.status == 0);
    CHECK(r.out == "6\n");

    r = invoke({"hirzebruch", "chi", "--n", "2", "--a", "3", "--b", "1", "--json"});
    json j = json::parse(r.out);
    CHECK(j["result"] == 6);

    r = invoke({"hirzebruch", "chooseb", "--a", "6", "--n", "2", "--json"});
    j = json::parse(r.out);
    CHECK(j["result"]["b"] == -2);
    CHECK(j["result"]["recipe_ok"] == true);
    CHECK(j["warnings"].empty());
}

TEST_CASE("afsw subcommands") {
    Run r = invoke({"afsw", "pure", "--dimb", "1", "--q", "0", "--rankv", "1", "--rankw", "1",
                    "--json"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["text"] == "w1 - v1");

    r = invoke({"afsw", "ksteps", "--degs", "2,0,-1,-3", "--json"});
    j = json::parse(r.out);
    CHECK(j["result"]["virtual_rank"] == 2); // (2+1) + (0+1) + 0 - (3-1)
    CHECK(j["result"]["steps"][0]["class"] == "R0");
    CHECK(j["result"]["steps"][2]["class"] == "ZERO");
    CHECK(j["result"]["steps"][3]["class"] == "-R1");

    r = invoke({"afsw", "zero", "--esq", "-1", "--edotk", "0", "--edotc", "0"});
    CHECK(r.status == 0);
    CHECK(r.out == "1\n");

    r = invoke({"afsw", "zero", "--esq", "-1", "--edotk", "0", "--edotc", "-1"});
    CHECK(r.status == 1); // precondition violated
}

TEST_CASE("graphs subcommands") {
    Run r = invoke({"graphs", "enumerate", "--n", "3", "--json"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["count"] == 6);

    r = invoke({"graphs", "compare", "--g", R"({"n":2,"edges":[]})", "--g2",
                R"({"n":2,"edges":[[1,2]]})", "--m", "1,2", "--json"});
    j = json::parse(r.out);
    CHECK(j["result"]["gt"] == true);
    CHECK(j["result"]["gg"] == true);

    r = invoke({"graphs", "interpolate", "--g", R"({"n":2,"edges":[]})", "--g2",
                R"({"n":2,"edges":[[1,2]]})", "--m", "1,2", "--json"});
    j = json::parse(r.out);
    CHECK(j["result"]["intermediate"]["edges"].empty());
    CHECK(j["result"]["sqsupset_g_mid"] == true);
    CHECK(j["result"]["gg_or_equal_mid_g2"] == true);

    r = invoke({"graphs", "compare", "--g", "notjson", "--g2", "{}", "--m", "1"});
    CHECK(r.status == 1);

    r = invoke({"graphs", "compare", "--g", R"({"n":2,"edges":[["x",2]]})", "--g2",
                R"({"n":2,"edges":[]})", "--m", "1,1"});
    CHECK(r.status == 1);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("eval subcommand") {
    Run r = invoke({"eval", "grade(c(V)*s(V), 0)", "--bind", "V=rank2:a,b", "--json"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["text"] == "1");

    r = invoke({"eval", "rank(sym(V, 2))", "--bind", "V=rank2:a,b"});
    CHECK(r.status == 0);
    CHECK(r.out == "3\n");

    r = invoke({"eval", "c(V", "--bind", "V=rank2:a,b"});
    CHECK(r.status == 1);
    CHECK(r.err.find("offset") != std::string::npos);

    r = invoke({"eval", "rank(T)", "--bind", "T=rank3"});
    CHECK(r.out == "3\n");
}

TEST_CASE("help exits cleanly") {
    Run r = invoke({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("Subcommands") != std::string::npos);
}

TEST_CASE("identical argv yields byte-identical JSON") {
    const std::vector<std::vector<std::string>> cases = {
        {"switch", "--m", "4", "--n", "2", "--k", "3", "--with-u", "--json"},
        {"hirzebruch", "chooseb", "--a", "6", "--n", "2", "--json"},
        {"afsw", "pure", "--dimb", "2", "--q", "1", "--rankv", "2", "--rankw", "3", "--json"},
        {"graphs", "enumerate", "--n", "4", "--json"},
        {"eval", "grade(c(V)*s(V), 2)", "--bind", "V=rank2:a,b", "--json"},
    };
    for (const auto& argv : cases) {
        Run first = invoke(argv);
        Run second = invoke(argv);
        REQUIRE(first.status == 0);
        CHECK(first.out == second.out);
    }
}
