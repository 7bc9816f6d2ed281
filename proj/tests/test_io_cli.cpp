#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"

#include "tdc/edge_list_io.hpp"
#include "tdc/generators.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace tdc;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& contents = "")
        : path("tdc_test_" + name)
    {
        if (!contents.empty()) {
            std::ofstream out(path);
            out << contents;
        }
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int status = tdc::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("edge list reading accepts the documented format")
{
    std::istringstream in("4 3\n0 1\n1 2\n2 3\n");
    Graph g = read_edge_list(in);
    CHECK(g == path_graph(4));
}

TEST_CASE("edge list reading rejects malformed input")
{
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_edge_list(in), ParseError);
    };
    reject("");
    reject("4\n");
    reject("4 2\n0 1\n");                 // too few edges
    reject("4 1\n0 1\n1 2\n");            // trailing content
    reject("4 1\n0 0\n");                 // loop
    reject("4 2\n0 1\n1 0\n");            // duplicate
    reject("4 1\n0 4\n");                 // out of range
    reject("4 1\n0 -1\n");                // negative
    reject("4 1\nzero one\n");            // junk
    reject("4 1 7\n0 1\n");               // header junk
}

TEST_CASE("edge list writing round-trips")
{
    Graph g = cycle_graph(7);
    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == g);
}

TEST_CASE("role maps are written one pair per line sorted by id")
{
    std::map<std::string, int> roles{{"b", 1}, {"a", 0}, {"c", 2}};
    std::ostringstream out;
    write_role_map(roles, out);
    CHECK(out.str() == "a 0\nb 1\nc 2\n");
}

TEST_CASE("cli verdicts on small graphs")
{
    TempFile p4("p4.el", "4 3\n0 1\n1 2\n2 3\n");
    auto r = run_cli({"gammat", p4.path});
    CHECK(r.status == 0);
    CHECK(r.out == "2\n");

    TempFile c6("c6.el", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    CHECK(run_cli({"decide", c6.path}).out == "YES\n");
    CHECK(run_cli({"decide", c6.path, "--method", "oracle"}).out == "YES\n");
    CHECK(run_cli({"ct", c6.path}).out == "1\n");
    CHECK(run_cli({"gamma", p4.path}).out == "2\n");

    TempFile k2("k2.el", "2 1\n0 1\n");
    CHECK(run_cli({"decide", k2.path}).out == "NO\n");
    CHECK(run_cli({"ct", k2.path}).out == "IRREDUCIBLE\n");

    TempFile lone("k1.el", "1 0\n");
    CHECK(run_cli({"gammat", lone.path}).out == "NOTDS\n");
}

TEST_CASE("cli witness lines")
{
    TempFile p4("p4w.el", "4 3\n0 1\n1 2\n2 3\n");
    CHECK(run_cli({"gammat", p4.path, "--witness"}).out == "2\n1 2\n");

    TempFile c6("c6w.el", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    auto r = run_cli({"decide", c6.path, "--method", "oracle", "--witness"});
    CHECK(r.out.substr(0, 4) == "YES\n");
    // The witness is a size-4 set; spot-check it parses as sorted ids.
    std::istringstream ids(r.out.substr(4));
    int prev = -1, v, count = 0;
    while (ids >> v) {
        CHECK(v > prev);
        prev = v;
        ++count;
    }
    CHECK(count == 4);
}

TEST_CASE("cli method routing")
{
    TempFile c5("c5.el", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    CHECK(run_cli({"decide", c5.path, "--method", "p5free"}).out == "YES\n");
    TempFile p5("p5.el", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    CHECK(run_cli({"decide", c5.path, "--hint", p5.path}).out == "YES\n");

    TempFile c8("c8.el", "8 8\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n0 7\n");
    CHECK(run_cli({"decide", c8.path, "--method", "p4kp3=1"}).out == "NO\n");

    // Precondition violations surface as input errors.
    auto bad = run_cli({"decide", c8.path, "--method", "p5free"});
    CHECK(bad.status == 2);
    CHECK(bad.out.empty());
    CHECK(!bad.err.empty());
}

TEST_CASE("cli classifier output")
{
    TempFile claw("claw.el", "4 3\n0 1\n0 2\n0 3\n");
    auto r = run_cli({"classify-h", claw.path});
    CHECK(r.status == 0);
    CHECK(r.out == "coNP-hard (claw branch)\nH is a forest with a vertex of degree at least 3\n");
}

TEST_CASE("cli compile subcommands")
{
    TempFile p10("p10.el",
                 "10 9\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n");
    TempFile out_g("evends.el");
    auto r = run_cli({"compile", "even-ds", "--ell", "2", p10.path, out_g.path});
    CHECK(r.status == 0);
    CHECK(r.out.substr(0, 3) == "54 ");
    Graph gadget = load_edge_list(out_g.path);
    CHECK(gadget.vertex_count() == 54);
    std::ifstream roles(out_g.path + ".roles");
    int role_lines = 0;
    std::string line;
    while (std::getline(roles, line))
        if (!line.empty()) ++role_lines;
    CHECK(role_lines == 54);
    std::remove((out_g.path + ".roles").c_str());

    TempFile cnf("phi.cnf", "p cnf 3 2\n1 2 3 0\n-1 2 -3 0\n");
    TempFile out_s("sat.el");
    auto rs = run_cli({"compile", "sat-2p4", cnf.path, out_s.path});
    CHECK(rs.status == 0);
    CHECK(load_edge_list(out_s.path).vertex_count() == 14);
    std::remove((out_s.path + ".roles").c_str());

    TempFile cnf3("phi3.cnf", "p cnf 3 3\n1 2 3 0\n1 2 3 0\n1 2 3 0\n");
    TempFile out_c("claw.el2");
    auto rc = run_cli({"compile", "claw-1in3", cnf3.path, out_c.path});
    CHECK(rc.status == 0);
    CHECK(load_edge_list(out_c.path).vertex_count() == 174);
    std::remove((out_c.path + ".roles").c_str());

    TempFile c3("c3.el", "3 3\n0 1\n1 2\n0 2\n");
    TempFile out_sub("c3sub.el");
    auto rsub = run_cli({"compile", "subdiv4", c3.path, out_sub.path});
    CHECK(rsub.status == 0);
    CHECK(rsub.out == "15 15\n");
}

TEST_CASE("cli generation and determinism")
{
    auto a = run_cli({"gen", "random", "8", "0.3", "42"});
    auto b = run_cli({"gen", "random", "8", "0.3", "42"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    auto p = run_cli({"gen", "path", "4"});
    CHECK(p.out == "4 3\n0 1\n1 2\n2 3\n");
    auto s = run_cli({"gen", "star", "4"});
    CHECK(s.out == "4 3\n0 1\n0 2\n0 3\n");
}

TEST_CASE("cli verification drivers on small budgets")
{
    auto thm1 = run_cli({"verify-lemma", "thm1", "--n", "6", "--samples", "150", "--seed", "3"});
    CHECK(thm1.status == 0);
    CHECK(thm1.out == "OK samples=150 max-n=6 disagreements=0\n");

    auto claim9 = run_cli({"verify-lemma", "claim9", "--n", "5", "--samples", "10"});
    CHECK(claim9.status == 0);
    CHECK(claim9.out.substr(0, 2) == "OK");

    auto ct3 = run_cli({"verify-lemma", "ct3", "--n", "6", "--samples", "40"});
    CHECK(ct3.status == 0);

    auto claim1 = run_cli({"verify-lemma", "claim1", "--n", "6", "--samples", "4"});
    CHECK(claim1.status == 0);

    // Determinism of a full driver line.
    auto again = run_cli({"verify-lemma", "thm1", "--n", "6", "--samples", "150", "--seed", "3"});
    CHECK(again.out == thm1.out);
}

TEST_CASE("cli error paths exit with status two")
{
    CHECK(run_cli({"gammat", "missing_file.el"}).status == 2);
    CHECK(run_cli({"unknown-subcommand"}).status == 2);
    CHECK(run_cli({"decide"}).status == 2);
    TempFile disc("disc.el", "4 2\n0 1\n2 3\n");
    CHECK(run_cli({"decide", disc.path}).status == 2);
    CHECK(run_cli({"ct", disc.path}).status == 2);
    TempFile badf("bad.el", "2 1\n0 0\n");
    CHECK(run_cli({"gammat", badf.path}).status == 2);
}
