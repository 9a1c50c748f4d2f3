#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <vector>

#include "lrforest/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = lrforest::run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        lines.push_back(line);
    return lines;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("orbit json") {
    CliResult r = run({"orbit", "--z", "1+1i", "--u", "1", "--v", "1", "--depth", "1",
                       "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"] == "1+1i");
    CHECK(j["left"]["value"] == "3/5+1/5i");
    CHECK(j["right"]["value"] == "2+1i");

    CliResult single = run({"orbit", "--z", "2+1i", "--depth", "0"});
    auto js = nlohmann::json::parse(single.out);
    CHECK(js["value"] == "2+1i");
    CHECK(js["left"].is_null());
}

TEST_CASE("orbit dot") {
    CliResult r = run({"orbit", "--z", "1+1i", "--depth", "1", "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph orbit {") != std::string::npos);
    CHECK(r.out.find("[label=\"L\"]") != std::string::npos);
}

TEST_CASE("orbit rejects points outside the quadrant") {
    CliResult r = run({"orbit", "--z", "1/2-1i"});
    CHECK(r.code == 2);
    CHECK(r.err.find("not in D0") != std::string::npos);
}

TEST_CASE("orbit depth cap is a flag") {
    CHECK(run({"orbit", "--z", "1+1i", "--depth", "4", "--depth-cap", "3"}).code == 2);
    CHECK(run({"orbit", "--z", "1+1i", "--depth", "4", "--depth-cap", "4"}).code == 0);
}

TEST_CASE("trace") {
    CliResult r = run({"trace", "--z", "1/2+1/4i", "--u", "1", "--v", "1"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["root"] == "3/5+4/5i");
    CHECK(j["word"] == "L");
    CHECK(j["chain"].size() == 2);

    auto j2 = nlohmann::json::parse(run({"trace", "--z", "2+1i"}).out);
    CHECK(j2["root"] == "1+1i");
    CHECK(j2["word"] == "R");

    auto j3 = nlohmann::json::parse(run({"trace", "--z", "1/2+1/2i"}).out);
    CHECK(j3["word"] == "");
    CHECK(j3["root"] == "1/2+1/2i");

    CHECK(run({"trace", "--z", "5+1i", "--max-steps", "1"}).code == 2);
}

TEST_CASE("same-tree exit codes") {
    CliResult yes = run({"same-tree", "--z1", "2+1i", "--z2", "1+1i"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "true\n");

    CliResult no = run({"same-tree", "--z1", "1+1i", "--z2", "3/5+4/5i"});
    CHECK(no.code == 1);
    CHECK(no.out == "false\n");
}

TEST_CASE("classify") {
    CliResult r = run({"classify", "--z", "1/2+1/4i"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"crescent\":1,\"orphan\":false}\n");
    CliResult o = run({"classify", "--z", "1/2+1/2i"});
    CHECK(o.out == "{\"crescent\":0,\"orphan\":true}\n");
}

TEST_CASE("pair-check") {
    CliResult pair = run({"pair-check", "--L", "[[1,0],[1,1]]", "--R", "[[1,1],[0,1]]"});
    CHECK(pair.code == 0);
    CHECK(pair.out == "PAIR\n");

    CliResult not_pair =
        run({"pair-check", "--L", "[[1,0],[1,1]]", "--R", "[[1,1],[1,2]]"});
    CHECK(not_pair.code == 1);
    auto lines = split_lines(not_pair.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "NOT-PAIR");
    CHECK(lines[1] == "witness z1 = 2+1i");
    CHECK(lines[2] == "witness z2 = 1+1i");
    CHECK(lines[3] == "common image L(z1) = R(z2) = 7/10+1/10i");

    CliResult big = run({"pair-check", "--L", "[[1,0],[3,1]]", "--R", "[[1,2],[0,1]]"});
    CHECK(big.code == 0);
    CHECK(big.out == "PAIR\n");

    CliResult verified = run({"pair-check", "--L", "[[1,0],[1,1]]", "--R",
                              "[[1,1],[0,1]]", "--verify-bound", "6"});
    CHECK(verified.code == 0);
    CHECK(verified.out == "PAIR\noracle: no witness found (bound 6)\n");

    CHECK(run({"pair-check", "--L", "[[1,0],[1]]", "--R", "[[1,1],[0,1]]"}).code == 2);
    CHECK(run({"pair-check", "--L", "[[1,0],[0,1]]", "--R", "[[1,1],[0,1]]"}).code == 2);
}

TEST_CASE("decompose") {
    CliResult r = run({"decompose", "--T", "[[3,1],[2,1]]", "--u", "1", "--v", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "LLR\n");

    CliResult id = run({"decompose", "--T", "[[1,0],[0,1]]"});
    CHECK(id.code == 0);
    CHECK(id.out == "\n");

    CliResult not_member =
        run({"decompose", "--T", "[[1,1],[0,1]]", "--u", "2", "--v", "2"});
    CHECK(not_member.code == 1);
    CHECK(not_member.out == "NOT-MEMBER\n");

    CHECK(run({"decompose", "--T", "[[0,-1],[1,0]]"}).code == 2);
}

TEST_CASE("member") {
    CHECK(run({"member", "--T", "[[1,2],[2,5]]", "--u", "2", "--v", "2"}).code == 0);
    CHECK(run({"member", "--T", "[[1,1],[0,1]]", "--u", "2", "--v", "2"}).code == 1);
    CliResult gen = run({"member", "--T", "[[1,1],[0,1]]"});
    CHECK(gen.code == 0);
    CHECK(gen.out == "true\n");
    // the identity is not counted as a member
    CHECK(run({"member", "--T", "[[1,0],[0,1]]"}).code == 1);
}

TEST_CASE("regions CSV") {
    CliResult r = run({"regions", "--u", "1", "--nmax", "1", "--samples", "3"});
    CHECK(r.code == 0);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 7); // header + 3 circle + 3 line
    CHECK(lines[0] == "region_kind,n,x,y");
    CHECK(lines[1] == "circle,1,0,0");
    CHECK(lines[2] == "circle,1,0.5,0.5");
    CHECK(lines[3] == "circle,1,1,0");
    CHECK(lines[4] == "line,0,1,0");
    CHECK(lines[6] == "line,0,1,0.5");

    CliResult u2 = run({"regions", "--u", "2", "--nmax", "4", "--samples", "3"});
    auto l2 = split_lines(u2.out);
    // middle sample of each circle is its topmost point (center x, radius y)
    CHECK(l2[2] == "circle,1,0.25,0.25");
    CHECK(l2[5] == "circle,2,0.125,0.125");
    CHECK(l2[8] == "circle,3,0.0833333333333,0.0833333333333");
    CHECK(l2[11] == "circle,4,0.0625,0.0625");

    CliResult v2 = run({"regions", "--v", "2", "--samples", "2", "--nmax", "1"});
    auto l3 = split_lines(v2.out);
    CHECK(l3[3] == "line,0,2,0");
    CHECK(l3[4] == "line,0,2,0.5");

    CHECK(run({"regions", "--nmax", "0"}).code == 2);
    CHECK(run({"regions", "--samples", "1"}).code == 2);
}

TEST_CASE("cusp") {
    CliResult zero = run({"cusp", "--tail", "L"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "0\n");
    CHECK(run({"cusp", "--tail", "R"}).out == "infinity\n");
    CHECK(run({"cusp", "--tail", "both", "--prefix", "LRL"}).out == "divergent\n");
    CHECK(run({"cusp", "--tail", "X"}).code == 2);
    CHECK(run({"cusp", "--tail", "L", "--prefix", "LQ"}).code == 2);
}

TEST_CASE("usage errors and help") {
    CHECK(run({"orbit"}).code == 2);                       // missing --z
    CHECK(run({"orbit", "--z", "bogus"}).code == 2);       // bad literal
    CHECK(run({"nonsense"}).code == 2);                    // unknown subcommand
    CHECK(run({"orbit", "--z", "1+1i", "--nope"}).code == 2);
    CHECK(run({"same-tree", "--z1", "1+1i", "--z2", "1+1i", "--u", "0"}).code == 2);

    CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("orbit") != std::string::npos);
    CHECK(run({}).code == 0); // bare invocation prints help
}

TEST_CASE("batch mode") {
    std::string script =
        "# comment line\n"
        "\n"
        "same-tree --z1 2+1i --z2 1+1i\n"
        "member --T [[1,1],[0,1]] --u 2 --v 2\n"
        "cusp --tail R\n";
    CliResult r = run({"batch"}, script);
    CHECK(r.code == 1); // worst of {0, 1, 0}
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "true");
    CHECK(lines[1] == "false");
    CHECK(lines[2] == "infinity");

    CliResult nested = run({"batch"}, "batch\n");
    CHECK(nested.code == 2);

    CliResult bad = run({"batch"}, "orbit --z oops\ncusp --tail L\n");
    CHECK(bad.code == 2);
    CHECK(bad.out == "0\n"); // later lines still run
}

TEST_CASE("classify stays exact for huge crescent indices") {
    // x = y = 10^-24 sits half a trillion-trillion crescents deep
    CliResult r = run({"classify", "--z",
                       "1/1000000000000000000000000+1/1000000000000000000000000i"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"crescent\":499999999999999999999999,\"orphan\":false}\n");
}

TEST_CASE("deterministic output") {
    std::vector<std::string> args{"orbit", "--z", "3/7+22/9i", "--depth", "4",
                                  "--format", "dot"};
    CHECK(run(args).out == run(args).out);
}

} // TEST_SUITE
