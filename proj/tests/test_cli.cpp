#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spherebasis/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = sphb::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (const char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("cells verb lists cells in canonical order") {
    const RunResult r = run({"cells", "--family", "cube", "--n", "2", "--j", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "0*\n1*\n*0\n*1\n");

    const RunResult rj =
        run({"cells", "--family", "simplex", "--n", "2", "--j", "0", "--json"});
    CHECK(rj.code == 0);
    CHECK(rj.out == "{\"cell\":[1]}\n{\"cell\":[2]}\n{\"cell\":[3]}\n");
}

TEST_CASE("betti verb") {
    const RunResult r = run({"betti", "--family", "cube", "--n", "4", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "b_0 = 1\nb_1 = 0\nb_2 = 7\n");

    const RunResult single =
        run({"betti", "--family", "cube", "--n", "4", "--k", "2", "--ell", "2", "--json"});
    CHECK(single.code == 0);
    CHECK(single.out == "{\"ell\":2,\"family\":\"cube\",\"k\":2,\"n\":4,\"value\":7}\n");
}

TEST_CASE("basis verb emits one line per element") {
    const RunResult r =
        run({"basis", "--family", "cube", "--n", "5", "--k", "2", "--json"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 31);

    // byte-identical across runs
    const RunResult again =
        run({"basis", "--family", "cube", "--n", "5", "--k", "2", "--json"});
    CHECK(again.out == r.out);
}

TEST_CASE("basis cache round trip survives tampering") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "sphb-cli-test-cache";
    fs::remove_all(dir);

    const std::vector<std::string> args = {"basis", "--family", "cube",     "--n", "4",
                                           "--k",   "2",        "--cache", dir.string(),
                                           "--json"};
    const RunResult first = run(args);
    CHECK(first.code == 0);
    const fs::path file = dir / "basis-cube-4-2.json";
    REQUIRE(fs::exists(file));

    // cached run is byte-identical
    const RunResult second = run(args);
    CHECK(second.out == first.out);

    // corrupt the cache; the verb rebuilds and rewrites it
    std::ofstream(file, std::ios::trunc) << "{\"garbage\":true}";
    const RunResult third = run(args);
    CHECK(third.code == 0);
    CHECK(third.out == first.out);
    std::ifstream rewritten(file);
    std::stringstream buf;
    buf << rewritten.rdbuf();
    CHECK(buf.str().find("content_hash") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("decompose verb: explicit cells") {
    const RunResult r = run({"decompose", "--family", "simplex", "--n", "4", "--k", "1",
                             "--cell", "{1,2}", "--cell", "{2,3}", "--cell", "{1,3}",
                             "--json"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"indices\":[0],\"method\":\"cone\",\"residual\":{\"cells\":[],\"family\":"
          "\"simplex\",\"k\":1,\"n\":4}}\n");
}

TEST_CASE("decompose verb: seeded random round trips are deterministic") {
    const std::vector<std::string> args = {"decompose", "--family", "cube", "--n", "5",
                                           "--k",       "2",        "--random", "10",
                                           "--seed",    "7",        "--json"};
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(count_lines(a.out) == 10);
    CHECK(a.out.find("\"match\":true") != std::string::npos);
    CHECK(a.out.find("\"match\":false") == std::string::npos);
    CHECK(a.out.find("\"seed\":7") != std::string::npos);

    // human mode echoes the seed too
    const RunResult human = run({"decompose", "--family", "cube", "--n", "4", "--k", "2",
                                 "--random", "3", "--seed", "11"});
    CHECK(human.code == 0);
    CHECK(human.out.find("seed 11") != std::string::npos);
}

TEST_CASE("decompose verb: exit codes") {
    // parse failure in a cell: usage error
    const RunResult bad = run({"decompose", "--family", "cube", "--n", "3", "--k", "1",
                               "--cell", "0*2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error:") == 0);

    // valid input that is not a cycle: mathematical no
    const RunResult open = run({"decompose", "--family", "cube", "--n", "3", "--k", "1",
                                "--cell", "0*0"});
    CHECK(open.code == 1);
    CHECK(open.err.find("not a cycle") != std::string::npos);

    // mutually exclusive modes
    const RunResult both = run({"decompose", "--family", "cube", "--n", "3", "--k", "1",
                                "--cell", "0*0", "--random", "2"});
    CHECK(both.code == 2);

    // method/family mismatch
    const RunResult mismatch = run({"decompose", "--family", "cube", "--n", "4", "--k",
                                    "2", "--random", "1", "--method", "cone"});
    CHECK(mismatch.code == 2);
}

TEST_CASE("counts verb prints exact decimal strings") {
    const RunResult r = run({"counts", "--fn", "s", "--nmax", "4", "--k", "1", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"fn\":\"s\",\"k\":1,\"n\":1,\"value\":\"0\"}\n"
          "{\"fn\":\"s\",\"k\":1,\"n\":2,\"value\":\"1\"}\n"
          "{\"fn\":\"s\",\"k\":1,\"n\":3,\"value\":\"5\"}\n"
          "{\"fn\":\"s\",\"k\":1,\"n\":4,\"value\":\"17\"}\n");

    const RunResult big = run({"counts", "--fn", "m", "--nmax", "90", "--k", "30", "--json"});
    CHECK(big.code == 0);
    CHECK(big.out.find("\"n\":90") != std::string::npos);

    const RunResult bad = run({"counts", "--fn", "nope", "--nmax", "4"});
    CHECK(bad.code == 2);

    const RunResult card =
        run({"counts", "--fn", "basisCardSimplex", "--nmax", "5", "--k", "2"});
    CHECK(card.code == 0);
    CHECK(card.out.find("basisCardSimplex(5,2) = 10") != std::string::npos);
}

TEST_CASE("identities verb") {
    const RunResult r = run({"identities", "--nmax-sm", "8", "--nmax-bw", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("s=m: ok") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    const RunResult j = run({"identities", "--nmax-sm", "8", "--nmax-bw", "6", "--json"});
    CHECK(j.code == 0);
    CHECK(count_lines(j.out) == 7);
}

TEST_CASE("torus verb reports the honest search outcome") {
    const RunResult r = run({"torus", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"pair_found\":false") != std::string::npos);
    CHECK(r.out.find("\"euler\":0") != std::string::npos);

    namespace fs = std::filesystem;
    const fs::path off = fs::temp_directory_path() / "sphb-cli-test.off";
    fs::remove(off);
    const RunResult with_off = run({"torus", "--out", off.string()});
    CHECK(with_off.code == 0);
    REQUIRE(fs::exists(off));
    std::ifstream in(off);
    std::string header;
    std::getline(in, header);
    CHECK(header == "nOFF 4");
    fs::remove(off);
}

TEST_CASE("robust verb") {
    const RunResult r = run({"robust", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "n=3: circuits=7 verified=7 failed=0 inconclusive=0\n");
    const RunResult bad = run({"robust", "--n", "9"});
    CHECK(bad.code == 2);
}

TEST_CASE("treecheck verb") {
    const RunResult one =
        run({"treecheck", "--family", "cube", "--n", "4", "--k", "2"});
    CHECK(one.code == 0);
    CHECK(one.out.find("verdict=ok") != std::string::npos);
    CHECK(one.out.find("Z2 analog only") != std::string::npos);

    const RunResult sweep = run({"treecheck", "--family", "simplex", "--nmax", "5", "--json"});
    CHECK(sweep.code == 0);
    CHECK(count_lines(sweep.out) == 10);  // (n,k) pairs with 2<=n<=5, 1<=k<n

    const RunResult neither = run({"treecheck", "--family", "cube"});
    CHECK(neither.code == 2);
}

TEST_CASE("usage errors and help") {
    CHECK(run({}).code == 2);                       // no subcommand
    CHECK(run({"frobnicate"}).code == 2);           // unknown subcommand
    CHECK(run({"cells", "--family", "cube"}).code == 2);  // missing required
    CHECK(run({"cells", "--family", "dodecahedron", "--n", "2", "--j", "0"}).code == 2);
    const RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("cells") != std::string::npos);
}
