#include <doctest.h>

#include <sstream>

#include "ccauto/cli.hpp"
#include "support.hpp"

using namespace ccauto;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kCatalog = CCAUTO_CATALOG_PATH;

} // namespace

TEST_CASE("verify exits 0 and prints a PASS verdict") {
    CliRun r = run({"verify", "--catalog", kCatalog, "--jobs", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict: PASS") != std::string::npos);
    CHECK(r.out.find("exceptional (Out_c != 1): G44 G45") != std::string::npos);
}

TEST_CASE("verify json output lists 51 records") {
    CliRun r = run({"verify", "--catalog", kCatalog, "--format", "json"});
    CHECK(r.exit_code == 0);
    size_t count = 0;
    size_t pos = 0;
    while ((pos = r.out.find("\"group\"", pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    CHECK(count == 51);
    CHECK(r.out.find("\"lemma26_bound\"") != std::string::npos);
}

TEST_CASE("verify csv output has a header and 51 rows") {
    CliRun r = run({"verify", "--catalog", kCatalog, "--format", "csv"});
    CHECK(r.exit_code == 0);
    size_t lines = std::count(r.out.begin(), r.out.end(), '\n');
    CHECK(lines == 52);
    CHECK(r.out.rfind("group,order,abelian,center_order,class,gamma2_order,z2_order,", 0) == 0);
}

TEST_CASE("verify output is byte-identical across job counts") {
    CliRun a = run({"verify", "--catalog", kCatalog, "--format", "json", "--jobs", "1"});
    CliRun b = run({"verify", "--catalog", kCatalog, "--format", "json", "--jobs", "4"});
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    CliRun c = run({"verify", "--catalog", kCatalog, "--jobs", "1"});
    CliRun d = run({"verify", "--catalog", kCatalog, "--jobs", "3"});
    CHECK(c.out == d.out);
}

TEST_CASE("autc reports the automorphism counts of G44") {
    CliRun r = run({"autc", "--catalog", kCatalog, "--group", "G44"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Inn=16") != std::string::npos);
    CHECK(r.out.find("Aut_c=32") != std::string::npos);
    CHECK(r.out.find("Out_c=2") != std::string::npos);
}

TEST_CASE("autc --list prints sorted automorphism lines") {
    CliRun r = run({"autc", "--catalog", kCatalog, "--group", "G44", "--list"});
    CHECK(r.exit_code == 0);
    std::vector<std::string> lines;
    std::istringstream is(r.out);
    std::string line;
    bool in_list = false;
    while (std::getline(is, line)) {
        if (line.rfind("Out_c=", 0) == 0) {
            in_list = true;
            continue;
        }
        if (in_list && !line.empty())
            lines.push_back(line);
    }
    CHECK(lines.size() == 32);
    CHECK(std::is_sorted(lines.begin(), lines.end()));
}

TEST_CASE("analyze prints a group report") {
    CliRun r = run({"analyze", "--catalog", kCatalog, "--group", "G42"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("classification extraspecial") != std::string::npos);
}

TEST_CASE("criteria prints per-criterion lines") {
    CliRun r = run({"criteria", "--catalog", kCatalog, "--group", "G8"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("L22: fired") != std::string::npos);
    CHECK(r.out.find("extraspecial: not fired") != std::string::npos);
}

TEST_CASE("CCAUTO_CATALOG supplies the default catalog path") {
    setenv("CCAUTO_CATALOG", kCatalog.c_str(), 1);
    CliRun r = run({"autc", "--group", "G42"});
    unsetenv("CCAUTO_CATALOG");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Out_c=1") != std::string::npos);

    unsetenv("CCAUTO_CATALOG");
    CliRun missing = run({"autc", "--group", "G42"});
    CHECK(missing.exit_code == 2);
}

TEST_CASE("missing catalog file exits 2 with a message on stderr") {
    CliRun r = run({"analyze", "--catalog", "missing.cat", "--group", "G1"});
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("missing.cat") != std::string::npos);
}

TEST_CASE("unknown group exits 2") {
    CliRun r = run({"autc", "--catalog", kCatalog, "--group", "G99"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("G99") != std::string::npos);
}

TEST_CASE("malformed catalog exits 2") {
    CliRun r = run({"verify", "--catalog", CCAUTO_BROKEN_CATALOG_PATH});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("verify exits 1 on a catalog that breaks the verdict") {
    CliRun r = run({"verify", "--catalog", CCAUTO_MUTATED_CATALOG_PATH});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("verdict: FAIL") != std::string::npos);
}
