#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qlie/serialize.hpp"

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace qlie;

namespace {

struct Run {
    int status;
    std::string out;
};

// Runs the CLI with stderr discarded.
Run run(const std::string& args) {
    std::string cmd = std::string(QLIE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), k);
    int st = pclose(f);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

json stable_json(const Run& r) {
    json j = json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    return j;
}

}  // namespace

TEST_CASE("documented invocations") {
    Run v = run("verify sl --n 2 --symbolic");
    CHECK(v.status == 0);
    CHECK(v.out.find("pass  relation (i)") != std::string::npos);
    CHECK(v.out.find("pass  relation (iii.f)") != std::string::npos);
    CHECK(v.out.find("FAIL") == std::string::npos);

    Run d = run("dims bmq --n 2 --max-degree 4");
    CHECK(d.status == 0);
    CHECK(d.out == "1 4 10 20 35\n");

    Run s = run("demo s3-zero-divisor");
    CHECK(s.status == 0);
    for (const char* part : {"(a)", "(b)", "(c)", "(d)"}) CHECK(s.out.find(part) != std::string::npos);
}

TEST_CASE("usage errors exit with 2 before computing") {
    CHECK(run("frobnicate sl").status == 2);
    CHECK(run("verify nothing").status == 2);
    CHECK(run("verify sl --format xml").status == 2);
    CHECK(run("verify sl --q 2 --symbolic").status == 2);
    CHECK(run("verify sl --params r45=2 --n 3").status == 2);
    CHECK(run("dims 'u:S3/(1234)'").status == 2);
    CHECK(run("build group:Q8").status == 2);
    CHECK(run("verify sl --n").status == 2);
    CHECK(run("").status == 2);
}

TEST_CASE("failed verification exits with 1 and still reports") {
    // The root relation with the sigma term on X^k_l fails at n = 3.
    Run r = run("verify sl --n 3 --q 7/5 --format json");
    CHECK(r.status == 1);
    AxiomReport rep = report_from_json(stable_json(r));
    CHECK_FALSE(rep.passed("(ii.c) root"));
    CHECK(rep.passed("(ii.c) root, sigma term on X^k_j"));
    CHECK(rep.passed("listed relations span Im(id - Upsilon)"));
}

TEST_CASE("JSON output parses and re-serializes byte-identically") {
    Run b = run("build sl --n 2 --format json");
    CHECK(b.status == 0);
    BraidedLieAlgebra L = braided_lie_from_json(stable_json(b));
    CHECK(to_json(L).dump(2) + "\n" == b.out);

    Run p = run("relations bmq --n 2 --format json");
    CHECK(to_json(presentation_from_json(stable_json(p))).dump(2) + "\n" == p.out);

    Run w = run("relations witten --format json");
    CHECK(to_json(presentation_from_json(stable_json(w))).dump(2) + "\n" == w.out);

    Run g = run("build group:S4 --format json");
    CHECK(to_json(group_from_json(stable_json(g))).dump(2) + "\n" == g.out);

    Run r = run("build rmatrix --n 3 --params r12=2,r13=3/2 --format json");
    CHECK(to_json(tensor_from_json(stable_json(r))).dump(2) + "\n" == r.out);

    Run v = run("verify rmatrix --n 3 --format json");
    CHECK(v.status == 0);
    CHECK(to_json(report_from_json(stable_json(v))).dump(2) + "\n" == v.out);

    Run d = run("dims 'u:S3/(12)' --max-degree 2 --format json");
    CHECK(d.out == "[\n  1,\n  3,\n  5\n]\n");
    CHECK(dims_from_json(stable_json(d)).values() == std::vector<uint64_t>{1, 3, 5});
}

TEST_CASE("progress goes to stderr and output is deterministic") {
    Run a = run("relations bmq --n 3 --q 11/7");
    Run b = run("relations bmq --n 3 --q 11/7");
    CHECK(a.out == b.out);
    CHECK(a.out.find("[qlie]") == std::string::npos);
    Run t = run("verify groups:S4");
    CHECK(t.status == 0);
}
