#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

// End-to-end checks against the installed binary (paths injected by CMake).

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("count") {
    RunResult res = run("count " + data("k43.hg") + " --profile 0,1 --mode maximal");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "{\"count\":4,\"mode\":\"maximal\",\"n\":4,\"profile\":\"0,1\",\"r\":3}\n");

    res = run("count " + data("k43.hg") + " --profile all");
    CHECK(res.out.find("\"count\":16") != std::string::npos);

    res = run("count " + data("triple.hg") + " --profile strong --mode maximal");
    CHECK(res.out.find("\"count\":3") != std::string::npos);

    res = run("--tsv count " + data("triple.hg") + " --profile strong --mode maximal");
    CHECK(res.out == "n\tr\tprofile\tmode\tcount\n3\t3\t0,1\tmaximal\t3\n");

    // global flags are accepted after the subcommand too
    res = run("count " + data("triple.hg") + " --profile strong --mode maximal --tsv");
    CHECK(res.out == "n\tr\tprofile\tmode\tcount\n3\t3\t0,1\tmaximal\t3\n");
}

TEST_CASE("enumerate") {
    RunResult res = run("enumerate " + data("triple.hg") + " --profile 0,1");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "\n0\n1\n2\n");

    res = run("enumerate " + data("two_triples.hg") + " --profile 0,1 --mode maximal");
    CHECK(res.exit_code == 0);
    int lines = 0;
    for (char c : res.out) lines += c == '\n';
    CHECK(lines == 9);
}

TEST_CASE("construct golden output") {
    RunResult res = run("construct matching --n 6 --r 3");
    CHECK(res.out == "6 3\n0 1 2\n3 4 5\n");
    res = run("construct star --n 3");
    CHECK(res.out == "3 2\n0 1\n0 2\n");
    res = run("construct msis-extremal --n 8");
    CHECK(res.exit_code == 0);
    res = run("construct sunflower --n 14 --r 3 --profile 0,1");
    CHECK(res.exit_code == 0);
    res = run("construct nonsense --n 4 --r 2");
    CHECK(res.exit_code == 2);
}

TEST_CASE("bounds") {
    RunResult res = run("bounds g 5");
    CHECK(res.out.find("\"exact\":\"16/3\"") != std::string::npos);
    res = run("bounds g 8");
    CHECK(res.out.find("\"exact\":\"16\"") != std::string::npos);
    res = run("bounds mm 6");
    CHECK(res.out.find("\"exact\":\"9\"") != std::string::npos);
    res = run("bounds exponent --profile 0,1 --r 3");
    CHECK(res.out.find("\"p\":1") != std::string::npos);
    res = run("bounds table1 --profile 0,1 --n 5 --which g");
    CHECK(res.out.find("\"exact\":\"17\"") != std::string::npos);
    res = run("bounds table1 --profile 1 --n 1 --which g");
    CHECK(res.out.find("undefined") != std::string::npos);
    res = run("bounds parity --r 3 --n 6");
    CHECK(res.out.find("\"exact\":\"16\"") != std::string::npos);
    res = run("bounds prop1 --case v --r 3 --n 7");
    CHECK(res.out.find("\"exact\":\"4\"") != std::string::npos);
    res = run("bounds prop1 --case ix --r 3 --n 7");
    CHECK(res.exit_code == 2);
}

TEST_CASE("search-extremal") {
    RunResult res =
        run("search-extremal --n 4 --r 2 --profile 0,1 --mode all --no-isolated");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"maximum\":9") != std::string::npos);
    CHECK(res.out.find("\"witness\":\"4 2\\n0 1\\n0 2\\n0 3\\n\"") != std::string::npos);

    res = run("--tsv search-extremal --n 3..5 --r 2 --profile 1 --mode all --no-isolated");
    CHECK(res.out == "n\tr\tprofile\tmode\tno_isolated\tiso\tmaximum\texplored\n"
                     "3\t2\t1\tall\t1\t0\t2\t4\n"
                     "4\t2\t1\tall\t1\t0\t4\t41\n"
                     "5\t2\t1\tall\t1\t0\t4\t768\n");

    res = run("search-extremal --n 40 --r 2 --profile 0,1");
    CHECK(res.exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("count missing-file.hg --profile 0,1").exit_code == 2);
    CHECK(run("count " + data("bad_edge.hg") + " --profile 0,1").exit_code == 2);
    CHECK(run("count " + data("triple.hg") + " --profile 9").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("--out writes the payload to a file") {
    std::string path = "/tmp/atrans_test_out.json";
    std::remove(path.c_str());
    RunResult res = run("--out " + path + " bounds g 8");
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::array<char, 256> buf{};
    std::string content(buf.data(), fread(buf.data(), 1, buf.size(), f));
    fclose(f);
    std::remove(path.c_str());
    CHECK(content.find("\"exact\":\"16\"") != std::string::npos);
}

TEST_CASE("stdout is byte-stable") {
    std::string args = "search-extremal --n 4 --r 3 --profile 0,1 --mode maximal";
    CHECK(run(args).out == run(args).out);
    CHECK(run("bounds g 11").out == run("bounds g 11").out);
}
