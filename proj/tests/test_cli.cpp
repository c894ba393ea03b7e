#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string outfile = "cli_out.tmp";
    const std::string cmd =
        std::string(TETRAVOL_CLI_BIN) + " " + args + " > " + outfile + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    std::ifstream f(outfile);
    std::stringstream ss;
    ss << f.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

const char* kAdsLengths =
    "'{\"kind\":\"lengths\",\"values\":[2.2,0.45,0.5,2.4,0.42,0.48]}'";

}  // namespace

TEST_CASE("classify: known tuples and output fields") {
    const RunResult hyp =
        run("classify --inline '{\"kind\":\"lengths\",\"values\":[1,1,1,1,1,1]}'");
    CHECK(hyp.code == 0);
    CHECK(hyp.out.find("\"hyperbolic\"") != std::string::npos);
    CHECK(hyp.out.find("schema_version") != std::string::npos);
    const RunResult ads = run(
        "classify --inline "
        "'{\"kind\":\"lengths\",\"values\":[5,0.1,0.1,5,0.1,0.1]}'");
    CHECK(ads.code == 0);
    CHECK(ads.out.find("\"anti-de-sitter\"") != std::string::npos);
}

TEST_CASE("exit codes: parse, domain") {
    CHECK(run("classify --inline '{bad}'").code == 2);
    CHECK(run("classify --inline '{\"kind\":\"lengths\",\"values\":[1,2]}'").code ==
          2);
    CHECK(run("classify").code == 2);  // neither --input nor --inline
    // negative length is a domain error
    CHECK(run("volume --inline "
              "'{\"kind\":\"lengths\",\"values\":[-1,1,1,1,1,1]}'")
              .code == 3);
    // complex angles without a pi-pair are a domain error
    CHECK(run("volume --inline "
              "'{\"kind\":\"angles\",\"values\":[[0.3,0.1],[0.3,0],[0.3,0],"
              "[0.3,0],[0.3,0],[0.3,0]]}'")
              .code == 3);
    // non-decreasing b list is a config parse error
    CHECK(run(std::string("sweep --inline ") + kAdsLengths +
              " --b-list 0.3,0.4")
              .code == 2);
}

TEST_CASE("determinism: identical invocations give identical bytes") {
    const std::string cmd = std::string("b6j --inline ") + kAdsLengths + " --b 0.4";
    const RunResult a = run(cmd);
    const RunResult b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("classify and volume agree on the class") {
    const std::string in = std::string("--inline ") + kAdsLengths;
    const RunResult c = run("classify " + in);
    const RunResult v = run("volume " + in);
    CHECK(c.code == 0);
    CHECK(v.code == 0);
    CHECK(c.out.find("anti-de-sitter") != std::string::npos);
    CHECK(v.out.find("anti-de-sitter") != std::string::npos);
    CHECK(v.out.find("cov_tilde") != std::string::npos);
}

TEST_CASE("volume accepts the AdS angle shorthand") {
    const RunResult v = run(
        "volume --inline "
        "'{\"pi_pair\":0,\"im\":[1.7194,0.23801,0.26605,1.61577,0.22254,"
        "0.25579]}'");
    CHECK(v.code == 0);
    // this shorthand reproduces the angles of the reference AdS tuple
    CHECK(v.out.find("\"vol\": 3.0931") != std::string::npos);
}

TEST_CASE("file input matches inline input") {
    {
        std::ofstream f("cli_in.tmp");
        f << "{\"kind\":\"lengths\",\"values\":[2.2,0.45,0.5,2.4,0.42,0.48]}";
    }
    const RunResult a = run("volume --input cli_in.tmp");
    const RunResult b = run(std::string("volume --inline ") + kAdsLengths);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("sweep CSV output has the versioned header and fixed columns") {
    const RunResult r = run(std::string("sweep --inline ") + kAdsLengths +
                            " --b-list 0.5,0.4 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# tetravol-csv-v1: b,re_value,im_value,abs_value,"
                      "prediction,ratio,extracted",
                      0) == 0);
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 3);  // header + two rows
}

TEST_CASE("fn command emits FN coordinates and the trace dictionary") {
    const RunResult r = run(std::string("fn --inline ") + kAdsLengths);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"twists\"") != std::string::npos);
    CHECK(r.out.find("\"orientation\": \"+1\"") != std::string::npos);
    CHECK(r.out.find("trace_dictionary") != std::string::npos);
    // hyperbolic input is a domain error for fn
    CHECK(run("fn --inline '{\"kind\":\"lengths\",\"values\":[1,1,1,1,1,1]}'")
              .code == 3);
}
