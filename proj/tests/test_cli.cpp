#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "folia/cli.hpp"
#include "folia/exterior.hpp"
#include "folia/form_io.hpp"

using namespace folia;

namespace {

std::string field(const CommandReport& r, const std::string& key) {
    const std::string* v = r.find(key);
    return v ? *v : "<missing>";
}

std::string tempPath(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("folia_test_" + name)).string();
}

NamedForm readForm(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseFormDocument(ss.str());
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("invariants of the harmonic quartic") {
        const CommandReport r = runCommand({"invariants", "0,1,0,-1,0"});
        CHECK(r.exitCode == kExitOk);
        CHECK(field(r, "Q") == "1/4");
        CHECK(field(r, "C") == "0");
        CHECK(field(r, "D") == "1/64");
        CHECK(field(r, "jRaw") == "1");
        CHECK(field(r, "jClassical") == "1728");
        CHECK(field(r, "pattern") == "[1,1,1,1]");
        CHECK(field(r, "resultantMatchesD") == "pass");
    }

    TEST_CASE("invariants over F_p and classification") {
        const CommandReport r = runCommand({"invariants", "1,0,0,4,0", "--prime", "7"});
        CHECK(r.exitCode == kExitOk);
        CHECK(field(r, "field") == "F_7");
        CHECK(field(r, "jClassical") == "0");
        CHECK(field(runCommand({"classify", "0,0,1,0,0"}), "class") == "N");
        CHECK(field(runCommand({"veronese", "--degree", "4", "--point", "1,1"}), "coefficients") == "1,4,6,4,1");
    }

    TEST_CASE("exit codes by failure class") {
        CHECK(runCommand({}).exitCode == kExitParse);
        CHECK(runCommand({"nonsense"}).exitCode == kExitParse);
        CHECK(runCommand({"invariants", "1,x,3"}).exitCode == kExitParse);
        CHECK(runCommand({"invariants", "0,0,0,0,0"}).exitCode == kExitPrecondition);
        CHECK(runCommand({"invariants", "1,2,3"}).exitCode == kExitPrecondition);
        CHECK(runCommand({"build", "log", "--factor", "x0", "--factor", "x1", "--factor", "x2", "--weights", "1,1,1"})
                  .exitCode == kExitPrecondition);
        CHECK(runCommand({"probe", "--prime", "4", "--target", "base-locus"}).exitCode == kExitPrecondition);
        CHECK(runCommand({"probe", "--prime", "7", "--target", "elsewhere"}).exitCode == kExitParse);
        CHECK(runCommand({"--help"}).exitCode == kExitOk);
    }

    TEST_CASE("check reports the first nonzero residual") {
        const std::string path = tempPath("contact.form");
        {
            std::ofstream out(path);
            out << R"({"vars":["x0","x1","x2","x3"],"coeffs":["x1","-x0","x3","-x2"]})";
        }
        const CommandReport r = runCommand({"check", "--form", path});
        CHECK(r.exitCode == kExitCertification);
        CHECK(field(r, "integrable") == "fail");
        CHECK(field(r, "integrabilityResidual") == "d x0^d x1^d x2: -2*x3");
        std::remove(path.c_str());
    }

    TEST_CASE("built forms round trip through files") {
        const std::string path = tempPath("built.form");
        const std::vector<std::vector<std::string>> commands{
            {"build", "rational", "--f1", "x0^2", "--f2", "x1*x2", "--arity", "4", "--out", path},
            {"build", "log", "--factor", "x0", "--factor", "x1", "--factor", "x0 + x1 + x2", "--weights", "1,1,-2", "--out", path},
            {"build", "pullback", "--matrix", "1,0,0,1;0,1,0,2;0,0,1,3", "--eta", "x1;-x0;0", "--out", path},
            {"exceptional", "derive", "--out", path},
            {"exceptional", "paper-form", "--out", path},
        };
        for (const auto& cmd : commands) {
            CAPTURE(cmd[1]);
            const CommandReport r = runCommand(cmd);
            REQUIRE(r.exitCode == kExitOk);
            const NamedForm back = readForm(path);
            const NamedForm again = parseFormDocument(formatFormDocument(back));
            CHECK(again.form == back.form);
            const std::string key = cmd[0] == "build" ? "form" : "omegaBar";
            CHECK(formatFormTerms(back.form, back.vars) == field(r, key) + "\n");
            CHECK(runCommand({"check", "--form", path}).exitCode == kExitOk);
        }
        std::remove(path.c_str());
    }

    TEST_CASE("exceptional reports") {
        const CommandReport t = runCommand({"exceptional", "tangent-dim"});
        CHECK(t.exitCode == kExitOk);
        CHECK(field(t, "rawKernelDim") == "14");
        CHECK(field(t, "projectiveDim") == "13");
        const CommandReport d = runCommand({"exceptional", "double-tangency"});
        CHECK(field(d, "constant") == "1/16");
        CHECK(d.exitCode == kExitOk);
        CHECK(runCommand({"exceptional", "fields"}).exitCode == kExitOk);
    }

    TEST_CASE("probe verdicts") {
        const CommandReport ok = runCommand({"probe", "--prime", "7", "--target", "base-locus"});
        CHECK(ok.exitCode == kExitOk);
        CHECK(field(ok, "ZeroLocusCount") == "64");
        const CommandReport five = runCommand({"probe", "--prime", "5", "--target", "sing-d-omega-bar"});
        CHECK(five.exitCode == kExitCertification);
        CHECK(field(five, "singlePoint") == "fail");
    }

    TEST_CASE("json output carries the same fields") {
        CommandReport r = runCommand({"exceptional", "double-tangency", "--json"});
        CHECK(r.json);
        const std::string j = r.render();
        CHECK(j.find("\"constant\": \"1/16\"") != std::string::npos);
        CHECK(j.find("\"exitCode\": 0") != std::string::npos);
    }

    TEST_CASE("property suite command") {
        const CommandReport r = runCommand({"properties", "--seed", "5", "--count", "3"});
        CHECK(r.exitCode == kExitOk);
        CHECK(field(r, "allPassed") == "pass");
    }
}
