#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef EXACTLAB_CLI_PATH
#error "EXACTLAB_CLI_PATH must point at the built CLI binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
    int exit_code = -1;
    std::string output;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "exactlab-cli-tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    const fs::path p = work_dir() / name;
    std::ofstream out(p);
    out << content;
    return p.string();
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out_path = work_dir() / ("out-" + std::to_string(counter++) + ".txt");
    const std::string cmd =
        std::string(EXACTLAB_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = (raw == -1) ? -1 : WEXITSTATUS(raw);
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.output = buf.str();
    return r;
}

const std::string& a2_spec() {
    static const std::string path =
        write_file("a2.spec", "algebra dynkin\nvertices 2\narrow a 1 2\n");
    return path;
}

const std::string& a3_spec() {
    static const std::string path = write_file(
        "a3.spec", "# linear A_3\nalgebra dynkin\nvertices 3\narrow a 1 2\narrow b 2 3\n");
    return path;
}

const std::string& kron_spec() {
    static const std::string path = write_file("kron.spec", "algebra kronecker\n");
    return path;
}

}  // namespace

TEST_CASE("indecs lists the three A_2 modules") {
    const CliResult r = run_cli("--spec " + a2_spec() + " indecs");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    CHECK(j[0]["id"] == "m0");
    CHECK(j[0]["dims"] == json::array({1, 1}));
    CHECK(j[0]["projective"] == true);
    CHECK(j[0]["injective"] == true);
    CHECK(j[1]["dims"] == json::array({0, 1}));
    CHECK(j[1]["tau"].is_null());          // projective
    CHECK(j[2]["tau"] == "m1");            // tau (1,0) = (0,1)
}

TEST_CASE("spec parse errors carry the line number") {
    const std::string bad = write_file("bad.spec", "vertices 3\n");
    const CliResult r = run_cli("--spec " + bad + " indecs");
    CHECK(r.exit_code == 2);
    const json j = json::parse(r.output);
    CHECK(j["error"]["kind"] == "parse");
    CHECK(j["error"]["line"] == 1);
}

TEST_CASE("non-Dynkin quivers are rejected with the computed graph label") {
    const std::string cyc = write_file(
        "cyc.spec", "algebra dynkin\nvertices 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\n");
    const CliResult r = run_cli("--spec " + cyc + " indecs");
    CHECK(r.exit_code == 2);
    const json j = json::parse(r.output);
    CHECK(j["error"]["kind"] == "parse");
    const std::string msg = j["error"]["message"];
    CHECK(msg.find("not of Dynkin type") != std::string::npos);
    CHECK(msg.find("cyclic") != std::string::npos);
}

TEST_CASE("missing or unreadable specs fail cleanly") {
    CHECK(run_cli("indecs").exit_code == 2);  // --spec is required
    const CliResult r = run_cli("--spec /nonexistent/fake.spec indecs");
    CHECK(r.exit_code == 2);
    CHECK(json::parse(r.output)["error"]["kind"] == "io");
}

TEST_CASE("enumerate counts the A_3 structures deterministically") {
    const CliResult first = run_cli("--spec " + a3_spec() + " enumerate");
    REQUIRE(first.exit_code == 0);
    const json j = json::parse(first.output);
    CHECK(j["algebra"] == "A3");
    CHECK(j["count"] == 8);
    REQUIRE(j["structures"].is_array());
    CHECK(j["structures"].size() == 8);

    const CliResult second = run_cli("--spec " + a3_spec() + " enumerate");
    CHECK(second.exit_code == 0);
    CHECK(first.output == second.output);  // byte-identical reports
}

TEST_CASE("ar emits the sequences as JSON and the quiver as DOT") {
    const CliResult plain = run_cli("--spec " + a3_spec() + " ar");
    REQUIRE(plain.exit_code == 0);
    const json j = json::parse(plain.output);
    CHECK(j["algebra"] == "A3");
    CHECK(j["sequences"].size() == 3);

    const CliResult dot = run_cli("--spec " + a3_spec() + " ar --dot");
    REQUIRE(dot.exit_code == 0);
    CHECK(dot.output.find("digraph") != std::string::npos);
    CHECK(dot.output.find("dashed") != std::string::npos);  // tau arrows
    CHECK(dot.output.find("(1,1,1)") != std::string::npos);
}

TEST_CASE("ideal expressions: powers, products, and the zero result") {
    const CliResult caret = run_cli("--spec " + a2_spec() + " ideal rad^2");
    const CliResult star = run_cli("--spec " + a2_spec() + " ideal rad*rad");
    REQUIRE(caret.exit_code == 0);
    REQUIRE(star.exit_code == 0);
    CHECK(caret.output == star.output);
    CHECK(json::parse(caret.output) == json::object());  // rad^2 = 0 on A_2

    const CliResult omega = run_cli("--spec " + a2_spec() + " ideal rad^w");
    REQUIRE(omega.exit_code == 0);
    CHECK(json::parse(omega.output) == json::object());

    const CliResult rad = run_cli("--spec " + a2_spec() + " ideal rad");
    REQUIRE(rad.exit_code == 0);
    const json jr = json::parse(rad.output);
    CHECK(jr.size() == 2);
    CHECK(jr.contains("pair:(m1,m0)"));
    CHECK(jr.contains("pair:(m0,m2)"));

    const CliResult add = run_cli("--spec " + a2_spec() + " ideal add{m0}");
    REQUIRE(add.exit_code == 0);
    CHECK(json::parse(add.output).contains("pair:(m0,m0)"));

    // Parenthesized ordinal exponent: rad^(w+1) = (rad^w)^2 = 0.
    const CliResult ord = run_cli("--spec " + a2_spec() + " ideal \"rad^(w+1)\"");
    REQUIRE(ord.exit_code == 0);
    CHECK(json::parse(ord.output) == json::object());

    // Sum and intersection.
    const CliResult sum = run_cli("--spec " + a2_spec() + " ideal \"rad+add{m0}\"");
    const CliResult just_add = run_cli("--spec " + a2_spec() + " ideal add{m0}");
    CHECK(sum.output == just_add.output);
    const CliResult inter = run_cli("--spec " + a2_spec() + " ideal \"rad&add{m0}\"");
    CHECK(inter.output == rad.output);
}

TEST_CASE("malformed ideal expressions are usage errors") {
    for (const std::string expr : {"rad^", "foo", "rad**rad", "add{m9}", "(rad"}) {
        const CliResult r = run_cli("--spec " + a2_spec() + " ideal \"" + expr + "\"");
        CHECK(r.exit_code == 2);
        CHECK(json::parse(r.output)["error"]["kind"] == "usage");
    }
}

TEST_CASE("generated ideals can come from a JSON morphism file") {
    // The inclusion (0,1) -> (1,1) of A_2 as an explicit generator.
    const json gen = {
        {"generators",
         {{{"source", {{"dims", {0, 1}}, {"maps", {{"a", {{"rows", 1}, {"cols", 0}, {"entries", {json::array()}}}}}}}},
           {"target", {{"dims", {1, 1}}, {"maps", {{"a", {{"rows", 1}, {"cols", 1}, {"entries", {{"1"}}}}}}}}},
           {"components",
            {{{"rows", 1}, {"cols", 0}, {"entries", {json::array()}}},
             {{"rows", 1}, {"cols", 1}, {"entries", {{"1"}}}}}}}}}};
    const std::string path = write_file("gen.json", gen.dump(2));

    const CliResult r = run_cli("--spec " + a2_spec() + " ideal \"gen(" + path + ")\"");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j.size() == 1);
    CHECK(j.contains("pair:(m1,m0)"));
}

TEST_CASE("relext emits the A_2 table in JSON and CSV") {
    const CliResult r =
        run_cli("--spec " + a2_spec() + " relext --structure m0,m2");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["structure-U"] == json::array({"m0", "m2"}));
    int nonzero = 0;
    for (const json& row : j["table"])
        if (row["dim"] != 0) {
            ++nonzero;
            CHECK(row["x"] == "m2");
            CHECK(row["y"] == "m1");
            CHECK(row["dim"] == 1);
        }
    CHECK(nonzero == 1);

    const CliResult csv =
        run_cli("--spec " + a2_spec() + " relext --structure m0,m2 --csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output.rfind("x,y,dim\n", 0) == 0);
    CHECK(csv.output.find("m2,m1,1\n") != std::string::npos);

    // Closed sets must contain the injectives.
    const CliResult bad = run_cli("--spec " + a2_spec() + " relext --structure m1");
    CHECK(bad.exit_code == 2);
    CHECK(json::parse(bad.output)["error"]["kind"] == "usage");
}

TEST_CASE("generate reads conflation files and reports the closed set") {
    // The A_2 almost split sequence 0 -> (0,1) -> (1,1) -> (1,0) -> 0.
    const json conf = {
        {"start", {{"dims", {0, 1}}, {"maps", {{"a", {{"rows", 1}, {"cols", 0}, {"entries", {json::array()}}}}}}}},
        {"middle", {{"dims", {1, 1}}, {"maps", {{"a", {{"rows", 1}, {"cols", 1}, {"entries", {{"1"}}}}}}}}},
        {"end", {{"dims", {1, 0}}, {"maps", {{"a", {{"rows", 0}, {"cols", 1}, {"entries", json::array()}}}}}}},
        {"inflation",
         {{{"rows", 1}, {"cols", 0}, {"entries", {json::array()}}},
          {{"rows", 1}, {"cols", 1}, {"entries", {{"1"}}}}}},
        {"deflation",
         {{{"rows", 1}, {"cols", 1}, {"entries", {{"1"}}}},
          {{"rows", 0}, {"cols", 1}, {"entries", json::array()}}}}};
    const std::string path = write_file("conflation.json", conf.dump(2));

    const CliResult r = run_cli("--spec " + a2_spec() + " generate --conflation " + path);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["closed_set"] == json::array({"m0", "m2"}));
    REQUIRE(j["generators"].size() == 1);
    CHECK(j["generators"][0]["middle_dims"] == json::array({1, 1}));
}

TEST_CASE("verify runs suites and reflects the verdict in the exit code") {
    const CliResult lemma = run_cli("--spec " + a2_spec() + " verify lemma51 --corpus 20");
    REQUIRE(lemma.exit_code == 0);
    const json jl = json::parse(lemma.output);
    CHECK(jl["suite"] == "lemma51");
    CHECK(jl["passed"] == true);
    CHECK(jl["detail"]["radical"]["negative-certified"] == true);

    const CliResult thd = run_cli("--spec " + a3_spec() + " verify theoremD");
    REQUIRE(thd.exit_code == 0);
    const json jt = json::parse(thd.output);
    CHECK(jt["passed"] == true);
    CHECK(jt["detail"]["subsets"] == 64);

    const CliResult unknown = run_cli("--spec " + a2_spec() + " verify nosuchsuite");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("kron closedset renders the classified families") {
    const CliResult radp = run_cli("--spec " + kron_spec() + " kron closedset radP");
    REQUIRE(radp.exit_code == 0);
    const json jp = json::parse(radp.output);
    CHECK(jp["finite"] == json::array());
    CHECK(jp["prufer"] == json::array());
    CHECK(jp["adic"] == json::array({"0", "1", "inf"}));
    CHECK(jp["generic"] == true);

    const CliResult ist = run_cli("--spec " + kron_spec() + " kron closedset \"ist{0;1}\"");
    REQUIRE(ist.exit_code == 0);
    const json ji = json::parse(ist.output);
    CHECK(ji["prufer"] == json::array({"0"}));
    CHECK(ji["adic"] == json::array({"1"}));
    CHECK(ji["generic"] == true);

    // Kronecker queries demand a kronecker spec.
    const CliResult wrong = run_cli("--spec " + a2_spec() + " kron closedset radP");
    CHECK(wrong.exit_code == 2);
    CHECK(json::parse(wrong.output)["error"]["kind"] == "usage");
}

TEST_CASE("custom label sets flow from the spec file into the families") {
    const std::string spec =
        write_file("kron-labels.spec", "algebra kronecker\nlabels 0 1/2 inf\nbound 4\n");
    const CliResult r = run_cli("--spec " + spec + " kron closedset radQ");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["prufer"] == json::array({"0", "1/2", "inf"}));
    CHECK(j["adic"] == json::array());
}
