#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

CmdResult run_cmd(const std::string& args) {
    std::string full = std::string(TTS_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(full.c_str(), "r");
    REQUIRE(p != nullptr);
    CmdResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, got);
    int rc = pclose(p);
    res.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "tts_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    fs::path p = scratch_dir() / name;
    std::ofstream f(p);
    f << content;
    return p.string();
}

std::string star10_edges() {
    std::ostringstream os;
    for (int v = 1; v < 10; v++) os << "x y" << v << "\n";
    return os.str();
}

std::string strip_wall_ms(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        size_t comma = line.rfind(',');
        out << line.substr(0, comma) << "\n";
    }
    return out.str();
}

}  // namespace

TEST_CASE("gen emits a commented edge list") {
    CmdResult r = run_cmd("gen --type star --n 4");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("# gen star n=4") == 0);
    REQUIRE(r.out.find("0 1") != std::string::npos);
}

TEST_CASE("verify accepts the paper schedule and prints the size") {
    std::string graph = write_file("star.txt", star10_edges());
    std::string sched = write_file("sched.txt", "0: x\n1: x\n2:\n");
    CmdResult r = run_cmd("verify --graph " + graph + " --rule strict " + sched);
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("TTS size=2") != std::string::npos);

    std::string bad = write_file("bad.txt", "0: x\n1:\n");
    CmdResult rej = run_cmd("verify --graph " + graph + " --rule strict " + bad);
    REQUIRE(rej.code == 1);
    REQUIRE(rej.out.find("Q-final-not-V") != std::string::npos);
}

TEST_CASE("exact over the cap exits with a domain error") {
    std::ostringstream cyc;
    for (int v = 0; v < 25; v++) cyc << v << " " << (v + 1) % 25 << "\n";
    std::string graph = write_file("c25.txt", cyc.str());
    CmdResult r = run_cmd("exact --graph " + graph + " --rule strict");
    REQUIRE(r.code == 1);
    REQUIRE(r.out.find("cap") != std::string::npos);
}

TEST_CASE("exact solves the star") {
    std::string graph = write_file("star.txt", star10_edges());
    CmdResult r = run_cmd("exact --graph " + graph + " --rule strict --what tts");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("size=2") != std::string::npos);
    CmdResult ts = run_cmd("exact --graph " + graph +
                           " --rule strict --what ts --model progressive");
    REQUIRE(ts.code == 0);
    REQUIRE(ts.out.find("size=1") != std::string::npos);
}

TEST_CASE("greedy prints a verified schedule") {
    std::string graph = write_file("star.txt", star10_edges());
    CmdResult r = run_cmd("greedy --graph " + graph + " --rule strict --mode tts");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("0: x\n") != std::string::npos);
    REQUIRE(r.out.find("size=2") != std::string::npos);
    CmdResult ts = run_cmd("greedy --graph " + graph + " --rule strict --mode ts");
    REQUIRE(ts.code == 0);
    REQUIRE(ts.out.find("size=6") != std::string::npos);
}

TEST_CASE("tree subcommand") {
    std::string graph = write_file("p4.txt", "a b\nb c\nc d\n");
    CmdResult r = run_cmd("tree --graph " + graph + " --rule strict --schedule");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("size=4") != std::string::npos);
}

TEST_CASE("bounds subcommand") {
    std::ostringstream cyc;
    for (int v = 0; v < 8; v++) cyc << v << " " << (v + 1) % 8 << "\n";
    std::string graph = write_file("c8.txt", cyc.str());
    CmdResult r = run_cmd("bounds --graph " + graph + " --rule strict");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("even: 8") != std::string::npos);
    REQUIRE(r.out.find("best: 8 (even)") != std::string::npos);
}

TEST_CASE("ilp-export variable count") {
    std::string graph = write_file("star.txt", star10_edges());
    CmdResult r = run_cmd("ilp-export --graph " + graph + " --rule strict --k 3");
    REQUIRE(r.code == 0);
    // 2n(k+1) = 80 binary variables
    size_t count = 0, pos = 0;
    std::string binary_section = r.out.substr(r.out.find("Binary"));
    while ((pos = binary_section.find("\n ", pos)) != std::string::npos) {
        count++;
        pos += 2;
    }
    REQUIRE(count == 80);
}

TEST_CASE("transform round trip") {
    std::string graph = write_file("k2.txt", "0 1\n");
    std::string og = (scratch_dir() / "cover.txt").string();
    std::string ot = (scratch_dir() / "cover_tau.txt").string();
    CmdResult r = run_cmd("transform --graph " + graph + " --rule strict --double-cover" +
                          " --out-graph " + og + " --out-thresholds " + ot);
    REQUIRE(r.code == 0);
    CmdResult check = run_cmd("exact --graph " + og + " --rule file:" + ot + " --what tts");
    REQUIRE(check.code == 0);
    REQUIRE(check.out.find("size=4") != std::string::npos);  // 2 * MTT(K_2)
}

TEST_CASE("usage errors exit with 2") {
    CmdResult r = run_cmd("no-such-command");
    REQUIRE(r.code == 2);
    CmdResult missing = run_cmd("verify");
    REQUIRE(missing.code == 2);
}

TEST_CASE("experiment CSV is stable for a fixed seed") {
    std::string args = "experiment --model ba --n 10 --instances 3 --seed 42 --node-cap 12";
    CmdResult a = run_cmd(args);
    CmdResult b = run_cmd(args + " --workers 3");
    REQUIRE(a.code == 0);
    REQUIRE(strip_wall_ms(a.out) == strip_wall_ms(b.out));

    std::ifstream golden(std::string(TTS_SOURCE_DIR) + "/tests/golden/experiment_ba10.csv");
    REQUIRE(golden.good());
    std::stringstream gs;
    gs << golden.rdbuf();
    REQUIRE(strip_wall_ms(a.out) == gs.str());
}
