// End-to-end checks of the `peca` binary: the path comes in as argv[1] from
// the test harness, remaining arguments go to doctest.

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string g_cli_path;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("peca-cli-" + std::to_string(std::rand()) + "-" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

int run_cli(const std::string& args) {
    const std::string command = g_cli_path + " " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("run produces a bundle and identical reruns") {
    TempDir tmp;
    const auto out_a = (tmp.path / "a").string();
    const auto out_b = (tmp.path / "b").string();
    const std::string args = "run --rule 90 --width 129 --steps 64 --init single "
                             "--boundary dead --format csv --out ";
    REQUIRE(run_cli(args + out_a) == 0);
    REQUIRE(run_cli(args + out_b) == 0);
    CHECK(fs::exists(fs::path(out_a) / "diagram.csv"));
    CHECK(slurp(fs::path(out_a) / "diagram.csv") == slurp(fs::path(out_b) / "diagram.csv"));
}

TEST_CASE("run rejects invalid specs with a nonzero exit") {
    TempDir tmp;
    CHECK(run_cli("run --rule 300 --out " + tmp.path.string()) != 0);
    CHECK(run_cli("run --mode photonic --rule 255 --width 17 --steps 2 --out " +
                  tmp.path.string()) != 0);
    CHECK(run_cli("frobnicate") != 0);
}

TEST_CASE("compile reports weights for a feasible rule") {
    TempDir tmp;
    const auto out = tmp.path / "rule90.json";
    REQUIRE(run_cli("compile --rule 90 --out " + out.string()) == 0);
    const auto text = slurp(out);
    CHECK(text.find("\"feasible\": true") != std::string::npos);
    CHECK(text.find("\"margin\"") != std::string::npos);
}

TEST_CASE("census writes the csv table") {
    TempDir tmp;
    const auto out = tmp.path / "census.csv";
    REQUIRE(run_cli("census --grid 11 --out " + out.string()) == 0);
    const auto text = slurp(out);
    CHECK(text.rfind("rule_number,feasible,", 0) == 0);
    std::size_t lines = 0;
    for (const char c : text)
        lines += c == '\n' ? 1 : 0;
    CHECK(lines == 257); // header plus 256 rules
}

TEST_CASE("convert round-trips a diagram through formats") {
    TempDir tmp;
    const auto dir = tmp.path.string();
    REQUIRE(run_cli("run --rule 30 --width 65 --steps 32 --init single --format csv --out " +
                    dir) == 0);
    const auto csv = tmp.path / "diagram.csv";
    const auto json = tmp.path / "diagram.json";
    const auto csv2 = tmp.path / "again.csv";
    REQUIRE(run_cli("convert --in " + csv.string() + " --out " + json.string()) == 0);
    REQUIRE(run_cli("convert --in " + json.string() + " --out " + csv2.string()) == 0);
    CHECK(slurp(csv) == slurp(csv2));
}

TEST_CASE("analyze computes a fractal report from a saved diagram") {
    TempDir tmp;
    const auto dir = tmp.path.string();
    REQUIRE(run_cli("run --rule 90 --width 513 --steps 256 --init single --format json --out " +
                    dir) == 0);
    const auto report = tmp.path / "fractal.json";
    REQUIRE(run_cli("analyze --in " + dir + "/diagram.json --analysis fractal --out " +
                    report.string()) == 0);
    const auto text = slurp(report);
    CHECK(text.find("\"dimension\"") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-peca-binary> [doctest args]\n", argv[0]);
        return 2;
    }
    g_cli_path = argv[1];
    doctest::Context context;
    context.applyCommandLine(argc - 1, argv + 1);
    return context.run();
}
