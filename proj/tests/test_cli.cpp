#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#ifndef CURVEKIT_CLI
#define CURVEKIT_CLI "curvekit"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// Runs the CLI with a private cache directory.
Run cli(const std::string& args) {
    static const fs::path cache = [] {
        fs::path p = fs::temp_directory_path() / ("curvekit-cli-" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    const std::string cmd = "CURVEKIT_CACHE='" + cache.string() + "' '" CURVEKIT_CLI "' " + args + " 2>/dev/null";
    Run r;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(cmd.c_str(), "r"), ::pclose);
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) r.out.append(buf.data(), n);
    const int raw = ::pclose(pipe.release());
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

nlohmann::json report(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("selfint and intersect") {
    Run r = cli("selfint a1A2");
    REQUIRE(r.status == 0);
    auto j = report(r);
    CHECK(j["command"] == "selfint");
    CHECK(j["genus"] == 2);
    CHECK(r.out.find("\"result\"") != std::string::npos);

    Run s = cli("intersect a1 b1");
    REQUIRE(s.status == 0);
    CHECK(s.out.find('1') != std::string::npos);
}

TEST_CASE("output is deterministic") {
    cli("census --max-len 3");  // warm the cache; from_cache differs on the first run
    CHECK(cli("census --max-len 3").out == cli("census --max-len 3").out);
    CHECK(cli("hexagon rigidity --graphs 5 --seed 7 --max-walk 5").out ==
          cli("hexagon rigidity --graphs 5 --seed 7 --max-walk 5 --jobs 2").out);
}

TEST_CASE("tsv output") {
    Run r = cli("--tsv selfint a1");
    REQUIRE(r.status == 0);
    CHECK(r.out.find('\t') != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(cli("selfint a9").status == 2);
    CHECK(cli("selfint a1A1").status == 2);
    CHECK(cli("intersect a1").status == 2);
    CHECK(cli("nonsense").status == 2);
    CHECK(cli("hexagon loops /nonexistent/graph.txt").status != 0);
    Run e = cli("selfint a9");
    CHECK(report(e).contains("error"));
}

}
