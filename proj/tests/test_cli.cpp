#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "matchbook/generators.hpp"
#include "matchbook/io.hpp"

using namespace matchbook;
namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    if (const char* env = std::getenv("MATCHBOOK_CLI")) return env;
    return "./tools/matchbook";  // running from the build directory
}

struct CmdResult {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("matchbook-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
    fs::path file(const std::string& name) const { return path / name; }
};

CmdResult run(const TempDir& dir, const std::string& args) {
    fs::path out = dir.file("stdout.txt");
    fs::path err = dir.file("stderr.txt");
    std::string cmd = cli_path() + " " + args + " > " + out.string() + " 2> " + err.string();
    int rc = std::system(cmd.c_str());
    CmdResult result;
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("embed produces a verified certificate") {
    TempDir dir;
    write_file(dir.file("d.graph"), serialize_graph(gen_family("diamond", 4)));
    auto r = run(dir, "embed -g " + dir.file("d.graph").string() + " -o " +
                          dir.file("d.cert").string());
    CHECK(r.status == 0);
    CHECK(slurp(dir.file("d.cert")) ==
          "matchbook-cert v1\norder 0 1 2 3\npages 3\n"
          "edge 0 1 0\nedge 0 2 2\nedge 0 3 1\nedge 1 2 1\nedge 2 3 0\n");

    auto v = run(dir, "verify -g " + dir.file("d.graph").string() + " -c " +
                          dir.file("d.cert").string());
    CHECK(v.status == 0);
    CHECK(v.out.find("ok") == 0);
}

TEST_CASE("verify rejects a tampered certificate with exit 3") {
    TempDir dir;
    write_file(dir.file("d.graph"), serialize_graph(gen_family("diamond", 4)));
    // (1,2) moved onto page 0 where it collides with (0,1) at vertex 1
    write_file(dir.file("bad.cert"),
               "matchbook-cert v1\norder 0 1 2 3\npages 3\n"
               "edge 0 1 0\nedge 0 2 2\nedge 0 3 1\nedge 1 2 0\nedge 2 3 0\n");
    auto r = run(dir, "verify -g " + dir.file("d.graph").string() + " -c " +
                          dir.file("bad.cert").string());
    CHECK(r.status == 3);
    CHECK(r.out.find("matching") != std::string::npos);

    auto js = run(dir, "verify --json -g " + dir.file("d.graph").string() + " -c " +
                           dir.file("bad.cert").string());
    CHECK(js.status == 3);
    CHECK(js.out.find("\"ok\": false") != std::string::npos);
}

TEST_CASE("exact prints the thickness") {
    TempDir dir;
    write_file(dir.file("c5.graph"), serialize_graph(gen_family("cycle", 5)));
    auto r = run(dir, "exact -g " + dir.file("c5.graph").string());
    CHECK(r.status == 0);
    CHECK(r.out == "mbt=3\n");

    auto fixed = run(dir, "exact --fixed-order -g " + dir.file("c5.graph").string());
    CHECK(fixed.status == 0);
    CHECK(fixed.out == "mbt=3\n");
}

TEST_CASE("exact respects the size cap with exit 4") {
    TempDir dir;
    write_file(dir.file("big.graph"), serialize_graph(gen_maximal_outerplanar(10, 1)));
    auto r = run(dir, "exact -g " + dir.file("big.graph").string());
    CHECK(r.status == 4);
}

TEST_CASE("gen, embed, verify round-trip through files") {
    TempDir dir;
    auto g = run(dir, "gen --family random -n 30 --seed 17 --prob 0.6 -o " +
                          dir.file("g.graph").string());
    CHECK(g.status == 0);
    auto e = run(dir, "embed -g " + dir.file("g.graph").string() + " -o " +
                          dir.file("g.cert").string() + " --render " + dir.file("g.svg").string());
    CHECK(e.status == 0);
    auto v = run(dir, "verify -g " + dir.file("g.graph").string() + " -c " +
                          dir.file("g.cert").string());
    CHECK(v.status == 0);
    CHECK(slurp(dir.file("g.svg")).find("<svg") == 0);
}

TEST_CASE("embed rejects non-outerplanar input with exit 3") {
    TempDir dir;
    write_file(dir.file("k4.graph"), serialize_graph(gen_family("k4", 4)));
    auto r = run(dir, "embed -g " + dir.file("k4.graph").string());
    CHECK(r.status == 3);
}

TEST_CASE("malformed documents exit 2") {
    TempDir dir;
    write_file(dir.file("broken.graph"), "matchbook-graph v1\nn 3\nedge 0 zero\n");
    auto r = run(dir, "embed -g " + dir.file("broken.graph").string());
    CHECK(r.status == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("enumerate streams documents") {
    TempDir dir;
    auto count = run(dir, "enumerate -n 4 --count");
    CHECK(count.status == 0);
    CHECK(count.out == "3\n");

    auto stream = run(dir, "enumerate -n 4");
    CHECK(stream.status == 0);
    // three documents separated by blank lines
    CHECK(stream.out.find("matchbook-graph v1") == 0);
    size_t docs = 0, pos = 0;
    while ((pos = stream.out.find("matchbook-graph v1", pos)) != std::string::npos) {
        ++docs;
        pos += 1;
    }
    CHECK(docs == 3);
}

TEST_CASE("bench summarizes a corpus") {
    TempDir dir;
    fs::create_directories(dir.file("corpus"));
    for (int i = 0; i < 4; ++i) {
        Graph g = gen_maximal_outerplanar(8 + i, i);
        write_file(dir.file("corpus") / ("g" + std::to_string(i) + ".graph"),
                   serialize_graph(g));
    }
    auto r = run(dir, "bench --corpus " + dir.file("corpus").string() + " --jobs 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("4 graphs, 4 ok, 0 failed") != std::string::npos);
}

TEST_CASE("embed output is byte-identical across runs") {
    TempDir dir;
    write_file(dir.file("g.graph"), serialize_graph(gen_maximal_outerplanar(24, 5)));
    auto r1 = run(dir, "embed -g " + dir.file("g.graph").string() + " -o " +
                           dir.file("c1.cert").string() + " --render " +
                           dir.file("r1.svg").string());
    auto r2 = run(dir, "embed -g " + dir.file("g.graph").string() + " -o " +
                           dir.file("c2.cert").string() + " --render " +
                           dir.file("r2.svg").string());
    CHECK(r1.status == 0);
    CHECK(r2.status == 0);
    CHECK(slurp(dir.file("c1.cert")) == slurp(dir.file("c2.cert")));
    CHECK(slurp(dir.file("r1.svg")) == slurp(dir.file("r2.svg")));
}

}  // TEST_SUITE
