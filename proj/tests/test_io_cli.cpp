#include <doctest.h>

#include <tproduct/bench.hpp>
#include <tproduct/cli.hpp>
#include <tproduct/factorizations.hpp>
#include <tproduct/io.hpp>
#include <tproduct/norms_prox.hpp>
#include <tproduct/tprod_ops.hpp>

#include "test_helpers.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace tproduct;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("tproduct_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "tproduct");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string bytes_of(const Tensor3& a) {
    std::ostringstream s(std::ios::binary);
    io::write_tensor(s, a);
    return s.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_SUITE("tensor-io") {

TEST_CASE("TNS3 byte layout") {
    const Tensor3 t(Shape{1, 2, 3}, {1.0, -2.0, 0.5, 0.0, 3.25, 1e-300});
    const std::string bytes = bytes_of(t);
    REQUIRE(bytes.size() == 32 + 6 * 8);
    CHECK(bytes.substr(0, 4) == "TNS3");
    CHECK(bytes.substr(4, 4) == std::string("\x01\x00\x00\x00", 4));
    CHECK(bytes.substr(8, 8) == std::string("\x01\0\0\0\0\0\0\0", 8));
    CHECK(bytes.substr(16, 8) == std::string("\x02\0\0\0\0\0\0\0", 8));
    CHECK(bytes.substr(24, 8) == std::string("\x03\0\0\0\0\0\0\0", 8));
    // 1.0 = 0x3FF0000000000000, little-endian
    CHECK(bytes.substr(32, 8) == std::string("\0\0\0\0\0\0\xF0\x3F", 8));
}

TEST_CASE("round trip is bit exact") {
    Rng rng(1);
    const Tensor3 a = random_tensor(Shape{3, 4, 5}, rng);
    std::istringstream in(bytes_of(a));
    const Tensor3 b = io::read_tensor(in);
    CHECK(b == a);

    TempDir dir;
    io::write_tensor(fs::path(dir.file("a.tns3")), a);
    CHECK(io::read_tensor(fs::path(dir.file("a.tns3"))) == a);
}

TEST_CASE("malformed files") {
    Rng rng(2);
    const std::string good = bytes_of(random_tensor(Shape{2, 2, 2}, rng));
    const auto parse = [](std::string bytes) {
        std::istringstream in(bytes);
        return io::read_tensor(in);
    };

    std::string bad_magic = good;
    bad_magic[3] = '4';
    CHECK_THROWS_AS(parse(bad_magic), ParseError);

    std::string bad_version = good;
    bad_version[4] = 2;
    CHECK_THROWS_AS(parse(bad_version), ParseError);

    CHECK_THROWS_AS(parse(good.substr(0, good.size() - 8)), ParseError);  // 7 of 8 values
    CHECK_THROWS_AS(parse(good.substr(0, 20)), ParseError);
    CHECK_THROWS_AS(parse(good + "x"), ParseError);

    std::string zero_dim = good;
    std::memset(zero_dim.data() + 8, 0, 8);
    CHECK_THROWS_AS(parse(zero_dim), ParseError);

    std::string nan_value = good;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::memcpy(nan_value.data() + 32, &nan, 8);
    CHECK_THROWS_AS(parse(nan_value), ParseError);

    try {
        parse(good.substr(0, good.size() - 8));
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("truncated") != std::string::npos);
    }

    CHECK_THROWS_AS(io::read_tensor(fs::path("/nonexistent/dir/x.tns3")), IoError);
    CHECK_THROWS_AS(io::write_tensor(fs::path("/nonexistent/dir/x.tns3"), Tensor3(Shape{1, 1, 1})), IoError);
}

}

TEST_SUITE("cli") {

TEST_CASE("teye then tnn prints n") {
    TempDir dir;
    const auto eye = dir.file("i.tns3");
    CHECK(run_cli({"teye", "--n", "3", "--n3", "4", "--output", eye}).code == cli::kOk);
    const auto r = run_cli({"tnn", "--input", eye});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "3\n");
    CHECK(run_cli({"tsn", "--input", eye}).out == "1\n");
    CHECK(run_cli({"tubalrank", "--input", eye}).out == "3\n");
}

TEST_CASE("scalars print with 17 significant digits") {
    TempDir dir;
    Rng rng(3);
    const Tensor3 a = random_tensor(Shape{3, 3, 3}, rng);
    io::write_tensor(fs::path(dir.file("a.tns3")), a);
    const auto r = run_cli({"tsn", "--input", dir.file("a.tns3")});
    REQUIRE(r.code == cli::kOk);
    CHECK(std::stod(r.out) == tsn(a));
    std::ostringstream expected;
    expected.precision(17);
    expected << tnn(a) << '\n';
    CHECK(run_cli({"tnn", "--input", dir.file("a.tns3")}).out == expected.str());
}

TEST_CASE("tensor-valued subcommands") {
    TempDir dir;
    Rng rng(4);
    const Tensor3 a = random_tensor(Shape{3, 2, 4}, rng);
    const Tensor3 b = random_tensor(Shape{2, 5, 4}, rng);
    const Tensor3 sq = random_tensor(Shape{3, 3, 4}, rng);
    io::write_tensor(fs::path(dir.file("a.tns3")), a);
    io::write_tensor(fs::path(dir.file("b.tns3")), b);
    io::write_tensor(fs::path(dir.file("sq.tns3")), sq);
    const auto read = [&](const std::string& name) { return io::read_tensor(fs::path(dir.file(name))); };

    CHECK(run_cli({"tprod", "--input", dir.file("a.tns3"), "--input2", dir.file("b.tns3"), "--output",
                   dir.file("c.tns3")}).code == cli::kOk);
    CHECK(read("c.tns3") == tprod(a, b));

    CHECK(run_cli({"tran", "--input", dir.file("a.tns3"), "--output", dir.file("t.tns3")}).code == cli::kOk);
    CHECK(read("t.tns3") == tran(a));

    CHECK(run_cli({"tinv", "--input", dir.file("sq.tns3"), "--output", dir.file("inv.tns3")}).code == cli::kOk);
    CHECK(read("inv.tns3") == tinv(sq));

    CHECK(run_cli({"tsvd", "--input", dir.file("a.tns3"), "--output-prefix", dir.file("svd")}).code == cli::kOk);
    const auto f = tsvd(a);
    CHECK(read("svd_U.tns3") == f.u);
    CHECK(read("svd_S.tns3") == f.s);
    CHECK(read("svd_V.tns3") == f.v);

    CHECK(run_cli({"tqr", "--input", dir.file("a.tns3"), "--output-prefix", dir.file("qr")}).code == cli::kOk);
    CHECK(read("qr_Q.tns3") == tqr(a).q);
    CHECK(read("qr_R.tns3") == tqr(a).r);

    CHECK(run_cli({"prox-tnn", "--input", dir.file("a.tns3"), "--tau", "0.5", "--output", dir.file("p.tns3")}).code ==
          cli::kOk);
    CHECK(read("p.tns3") == prox_tnn(a, 0.5));

    CHECK(run_cli({"tubalrank", "--input", dir.file("a.tns3"), "--rtol", "100"}).out == "0\n");
}

TEST_CASE("exit codes") {
    TempDir dir;
    io::write_tensor(fs::path(dir.file("a.tns3")), Tensor3(Shape{2, 3, 4}));
    io::write_tensor(fs::path(dir.file("b.tns3")), Tensor3(Shape{2, 3, 4}));

    SUBCASE("shape mismatch names both shapes") {
        const auto r = run_cli({"tprod", "--input", dir.file("a.tns3"), "--input2", dir.file("b.tns3"), "--output",
                                dir.file("c.tns3")});
        CHECK(r.code == cli::kUsage);
        CHECK(r.err.find("2x3x4") != std::string::npos);
        CHECK(r.err.find("by 2x3x4") != std::string::npos);
    }
    SUBCASE("usage errors") {
        CHECK(run_cli({}).code == cli::kUsage);
        CHECK(run_cli({"frobnicate"}).code == cli::kUsage);
        CHECK(run_cli({"tnn"}).code == cli::kUsage);
        CHECK(run_cli({"teye", "--n", "0", "--n3", "2", "--output", dir.file("x")}).code == cli::kUsage);
        CHECK(run_cli({"prox-tnn", "--input", dir.file("a.tns3"), "--tau", "-1", "--output", dir.file("p")}).code ==
              cli::kUsage);
        CHECK(run_cli({"--help"}).code == cli::kOk);
    }
    SUBCASE("io and parse errors") {
        CHECK(run_cli({"tnn", "--input", dir.file("missing.tns3")}).code == cli::kIo);
        std::ofstream(dir.file("junk.tns3")) << "not a tensor";
        CHECK(run_cli({"tnn", "--input", dir.file("junk.tns3")}).code == cli::kIo);
    }
    SUBCASE("singular") {
        io::write_tensor(fs::path(dir.file("z.tns3")), Tensor3(Shape{3, 3, 2}));
        const auto r = run_cli({"tinv", "--input", dir.file("z.tns3"), "--output", dir.file("zi.tns3")});
        CHECK(r.code == cli::kSingular);
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("verify") {
    const auto r = run_cli({"verify", "--dims", "3,3,4", "--trials", "20", "--seed", "42"});
    CHECK(r.code == cli::kOk);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() > 1);
    CHECK(lines.front() == "seed 42");
    for (std::size_t i = 1; i < lines.size(); ++i) CHECK(lines[i].rfind("PASS ", 0) == 0);
    CHECK(run_cli({"verify", "--dims", "3,3,4", "--trials", "20", "--seed", "42"}).out == r.out);

    TempDir dir;
    Rng rng(5);
    io::write_tensor(fs::path(dir.file("a.tns3")), random_tensor(Shape{2, 5, 3}, rng));
    CHECK(run_cli({"verify", "--input", dir.file("a.tns3"), "--trials", "0"}).code == cli::kOk);
    CHECK(run_cli({"verify", "--dims", "3,3"}).code == cli::kUsage);
}

TEST_CASE("bench csv") {
    const auto r = run_cli({"bench", "--n1", "4", "--n2", "3", "--l", "2", "--n3", "2,5", "--repeats", "1"});
    REQUIRE(r.code == cli::kOk);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == bench::kCsvHeader);
    for (std::size_t i = 1; i < 3; ++i) {
        std::vector<std::string> fields;
        std::istringstream row(lines[i]);
        for (std::string field; std::getline(row, field, ',');) fields.push_back(field);
        REQUIRE(fields.size() == 7);
        CHECK(fields[0] == "4");
        CHECK(fields[3] == (i == 1 ? "2" : "5"));
        CHECK(std::stod(fields[6]) <= 1e-8);
    }
    CHECK(r.err == "seed 0\n");
}

}
