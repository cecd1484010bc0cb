#include "normkit/io.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace normkit;
using namespace normkit::testing;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("normkit_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    void fill(const std::string& text) const {
        std::ofstream out(path, std::ios::binary);
        out << text;
    }
};

}  // namespace

TEST_CASE("JSON matrix files round-trip bit-exactly") {
    std::mt19937_64 rng(1);
    const CMatrix m = random_cmatrix(3, 4, rng);
    TempFile f("roundtrip.json");
    write_matrix_json(f.path, m);
    const CMatrix back = read_matrix_json(f.path);
    REQUIRE(back.rows() == 3);
    REQUIRE(back.cols() == 4);
    CHECK((back - m).norm() == 0.0);  // 17 significant digits restore doubles exactly
}

TEST_CASE("JSON reader validates the document") {
    TempFile f("bad.json");
    SUBCASE("missing file") { CHECK_THROWS_AS(read_matrix_json("no_such_file.json"), IoError); }
    SUBCASE("not json") {
        f.fill("][");
        CHECK_THROWS_AS(read_matrix_json(f.path), IoError);
    }
    SUBCASE("wrong data length") {
        f.fill(R"({"rows": 2, "cols": 2, "data": [[1, 0]]})");
        CHECK_THROWS_AS(read_matrix_json(f.path), IoError);
    }
    SUBCASE("malformed entry") {
        f.fill(R"({"rows": 1, "cols": 1, "data": [[1, 0, 0]]})");
        CHECK_THROWS_AS(read_matrix_json(f.path), IoError);
    }
    SUBCASE("non-finite entry") {
        f.fill(R"({"rows": 1, "cols": 1, "data": [[1e999, 0]]})");
        CHECK_THROWS(read_matrix_json(f.path));
    }
}

TEST_CASE("Matrix Market array import is column-major") {
    TempFile f("mm.mtx");
    f.fill("%%MatrixMarket matrix array complex general\n"
           "% comment line\n"
           "2 2\n"
           "1 0\n2 0\n3 0.5\n4 -1\n");
    const CMatrix m = read_matrix_market(f.path);
    REQUIRE(m.rows() == 2);
    CHECK(m(0, 0) == Complex(1, 0));
    CHECK(m(1, 0) == Complex(2, 0));
    CHECK(m(0, 1) == Complex(3, 0.5));
    CHECK(m(1, 1) == Complex(4, -1));
}

TEST_CASE("Matrix Market reader rejects unsupported banners") {
    TempFile f("badmm.mtx");
    f.fill("%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 1\n");
    CHECK_THROWS_AS(read_matrix_market(f.path), IoError);
}

TEST_CASE("read_matrix_auto dispatches on content") {
    TempFile fj("auto.json"), fm("auto.mtx");
    fj.fill(R"({"rows": 1, "cols": 1, "data": [[7, -2]]})");
    fm.fill("%%MatrixMarket matrix array complex general\n1 1\n7 -2\n");
    CHECK(read_matrix_auto(fj.path)(0, 0) == Complex(7, -2));
    CHECK(read_matrix_auto(fm.path)(0, 0) == Complex(7, -2));
}

TEST_CASE("trajectory CSV format") {
    std::vector<std::pair<double, CVector>> paths;
    CVector v(2);
    v << Complex(1, 2), Complex(-0.5, 0);
    paths.emplace_back(0.25, v);
    std::ostringstream out;
    write_trajectory_csv(out, paths);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,index,re,im");
    std::getline(in, line);
    CHECK(line == "0.25,0,1,2");
    std::getline(in, line);
    CHECK(line == "0.25,1,-0.5,0");
}
