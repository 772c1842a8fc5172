#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "polyenum/io.hpp"

using namespace polyenum;

namespace {

struct TempFile {
    std::string path;

    TempFile(const std::string& name, const std::string& contents)
        : path("/tmp/polyenum_test_" + name) {
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("group JSON with image arrays and cycle strings") {
    const PermGroup g = group_from_json_text(
        R"json({"degree": 4, "generators": [[1,2,3,0], "(0 1)"]})json");
    CHECK(g.degree() == 4);
    CHECK(g.order() == 24);
    const PermGroup c4 = group_from_json_text(R"json({"degree":4,"generators":[[1,2,3,0]]})json");
    CHECK(c4.order() == 4);
}

TEST_CASE("group JSON named form") {
    CHECK(group_from_json_text(R"json({"named": "dihedral:4"})json").order() == 8);
    CHECK_THROWS_AS(group_from_json_text(R"json({"named": "dihedral:4", "degree": 4})json"),
                    validation_error);
    CHECK_THROWS_AS(group_from_json_text(R"json({"named": 7})json"), validation_error);
}

TEST_CASE("group JSON rejects malformed input") {
    CHECK_THROWS_AS(group_from_json_text("not json"), validation_error);
    CHECK_THROWS_AS(group_from_json_text("[1,2]"), validation_error);
    CHECK_THROWS_AS(group_from_json_text(R"json({"degree": 3})json"), validation_error);
    CHECK_THROWS_AS(group_from_json_text(R"json({"degree": 0, "generators": []})json"),
                    validation_error);
    CHECK_THROWS_AS(group_from_json_text(R"json({"degree": 3, "generators": [[0,1]]})json"),
                    dimension_error);
    CHECK_THROWS_AS(group_from_json_text(R"json({"degree": 2, "generators": [[0,0]]})json"),
                    validation_error);
}

TEST_CASE("resolve_group picks named specs and files") {
    CHECK(resolve_group("cyclic:5").order() == 5);
    CHECK_THROWS_AS(resolve_group("nope:3"), validation_error);
    TempFile f("group.json", R"json({"degree": 2, "generators": [[1,0]]})json");
    CHECK(resolve_group(f.path).order() == 2);
    CHECK_THROWS_AS(resolve_group("/tmp/definitely_missing_group.json"), validation_error);
}

TEST_CASE("delta JSON built-in kinds") {
    CHECK(delta_from_json_text(R"json({"kind":"uniform"})json").kind() ==
          DeltaWeight::Kind::uniform);
    CHECK(delta_from_json_text(R"json({"kind":"sign"})json").kind() == DeltaWeight::Kind::sign);
    CHECK_THROWS_AS(delta_from_json_text(R"json({"kind":"bogus"})json"), validation_error);
    CHECK_THROWS_AS(delta_from_json_text(R"json({})json"), validation_error);
}

TEST_CASE("delta JSON tables") {
    const DeltaWeight d = delta_from_json_text(
        R"json({"kind":"table","degree":3,"entries":[
            {"perm":[1,0,2],"value":"-1"},
            {"perm":[0,1,2],"value":"1/2"},
            {"perm":[2,1,0],"value":3}]})json");
    CHECK(d.kind() == DeltaWeight::Kind::table);
    CHECK(d.value(Permutation({1, 0, 2}), 1) == Rat(-1));
    CHECK(d.value(Permutation({0, 1, 2}), 1) == make_rat(1, 2));
    CHECK(d.value(Permutation({2, 1, 0}), 1) == Rat(3));

    CHECK_THROWS_AS(delta_from_json_text(R"json({"kind":"table","degree":2,"entries":[]})json"),
                    validation_error);
    CHECK_THROWS_AS(delta_from_json_text(
                        R"json({"kind":"table","degree":2,"entries":[{"perm":[0],"value":"1"}]})json"),
                    dimension_error);
    CHECK_THROWS_AS(
        delta_from_json_text(
            R"json({"kind":"table","degree":2,"entries":[
                {"perm":[0,1],"value":"1"},{"perm":[0,1],"value":"2"}]})json"),
        validation_error);
    CHECK_THROWS_AS(
        delta_from_json_text(
            R"json({"kind":"table","degree":2,"entries":[{"perm":[0,1],"value":"1/0"}]})json"),
        validation_error);
}

TEST_CASE("resolve_delta dispatches on the argument shape") {
    CHECK(resolve_delta("uniform").kind() == DeltaWeight::Kind::uniform);
    CHECK(resolve_delta("sign").kind() == DeltaWeight::Kind::sign);
    TempFile f("delta.json",
               R"json({"kind":"table","degree":2,"entries":[{"perm":[1,0],"value":"-1"}]})json");
    CHECK(resolve_delta("@" + f.path).kind() == DeltaWeight::Kind::table);
    CHECK_THROWS_AS(resolve_delta("random"), validation_error);
    CHECK_THROWS_AS(resolve_delta(""), validation_error);
}

TEST_CASE("matrix JSON with strings and integers") {
    const RatMatrix m = matrix_from_json_text(R"json({"entries":[["1","2"],["3/2",4]]})json");
    CHECK(m.order() == 2);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(1, 0) == make_rat(3, 2));
    CHECK(m.at(1, 1) == 4);

    CHECK_THROWS_AS(matrix_from_json_text(R"json({"entries":[]})json"), validation_error);
    CHECK_THROWS_AS(matrix_from_json_text(R"json({"entries":[["1","2"],["3"]]})json"),
                    dimension_error);
    CHECK_THROWS_AS(matrix_from_json_text(R"json({"entries":[["x"]]})json"), validation_error);
    CHECK_THROWS_AS(matrix_from_json_text(R"json({"entries":[[1.5]]})json"), validation_error);
    CHECK_THROWS_AS(matrix_from_json_text(R"json({"rows":[[1]]})json"), validation_error);
}

TEST_CASE("polynomial JSON is canonical and ordered") {
    const MultiPoly p = MultiPoly::monomial(2, {2, 0}, make_rat(1, 2)) +
                        MultiPoly::monomial(2, {0, 1}, make_rat(1, 2));
    CHECK(poly_to_json_text(p, "t") ==
          R"json({"vars":["t1","t2"],"terms":[{"exp":[2,0],"coef":"1/2"},{"exp":[0,1],"coef":"1/2"}]})json");
    CHECK(poly_to_json_text(MultiPoly::zero(1), "w") == R"json({"vars":["w1"],"terms":[]})json");
}

TEST_CASE("rational lists") {
    const auto v = parse_rat_list("1,2/3,-1");
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 1);
    CHECK(v[1] == make_rat(2, 3));
    CHECK(v[2] == -1);
    CHECK(parse_rat_list("5").size() == 1);
    CHECK_THROWS_AS(parse_rat_list(""), validation_error);
    CHECK_THROWS_AS(parse_rat_list("1,,2"), validation_error);
    CHECK_THROWS_AS(parse_rat_list("1,2,"), validation_error);
}

TEST_CASE("read_file reports missing paths") {
    CHECK_THROWS_AS(read_file("/tmp/polyenum_no_such_file_anywhere"), validation_error);
    TempFile f("readme.txt", "hello");
    CHECK(read_file(f.path) == "hello");
}
