#include <doctest.h>

#include <stdexcept>

#include "cores/serialize.hpp"

using namespace cores;

TEST_CASE("partition wire format") {
    Partition p({9, 6, 3, 1, 1, 1});
    CHECK(to_json(p).dump() == "[9,6,3,1,1,1]");
    CHECK(to_json(Partition(std::vector<long long>{})).dump() == "[]");
    CHECK(partition_from_json(json::parse("[9,6,3,1,1,1]")) == p);
    CHECK(partition_from_json(json::parse("[]")) ==
          Partition(std::vector<long long>{}));
    CHECK_THROWS_AS(partition_from_json(json::parse("[1,2]")),
                    std::invalid_argument);
}

TEST_CASE("ccoords wire format") {
    CCoords c(4, {1, 2, 0, -3});
    json j = to_json(c);
    CHECK(j == json::parse(R"({"a":4,"c":[1,2,0,-3]})"));
    CHECK(ccoords_from_json(j) == c);
    CHECK_THROWS_AS(ccoords_from_json(json::parse(R"({"a":4,"c":[1,2,0,-2]})")),
                    std::invalid_argument);
}

TEST_CASE("xcoords wire format") {
    XCoords x(4, {5, 15, 1, -21});
    json j = to_json(x);
    CHECK(j == json::parse(R"({"a":4,"num2a":[5,15,1,-21]})"));
    CHECK(xcoords_from_json(j) == x);
    CHECK_THROWS_AS(
        xcoords_from_json(json::parse(R"({"a":4,"num2a":[4,15,1,-20]})")),
        std::invalid_argument);
}

TEST_CASE("zcoords wire format") {
    ZCoords z(3, 2, {0, 1, 1});
    json j = to_json(z);
    CHECK(j == json::parse(R"({"a":3,"b0":2,"z":[0,1,1]})"));
    CHECK(zcoords_from_json(j) == z);
    CHECK_THROWS_AS(
        zcoords_from_json(json::parse(R"({"a":3,"b0":2,"z":[1,1,0]})")),
        std::invalid_argument);
}

TEST_CASE("count_result carries counts as decimal strings") {
    BigInt big("123456789012345678901234567890");
    json j = count_result(json{{"moduli", {3, 4, 5}}}, big);
    CHECK(j.at("count").get<std::string>() ==
          "123456789012345678901234567890");
    CHECK(j.at("query") == json{{"moduli", {3, 4, 5}}});
    CHECK(count_result(json{{"s", 1}}, BigInt(0)).at("count") == "0");
}
