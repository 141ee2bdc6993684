#include "cores/serialize.hpp"

namespace cores {

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<long long>>());
}

json to_json(const CCoords& c) {
    return json{{"a", c.modulus()}, {"c", c.c()}};
}

CCoords ccoords_from_json(const json& j) {
    return CCoords(j.at("a").get<long long>(),
                   j.at("c").get<std::vector<long long>>());
}

json to_json(const XCoords& x) {
    return json{{"a", x.modulus()}, {"num2a", x.num2a()}};
}

XCoords xcoords_from_json(const json& j) {
    return XCoords(j.at("a").get<long long>(),
                   j.at("num2a").get<std::vector<long long>>());
}

json to_json(const ZCoords& z) {
    return json{{"a", z.modulus()}, {"b0", z.b0()}, {"z", z.z()}};
}

ZCoords zcoords_from_json(const json& j) {
    return ZCoords(j.at("a").get<long long>(), j.at("b0").get<long long>(),
                   j.at("z").get<std::vector<long long>>());
}

json count_result(json query, const BigInt& count) {
    return json{{"query", std::move(query)}, {"count", count.get_str()}};
}

} // namespace cores
