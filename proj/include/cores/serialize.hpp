#pragma once

#include <json.hpp>

#include "cores/abacus.hpp"
#include "cores/partition.hpp"
#include "cores/zcoords.hpp"

namespace cores {

using json = nlohmann::json;

/// Partitions serialize as a decreasing integer list, e.g. [9,6,3,1,1,1];
/// the empty partition as [].
json to_json(const Partition& p);
Partition partition_from_json(const json& j);

/// {"a": 4, "c": [1,2,0,-3]}
json to_json(const CCoords& c);
CCoords ccoords_from_json(const json& j);

/// {"a": 4, "num2a": [5,15,1,-21]} — numerators over 2a.
json to_json(const XCoords& x);
XCoords xcoords_from_json(const json& j);

/// {"a": 3, "b0": 2, "z": [0,1,1]}
json to_json(const ZCoords& z);
ZCoords zcoords_from_json(const json& j);

/// {"query": ..., "count": "<decimal string>"} — counts travel as decimal
/// strings so 64-bit consumers cannot overflow.
json count_result(json query, const BigInt& count);

} // namespace cores
