// JSON encoding for exact values: numbers travel as decimal strings ("-3", "1/2"),
// matrices as row-major arrays of arrays.
#pragma once

#include <json.hpp>

#include "leech/exact.hpp"

namespace leech::codec {

using Json = nlohmann::ordered_json;

Json encode(const Int& x);
Json encode(const Rat& x);
Json encode(const IntVector& v);
Json encode(const RatVector& v);
Json encode(const IntMatrix& m);
Json encode(const RatMatrix& m);

/// Decoders throw std::invalid_argument on malformed input.
Int decode_int(const Json& j);
Rat decode_rat(const Json& j);
IntVector decode_int_vector(const Json& j);
RatVector decode_rat_vector(const Json& j);
IntMatrix decode_int_matrix(const Json& j);
RatMatrix decode_rat_matrix(const Json& j);

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& doc);

}  // namespace leech::codec
