#pragma once

// Canonical JSON forms. Integers are emitted as JSON numbers when they fit in
// 64 bits and as decimal strings otherwise; rationals are integers or "p/q"
// strings. Parsers accept both forms and report errors with a JSON pointer.

#include <nlohmann/json.hpp>

#include <string>

#include "gitkit/arith.hpp"
#include "gitkit/cone.hpp"
#include "gitkit/polyhedron.hpp"
#include "gitkit/ppdivisor.hpp"

namespace gitkit {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const std::vector<IntVector>& vs);
Json to_json(const IntMatrix& m);  // list of rows
Json to_json(const Cone& c);
Json to_json(const TailedPolyhedron& p);
Json to_json(const ToricBase& b);
Json to_json(const PolyhedralDivisor& d);

Integer integer_from_json(const Json& j, const std::string& pointer);
Rational rational_from_json(const Json& j, const std::string& pointer);
IntVector int_vector_from_json(const Json& j, const std::string& pointer, std::size_t length);
RatVector rat_vector_from_json(const Json& j, const std::string& pointer, std::size_t length);
std::vector<IntVector> int_vectors_from_json(const Json& j, const std::string& pointer, std::size_t length);

/// Rebuilds the cone from rays and lineality and checks that the stored facets
/// agree with the recomputed ones.
Cone cone_from_json(const Json& j, const std::string& pointer = "");
TailedPolyhedron tailed_polyhedron_from_json(const Json& j, const std::string& pointer = "");
PolyhedralDivisor ppdivisor_from_json(const Json& j, const std::string& pointer = "");

}  // namespace gitkit
