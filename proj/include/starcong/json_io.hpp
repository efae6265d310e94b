#pragma once

#include <string>

#include <json.hpp>

#include "starcong/canonical.hpp"
#include "starcong/construct.hpp"
#include "starcong/pattern.hpp"
#include "starcong/reduce.hpp"
#include "starcong/tangent.hpp"

namespace starcong {

using Json = nlohmann::json;

// All matrix JSON is {"rows":r,"cols":c,"data":[[{"re":..,"im":..},...],...]}
// row-major; pattern JSON is {"rows":r,"cols":c,"entries":[["zero"|"star"|
// "circle"|"bullet",...],...]}.

Json to_json(Complex z);
Json to_json(const Matrix& a);
Json to_json(const CanonicalBlock& b);
Json to_json(const CanonicalSpec& spec);
Json to_json(const Pattern& p);
Json to_json(const DecompositionReport& r);
Json to_json(const GreedyResult& g);
Json to_json(const ReductionResult& r);
Json to_json(const HermitianPair& hk);

Complex complex_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
CanonicalBlock block_from_json(const Json& j);
CanonicalSpec spec_from_json(const Json& j);

Json parse_json_text(const std::string& text, const std::string& origin);
Json load_json_file(const std::string& path);
Matrix load_matrix_file(const std::string& path);
CanonicalSpec load_spec_file(const std::string& path);

}  // namespace starcong
