#pragma once

// Serialization of catalogue, cone and fan data as JSON or aligned text.
// Rationals are written as "p/q" strings in lowest terms ("p" when q = 1).

#include "bnwall/cone.hpp"
#include "bnwall/fan.hpp"
#include "bnwall/stability.hpp"
#include "bnwall/string_class.hpp"

#include "json.hpp"

#include <string>

namespace bnwall {

using Json = nlohmann::ordered_json;

/// Vectors are stored ascending by vertex; Descending prints
/// (v_n, ..., v_0), naming the coordinates x, y, z when n <= 2.
enum class Order { Ascending, Descending };

std::string coordinate_name(int vertex, int n, Order order);
RatVec in_order(const RatVec& v, Order order);
std::vector<int> in_order(const std::vector<int>& v, Order order);

/// "x+y+z", "-2v3+v1", "0".
std::string format_linear(const RatVec& coeffs, int n, Order order);
std::string format_equality(const RatVec& coeffs, int n, Order order);
/// Written as "... <= 0", or as "... >= 0" after negation when every
/// coefficient is nonpositive.
std::string format_inequality(const RatVec& coeffs, int n, Order order);

Json to_json(const RatVec& v, Order order);

Json strings_report(int n);
Json indecomposables_report(int n, Order order);
/// Minimal H-form (order-independent canonical constraints) plus V-form.
Json stability_record_json(const StabilityRecord& r, int n, Order order, bool emit_rays);
Json stability_report(int n, Order order, bool emit_rays);
Json walls_report(int n, Order order, bool emit_rays);
/// {"n","walls","regions","chambers"}; `detail` adds merges and composition.
Json chambers_report(const FanResult& f, bool detail);

/// Compact JSON, key order as inserted.
std::string dump(const Json& j);

}  // namespace bnwall
