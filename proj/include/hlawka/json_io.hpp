#ifndef HLAWKA_JSON_IO_HPP
#define HLAWKA_JSON_IO_HPP

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hlawka/integral.hpp"
#include "hlawka/quadratic.hpp"
#include "hlawka/relation.hpp"
#include "hlawka/semigroup.hpp"

namespace hlawka::io {

using nlohmann::json;

/// Schema or syntax problem; the message carries the JSON path.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A scalar is {"rat": "p/q"} (or an integer string) or {"f64": number}.
Scalar scalar_from_json(const json& j, const std::string& path);
json scalar_to_json(const Scalar& s);

std::vector<Scalar> scalar_vector_from_json(const json& j, const std::string& path);
json scalar_vector_to_json(std::span<const Scalar> v);

/// {"weights": [...], "f_eta": [...], "f_xi": [...], "a": sc, "b": sc}
relation::HlawkaInstance relation_instance_from_json(const json& j);
json relation_instance_to_json(const relation::HlawkaInstance& inst);

/// {"Q": [[sc...]...], "vectors": {"x": [...], "y": [...], "z": [...]},
///  "direction": "forward" | "reverse"}
struct QuadraticTriple {
    quadratic::QuadraticForm form;
    std::vector<Scalar> x, y, z;
    quadratic::Direction direction;
};
QuadraticTriple quadratic_triple_from_json(const json& j);

/// {"carrier": "lp"|"measure"|"nonneg", "p": number?, "power": number?,
///  "op": "union"|"symmdiff"?, "weights": [sc...]?, "k": int,
///  "triple": carrier-specific}
struct SemigroupCase {
    semigroup::SemigroupStructure structure;
    std::array<semigroup::Element, 3> triple;
    int k;
};
SemigroupCase semigroup_case_from_json(const json& j);

/// {"weights": [sc...], "f": [[sc...]...], "g": [[sc...]...]?,
///  "S": {"kind": ..., "alpha"?, "cap"?}?, "A": sc?, "t": sc?,
///  "perm": [indices]?}
struct IntegralCase {
    integral::DiscreteMeasure measure;
    integral::VectorFunction f;
    std::optional<integral::VectorFunction> g;
    std::optional<integral::ConcaveMap> transform;
    std::optional<Scalar> control;
    std::optional<Scalar> t;
    std::optional<std::vector<std::size_t>> permutation;
};
IntegralCase integral_case_from_json(const json& j);

integral::ConcaveMap concave_map_from_json(const json& j, const std::string& path);

json load_json_file(const std::string& path);

} // namespace hlawka::io

#endif
