#include "hlawka/json_io.hpp"

#include <fstream>

namespace hlawka::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        fail(path, std::string("missing \"") + key + "\"");
    }
    return *it;
}

const json* opt_member(const json& j, const char* key) {
    if (!j.is_object()) {
        return nullptr;
    }
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

double number_at(const json& j, const std::string& path) {
    if (!j.is_number()) {
        fail(path, "expected a number");
    }
    return j.get<double>();
}

int int_at(const json& j, const std::string& path) {
    if (!j.is_number_integer()) {
        fail(path, "expected an integer");
    }
    return j.get<int>();
}

} // namespace

Scalar scalar_from_json(const json& j, const std::string& path) {
    if (j.is_object()) {
        if (const json* rat = opt_member(j, "rat")) {
            if (!rat->is_string()) {
                fail(path + ".rat", "expected a string rational literal");
            }
            try {
                return Scalar::rational_from_string(rat->get<std::string>());
            } catch (const std::exception& e) {
                fail(path + ".rat", e.what());
            }
        }
        if (const json* f = opt_member(j, "f64")) {
            return Scalar::real(number_at(*f, path + ".f64"));
        }
    }
    fail(path, "expected a scalar: {\"rat\": \"p/q\"} or {\"f64\": number}");
}

json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) {
        return json{{"rat", s.rat().get_str()}};
    }
    return json{{"f64", s.value()}};
}

std::vector<Scalar> scalar_vector_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) {
        fail(path, "expected an array of scalars");
    }
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(scalar_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

json scalar_vector_to_json(std::span<const Scalar> v) {
    json arr = json::array();
    for (const Scalar& s : v) {
        arr.push_back(scalar_to_json(s));
    }
    return arr;
}

namespace {

std::vector<std::vector<Scalar>> matrix_from_json(const json& j,
                                                  const std::string& path) {
    if (!j.is_array() || j.empty()) {
        fail(path, "expected a nonempty array of rows");
    }
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back(
            scalar_vector_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return rows;
}

} // namespace

relation::HlawkaInstance relation_instance_from_json(const json& j) {
    auto weights = scalar_vector_from_json(member(j, "weights", "$"), "$.weights");
    auto f_eta = scalar_vector_from_json(member(j, "f_eta", "$"), "$.f_eta");
    auto f_xi = scalar_vector_from_json(member(j, "f_xi", "$"), "$.f_xi");
    Scalar a = scalar_from_json(member(j, "a", "$"), "$.a");
    Scalar b = scalar_from_json(member(j, "b", "$"), "$.b");
    try {
        return relation::HlawkaInstance(
            relation::WeightedFunctional(std::move(weights)), std::move(f_eta),
            std::move(f_xi), std::move(a), std::move(b));
    } catch (const std::invalid_argument& e) {
        fail("$", e.what());
    }
}

json relation_instance_to_json(const relation::HlawkaInstance& inst) {
    return json{{"weights", scalar_vector_to_json(inst.functional.weights())},
                {"f_eta", scalar_vector_to_json(inst.f_eta)},
                {"f_xi", scalar_vector_to_json(inst.f_xi)},
                {"a", scalar_to_json(inst.a)},
                {"b", scalar_to_json(inst.b)}};
}

QuadraticTriple quadratic_triple_from_json(const json& j) {
    auto rows = matrix_from_json(member(j, "Q", "$"), "$.Q");
    const json& vectors = member(j, "vectors", "$");
    auto x = scalar_vector_from_json(member(vectors, "x", "$.vectors"), "$.vectors.x");
    auto y = scalar_vector_from_json(member(vectors, "y", "$.vectors"), "$.vectors.y");
    auto z = scalar_vector_from_json(member(vectors, "z", "$.vectors"), "$.vectors.z");
    const json& dir = member(j, "direction", "$");
    if (!dir.is_string()) {
        fail("$.direction", "expected \"forward\" or \"reverse\"");
    }
    const std::string d = dir.get<std::string>();
    quadratic::Direction direction;
    if (d == "forward") {
        direction = quadratic::Direction::Forward;
    } else if (d == "reverse") {
        direction = quadratic::Direction::Reverse;
    } else {
        fail("$.direction", "expected \"forward\" or \"reverse\"");
    }
    try {
        return QuadraticTriple{quadratic::QuadraticForm::from_matrix(std::move(rows)),
                               std::move(x), std::move(y), std::move(z), direction};
    } catch (const std::invalid_argument& e) {
        fail("$.Q", e.what());
    }
}

SemigroupCase semigroup_case_from_json(const json& j) {
    const json& carrier = member(j, "carrier", "$");
    if (!carrier.is_string()) {
        fail("$.carrier", "expected \"lp\", \"measure\" or \"nonneg\"");
    }
    const std::string kind = carrier.get<std::string>();
    const int k = int_at(member(j, "k", "$"), "$.k");
    const json& triple = member(j, "triple", "$");
    if (!triple.is_array() || triple.size() != 3) {
        fail("$.triple", "expected an array of three elements");
    }

    auto element_vec = [&](const json& e, const std::string& path) {
        if (!e.is_array() || e.empty()) {
            fail(path, "expected a nonempty numeric array");
        }
        std::vector<double> v;
        v.reserve(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            v.push_back(number_at(e[i], path + "[" + std::to_string(i) + "]"));
        }
        return v;
    };

    if (kind == "lp") {
        const double p = number_at(member(j, "p", "$"), "$.p");
        auto x = element_vec(triple[0], "$.triple[0]");
        auto y = element_vec(triple[1], "$.triple[1]");
        auto z = element_vec(triple[2], "$.triple[2]");
        if (y.size() != x.size() || z.size() != x.size()) {
            fail("$.triple", "elements must share one dimension");
        }
        try {
            auto s = semigroup::SemigroupStructure::lp_vectors(x.size(), p);
            return SemigroupCase{std::move(s),
                                 {semigroup::Element{std::move(x)},
                                  semigroup::Element{std::move(y)},
                                  semigroup::Element{std::move(z)}},
                                 k};
        } catch (const std::invalid_argument& e) {
            fail("$", e.what());
        }
    }
    if (kind == "measure") {
        auto weights = scalar_vector_from_json(member(j, "weights", "$"), "$.weights");
        const json& op_j = member(j, "op", "$");
        if (!op_j.is_string()) {
            fail("$.op", "expected \"union\" or \"symmdiff\"");
        }
        const std::string op_s = op_j.get<std::string>();
        semigroup::SetOp op;
        if (op_s == "union") {
            op = semigroup::SetOp::Union;
        } else if (op_s == "symmdiff") {
            op = semigroup::SetOp::SymmDiff;
        } else {
            fail("$.op", "expected \"union\" or \"symmdiff\"");
        }
        std::array<semigroup::Element, 3> elems;
        for (std::size_t i = 0; i < 3; ++i) {
            const std::string path = "$.triple[" + std::to_string(i) + "]";
            if (!triple[i].is_number_unsigned()) {
                fail(path, "expected a set bitmask (unsigned integer)");
            }
            elems[i] = triple[i].get<std::uint64_t>();
        }
        try {
            auto s = semigroup::SemigroupStructure::measurable_sets(std::move(weights), op);
            return SemigroupCase{std::move(s), std::move(elems), k};
        } catch (const std::invalid_argument& e) {
            fail("$", e.what());
        }
    }
    if (kind == "nonneg") {
        const json* power = opt_member(j, "power");
        const double pw = power ? number_at(*power, "$.power") : 1.0;
        std::array<semigroup::Element, 3> elems;
        for (std::size_t i = 0; i < 3; ++i) {
            const std::string path = "$.triple[" + std::to_string(i) + "]";
            elems[i] = number_at(triple[i], path);
        }
        try {
            auto s = semigroup::SemigroupStructure::nonneg_reals(pw);
            return SemigroupCase{std::move(s), std::move(elems), k};
        } catch (const std::invalid_argument& e) {
            fail("$", e.what());
        }
    }
    fail("$.carrier", "expected \"lp\", \"measure\" or \"nonneg\"");
}

integral::ConcaveMap concave_map_from_json(const json& j, const std::string& path) {
    const json& kind_j = member(j, "kind", path);
    if (!kind_j.is_string()) {
        fail(path + ".kind", "expected a transform name");
    }
    const std::string kind = kind_j.get<std::string>();
    try {
        if (kind == "identity") {
            return integral::ConcaveMap::identity();
        }
        if (kind == "sqrt") {
            return integral::ConcaveMap::sqrt();
        }
        if (kind == "power") {
            return integral::ConcaveMap::power(
                number_at(member(j, "alpha", path), path + ".alpha"));
        }
        if (kind == "capped_linear") {
            return integral::ConcaveMap::capped_linear(
                scalar_from_json(member(j, "cap", path), path + ".cap"));
        }
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
    fail(path + ".kind",
         "expected \"identity\", \"sqrt\", \"power\" or \"capped_linear\"");
}

IntegralCase integral_case_from_json(const json& j) {
    auto weights = scalar_vector_from_json(member(j, "weights", "$"), "$.weights");
    auto f_rows = matrix_from_json(member(j, "f", "$"), "$.f");

    std::optional<integral::VectorFunction> g;
    if (const json* g_j = opt_member(j, "g")) {
        try {
            g.emplace(matrix_from_json(*g_j, "$.g"));
        } catch (const std::invalid_argument& e) {
            fail("$.g", e.what());
        }
    }
    std::optional<integral::ConcaveMap> transform;
    if (const json* s_j = opt_member(j, "S")) {
        transform = concave_map_from_json(*s_j, "$.S");
    }
    std::optional<Scalar> control;
    if (const json* a_j = opt_member(j, "A")) {
        control = scalar_from_json(*a_j, "$.A");
    }
    std::optional<Scalar> t;
    if (const json* t_j = opt_member(j, "t")) {
        t = scalar_from_json(*t_j, "$.t");
    }
    std::optional<std::vector<std::size_t>> permutation;
    if (const json* p_j = opt_member(j, "perm")) {
        if (!p_j->is_array()) {
            fail("$.perm", "expected an array of indices");
        }
        std::vector<std::size_t> perm;
        for (std::size_t i = 0; i < p_j->size(); ++i) {
            const json& e = (*p_j)[i];
            if (!e.is_number_unsigned()) {
                fail("$.perm[" + std::to_string(i) + "]", "expected an index");
            }
            perm.push_back(e.get<std::size_t>());
        }
        permutation = std::move(perm);
    }

    try {
        return IntegralCase{integral::DiscreteMeasure(std::move(weights)),
                            integral::VectorFunction(std::move(f_rows)),
                            std::move(g),
                            transform,
                            std::move(control),
                            std::move(t),
                            std::move(permutation)};
    } catch (const std::invalid_argument& e) {
        fail("$", e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path + ": cannot open file");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace hlawka::io
