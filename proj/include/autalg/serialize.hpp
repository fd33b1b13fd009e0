#ifndef AUTALG_SERIALIZE_HPP
#define AUTALG_SERIALIZE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "error.hpp"
#include "fieldspec.hpp"

namespace autalg {

using json = nlohmann::ordered_json;

using AnyAlgebra = std::variant<Algebra<PrimeField>, Algebra<ExtField>, Algebra<BigRational>>;

namespace detail {

[[noreturn]] inline void schema(const std::string& where, const std::string& what) {
    fail("SchemaViolation", where + ": " + what);
}

inline const json& member(const json& j, const std::string& where, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) schema(where, "missing key '" + key + "'");
    return *it;
}

inline void reject_unknown(const json& j, const std::string& where,
                           const std::vector<std::string>& known) {
    for (const auto& kv : j.items()) {
        bool ok = false;
        for (const auto& k : known) ok = ok || kv.key() == k;
        if (!ok) schema(where, "unexpected key '" + kv.key() + "'");
    }
}

inline std::uint64_t get_uint(const json& j, const std::string& where) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
        return (std::uint64_t)j.get<std::int64_t>();
    schema(where, "expected a non-negative integer");
}

inline std::string get_string(const json& j, const std::string& where) {
    if (!j.is_string()) schema(where, "expected a string");
    return j.get<std::string>();
}

} // namespace detail

inline json field_to_json(const FieldSpec& fs) {
    json j;
    j["char"] = fs.characteristic;
    j["degree"] = fs.degree;
    if (!fs.modulus.empty()) j["modulus"] = fs.modulus;
    return j;
}

inline FieldSpec field_from_json(const json& j) {
    if (!j.is_object()) detail::schema("field", "expected an object");
    detail::reject_unknown(j, "field", {"char", "degree", "modulus"});
    std::uint64_t ch = detail::get_uint(detail::member(j, "field", "char"), "field.char");
    std::uint64_t deg = detail::get_uint(detail::member(j, "field", "degree"), "field.degree");
    std::vector<std::uint64_t> modulus;
    if (j.contains("modulus")) {
        const json& m = j["modulus"];
        if (!m.is_array()) detail::schema("field.modulus", "expected an array");
        for (std::size_t t = 0; t < m.size(); ++t)
            modulus.push_back(detail::get_uint(m[t], "field.modulus[" + std::to_string(t) + "]"));
    }
    return field_make(ch, (unsigned)deg, std::move(modulus));
}

template <class F>
json algebra_to_json(const Algebra<F>& A) {
    const F& K = A.K;
    json j;
    j["field"] = field_to_json(spec_of(K));
    j["dim"] = A.dim();
    j["basis"] = A.basis;
    json structure = json::array();
    for (const auto& e : A.entries)
        structure.push_back(json::array({e.i, e.j, e.k, K.to_string(e.c)}));
    j["structure"] = std::move(structure);
    json blocks = json::array();
    for (const auto& b : A.blocks) {
        json blk;
        blk["name"] = b.name;
        blk["range"] = json::array({b.lo, b.hi});
        blk["role"] = b.role;
        if (b.eigenvalue) blk["eigenvalue"] = K.to_string(*b.eigenvalue);
        if (!b.linked_to.empty()) blk["linked_to"] = b.linked_to;
        if (b.pairing.rows > 0) {
            json rows = json::array();
            for (std::size_t r = 0; r < b.pairing.rows; ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < b.pairing.cols; ++c)
                    row.push_back(K.to_string(b.pairing.at(r, c)));
                rows.push_back(std::move(row));
            }
            blk["pairing"] = std::move(rows);
        }
        blocks.push_back(std::move(blk));
    }
    j["blocks"] = std::move(blocks);
    json meta;
    meta["construction"] = A.construction;
    json params = json::object();
    for (const auto& kv : A.params) {
        if (params.contains(kv.first))
            detail::schema("meta.params", "duplicate key '" + kv.first + "'");
        params[kv.first] = kv.second;
    }
    meta["params"] = std::move(params);
    j["meta"] = std::move(meta);
    return j;
}

template <class F>
std::string algebra_to_string(const Algebra<F>& A) {
    return algebra_to_json(A).dump(2) + "\n";
}

namespace detail {

template <class F>
Algebra<F> read_algebra_body(const F& K, const json& j) {
    Algebra<F> A;
    A.K = K;

    std::uint64_t dim = get_uint(member(j, "document", "dim"), "dim");
    const json& basis = member(j, "document", "basis");
    if (!basis.is_array()) schema("basis", "expected an array");
    for (std::size_t t = 0; t < basis.size(); ++t)
        A.basis.push_back(get_string(basis[t], "basis[" + std::to_string(t) + "]"));
    if (A.basis.size() != dim)
        schema("dim", "declares " + std::to_string(dim) + " but basis lists " +
                          std::to_string(A.basis.size()));

    const json& structure = member(j, "document", "structure");
    if (!structure.is_array()) schema("structure", "expected an array");
    for (std::size_t t = 0; t < structure.size(); ++t) {
        std::string where = "structure[" + std::to_string(t) + "]";
        const json& e = structure[t];
        if (!e.is_array() || e.size() != 4) schema(where, "expected [i, j, k, coefficient]");
        StructureEntry<F> s;
        s.i = get_uint(e[0], where);
        s.j = get_uint(e[1], where);
        s.k = get_uint(e[2], where);
        s.c = K.parse(get_string(e[3], where));
        if (K.is_zero(s.c)) schema(where, "zero coefficient");
        A.entries.push_back(std::move(s));
    }

    const json& blocks = member(j, "document", "blocks");
    if (!blocks.is_array()) schema("blocks", "expected an array");
    for (std::size_t t = 0; t < blocks.size(); ++t) {
        std::string where = "blocks[" + std::to_string(t) + "]";
        const json& b = blocks[t];
        if (!b.is_object()) schema(where, "expected an object");
        reject_unknown(b, where, {"name", "range", "role", "eigenvalue", "linked_to", "pairing"});
        BlockInfo<F> blk;
        blk.name = get_string(member(b, where, "name"), where + ".name");
        const json& range = member(b, where, "range");
        if (!range.is_array() || range.size() != 2) schema(where + ".range", "expected [lo, hi]");
        blk.lo = get_uint(range[0], where + ".range");
        blk.hi = get_uint(range[1], where + ".range");
        blk.role = get_string(member(b, where, "role"), where + ".role");
        if (b.contains("eigenvalue"))
            blk.eigenvalue = K.parse(get_string(b["eigenvalue"], where + ".eigenvalue"));
        if (b.contains("linked_to"))
            blk.linked_to = get_string(b["linked_to"], where + ".linked_to");
        if (b.contains("pairing")) {
            const json& rows = b["pairing"];
            if (!rows.is_array() || rows.empty()) schema(where + ".pairing", "expected a matrix");
            std::size_t cols = 0;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (!rows[r].is_array()) schema(where + ".pairing", "expected a matrix");
                if (r == 0) {
                    cols = rows[r].size();
                    if (cols == 0) schema(where + ".pairing", "expected a matrix");
                    blk.pairing = mat_zero(K, rows.size(), cols);
                } else if (rows[r].size() != cols) {
                    schema(where + ".pairing", "ragged rows");
                }
                for (std::size_t c = 0; c < cols; ++c)
                    blk.pairing.at(r, c) =
                        K.parse(get_string(rows[r][c], where + ".pairing"));
            }
        }
        A.blocks.push_back(std::move(blk));
    }

    const json& meta = member(j, "document", "meta");
    if (!meta.is_object()) schema("meta", "expected an object");
    reject_unknown(meta, "meta", {"construction", "params"});
    A.construction = get_string(member(meta, "meta", "construction"), "meta.construction");
    const json& params = member(meta, "meta", "params");
    if (!params.is_object()) schema("meta.params", "expected an object");
    for (const auto& kv : params.items())
        A.params.emplace_back(kv.key(), get_string(kv.value(), "meta.params." + kv.key()));

    algebra_validate(A);
    return A;
}

} // namespace detail

inline AnyAlgebra algebra_from_json(const json& j) {
    if (!j.is_object()) detail::schema("document", "expected an object");
    detail::reject_unknown(j, "document",
                           {"field", "dim", "basis", "structure", "blocks", "meta"});
    FieldSpec fs = field_from_json(detail::member(j, "document", "field"));
    return with_field(fs, [&](auto K) -> AnyAlgebra {
        return detail::read_algebra_body(K, j);
    });
}

inline AnyAlgebra algebra_from_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) detail::schema("document", "not valid JSON");
    return algebra_from_json(j);
}

/// serialized form of whichever field the variant holds
inline std::string any_algebra_to_string(const AnyAlgebra& any) {
    return std::visit([](const auto& A) { return algebra_to_string(A); }, any);
}

} // namespace autalg

#endif
