#ifndef AUTALG_FIELDSPEC_HPP
#define AUTALG_FIELDSPEC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ext_field.hpp"
#include "prime_field.hpp"
#include "rationals.hpp"

namespace autalg {

/// Runtime description of a coefficient field: char 0 = rationals,
/// degree 1 = GF(p), degree k > 1 = GF(p^k) with an explicit monic modulus.
struct FieldSpec {
    std::uint64_t characteristic = 0;
    unsigned degree = 1;
    std::vector<std::uint64_t> modulus;  // ascending coefficients, incl. leading 1; empty iff degree == 1

    bool operator==(const FieldSpec&) const = default;
};

/// first monic irreducible of the given degree in packed-index order
inline std::vector<std::uint64_t> canonical_modulus(std::uint64_t p, unsigned k) {
    PrimeField base(p);
    std::uint64_t lim = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (lim > (1ull << 40)) fail("MissingModulus", "degree too large for modulus search");
        lim *= p;
    }
    for (std::uint64_t idx = 0; idx < lim; ++idx) {
        std::vector<std::uint64_t> coeffs(k + 1, 0);
        std::uint64_t v = idx;
        for (unsigned i = 0; i < k; ++i) { coeffs[i] = v % p; v /= p; }
        coeffs[k] = 1;
        Poly<PrimeField> m(coeffs.begin(), coeffs.end());
        if (poly_irreducible(base, m)) return coeffs;
    }
    fail("MissingModulus", "no irreducible modulus found");
}

inline FieldSpec field_make(std::uint64_t characteristic, unsigned degree = 1,
                            std::vector<std::uint64_t> modulus = {}) {
    FieldSpec fs;
    fs.characteristic = characteristic;
    fs.degree = degree;
    if (characteristic == 0) {
        if (degree != 1) fail("MissingModulus", "rationals have no proper extensions here");
        return fs;
    }
    if (!is_prime_u64(characteristic))
        fail("NonPrimeCharacteristic", std::to_string(characteristic) + " is not prime");
    if (degree == 0) fail("MissingModulus", "degree must be at least 1");
    if (degree == 1) {
        if (!modulus.empty()) fail("MissingModulus", "prime field takes no modulus");
        return fs;
    }
    if (modulus.empty()) fail("MissingModulus", "extension field requires a modulus");
    fs.modulus = std::move(modulus);
    ExtField check(characteristic, degree, fs.modulus);  // validates monic + irreducible
    for (auto& c : fs.modulus) c %= characteristic;
    return fs;
}

/// dispatch a callable over the concrete field type
template <class Fn>
decltype(auto) with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.characteristic == 0) return fn(BigRational{});
    if (fs.degree == 1) return fn(PrimeField{fs.characteristic});
    return fn(ExtField{fs.characteristic, fs.degree, fs.modulus});
}

template <class F>
FieldSpec spec_of(const F& K) {
    FieldSpec fs;
    fs.characteristic = K.characteristic();
    fs.degree = K.degree();
    if constexpr (std::is_same_v<F, ExtField>) fs.modulus = K.modulus();
    return fs;
}

inline std::string spec_to_string(const FieldSpec& fs) {
    if (fs.characteristic == 0) return "Q";
    if (fs.degree == 1) return "GF(" + std::to_string(fs.characteristic) + ")";
    std::uint64_t q = 1;
    for (unsigned i = 0; i < fs.degree; ++i) q *= fs.characteristic;
    return "GF(" + std::to_string(q) + ")";
}

/// `count` distinct units in canonical order, skipping 0, 1 and `exclude`
template <class F>
std::vector<typename F::elem> distinct_units(const F& K, std::size_t count,
                                             const std::vector<typename F::elem>& exclude = {}) {
    std::vector<typename F::elem> out;
    std::uint64_t limit = K.finite() ? K.size() : count + exclude.size() + 2;
    for (std::uint64_t i = 0; i < limit && out.size() < count; ++i) {
        typename F::elem c = K.element(i);
        if (K.is_zero(c) || K.eq(c, K.one())) continue;
        bool skip = false;
        for (const auto& e : exclude)
            if (K.eq(c, e)) { skip = true; break; }
        if (!skip) out.push_back(c);
    }
    if (out.size() < count)
        fail("FieldTooSmall", "need " + std::to_string(count) + " distinct units besides 0,1 in " +
                                  spec_to_string(spec_of(K)));
    return out;
}

} // namespace autalg

#endif
