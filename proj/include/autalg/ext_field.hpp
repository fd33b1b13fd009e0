#ifndef AUTALG_EXT_FIELD_HPP
#define AUTALG_EXT_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "polyfactor.hpp"
#include "prime_field.hpp"

namespace autalg {

/// GF(p^k) as F_p[x]/(modulus), modulus monic irreducible of degree k.
/// Elements are packed base-p: value sum(c_i p^i) for c_0 + c_1 x + ...
/// That packing doubles as the canonical enumeration index, so the prime
/// subfield occupies indices 0..p-1 and canonical parameter selection
/// commutes with base change.
class ExtField {
public:
    using elem = std::uint64_t;
    static constexpr unsigned max_degree = 16;

    ExtField() : base_(2), k_(1), q_(2), modulus_{0, 1} {}

    ExtField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
        : base_(p), k_(k), modulus_(std::move(modulus)) {
        if (k < 1 || k > max_degree) fail("ReducibleModulus", "extension degree out of range");
        if (modulus_.size() != k_ + 1) fail("MissingModulus", "modulus must have degree equal to the extension degree");
        for (auto& c : modulus_) c %= p;
        if (modulus_.back() != 1) fail("ReducibleModulus", "modulus must be monic");
        q_ = 1;
        for (unsigned i = 0; i < k_; ++i) {
            if (q_ > (1ull << 62) / p) fail("ReducibleModulus", "field too large to represent");
            q_ *= p;
        }
        Poly<PrimeField> m(modulus_.begin(), modulus_.end());
        poly_trim(base_, m);
        if (!poly_irreducible(base_, m)) fail("ReducibleModulus", "modulus is not irreducible over GF(" + std::to_string(p) + ")");
    }

    std::uint64_t characteristic() const { return base_.characteristic(); }
    unsigned degree() const { return k_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    const PrimeField& base() const { return base_; }
    bool finite() const { return true; }
    std::uint64_t size() const { return q_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    bool is_zero(elem a) const { return a == 0; }
    bool eq(elem a, elem b) const { return a == b; }

    using digits = std::array<std::uint64_t, 2 * max_degree>;

    void unpack(elem a, digits& d) const {
        std::uint64_t p = base_.characteristic();
        for (unsigned i = 0; i < k_; ++i) { d[i] = a % p; a /= p; }
        for (unsigned i = k_; i < 2 * k_; ++i) d[i] = 0;
    }

    elem pack(const digits& d) const {
        std::uint64_t p = base_.characteristic(), v = 0;
        for (unsigned i = k_; i-- > 0;) v = v * p + d[i];
        return v;
    }

    elem add(elem a, elem b) const {
        digits da, db;
        unpack(a, da);
        unpack(b, db);
        for (unsigned i = 0; i < k_; ++i) da[i] = base_.add(da[i], db[i]);
        return pack(da);
    }

    elem sub(elem a, elem b) const {
        digits da, db;
        unpack(a, da);
        unpack(b, db);
        for (unsigned i = 0; i < k_; ++i) da[i] = base_.sub(da[i], db[i]);
        return pack(da);
    }

    elem neg(elem a) const {
        digits da;
        unpack(a, da);
        for (unsigned i = 0; i < k_; ++i) da[i] = base_.neg(da[i]);
        return pack(da);
    }

    elem mul(elem a, elem b) const {
        if (a == 0 || b == 0) return 0;
        digits da, db, r{};
        unpack(a, da);
        unpack(b, db);
        for (unsigned i = 0; i < k_; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < k_; ++j)
                r[i + j] = base_.add(r[i + j], base_.mul(da[i], db[j]));
        }
        // reduce by the monic modulus
        for (unsigned i = 2 * k_ - 2; i >= k_ && i < 2 * max_degree; --i) {
            std::uint64_t c = r[i];
            if (c == 0) continue;
            r[i] = 0;
            for (unsigned j = 0; j < k_; ++j)
                r[i - k_ + j] = base_.sub(r[i - k_ + j], base_.mul(c, modulus_[j]));
        }
        return pack(r);
    }

    elem inv(elem a) const {
        if (a == 0) fail("DivisionByZero", "inverse of 0 in GF(" + std::to_string(q_) + ")");
        // extended Euclid in F_p[x]
        Poly<PrimeField> r0(modulus_.begin(), modulus_.end()), r1 = to_poly(a);
        poly_trim(base_, r0);
        Poly<PrimeField> t0{}, t1{base_.one()};
        while (poly_deg<PrimeField>(r1) > 0) {
            auto [q, r] = poly_divmod(base_, r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            Poly<PrimeField> t2 = poly_sub(base_, t0, poly_mul(base_, q, t1));
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r1 is a nonzero constant (gcd = 1 since modulus irreducible)
        Poly<PrimeField> res = poly_scale(base_, t1, base_.inv(r1[0]));
        return from_poly(res);
    }

    elem div(elem a, elem b) const { return mul(a, inv(b)); }

    elem from_int(std::int64_t v) const {
        return base_.from_int(v);  // prime subfield embedding: digit 0
    }

    elem element(std::uint64_t i) const {
        if (i >= q_) fail("DimensionMismatch", "element index out of range");
        return i;
    }
    std::uint64_t index_of(elem a) const { return a; }
    bool less(elem a, elem b) const { return a < b; }

    /// text form: bracketed ascending coefficient list, e.g. "[1,0]" = 1
    std::string to_string(elem a) const {
        digits d;
        unpack(a, d);
        std::string s = "[";
        for (unsigned i = 0; i < k_; ++i) {
            if (i) s += ",";
            s += std::to_string(d[i]);
        }
        return s + "]";
    }

    elem parse(const std::string& s) const {
        if (s.empty()) fail("SchemaViolation", "empty scalar literal");
        if (s.front() != '[') {
            return base_.parse(s);  // bare residue = prime subfield element
        }
        if (s.back() != ']') fail("SchemaViolation", "bad scalar literal '" + s + "'");
        digits d{};
        unsigned idx = 0;
        std::string cur;
        for (std::size_t i = 1; i + 1 <= s.size() - 1; ++i) {
            if (s[i] == ',') {
                if (idx >= k_) fail("SchemaViolation", "too many coefficients in '" + s + "'");
                d[idx++] = base_.parse(cur);
                cur.clear();
            } else {
                cur += s[i];
            }
        }
        if (idx >= k_) fail("SchemaViolation", "too many coefficients in '" + s + "'");
        d[idx++] = base_.parse(cur);
        return pack(d);
    }

    Poly<PrimeField> to_poly(elem a) const {
        digits d;
        unpack(a, d);
        Poly<PrimeField> p(d.begin(), d.begin() + k_);
        poly_trim(base_, p);
        return p;
    }

    elem from_poly(const Poly<PrimeField>& p) const {
        digits d{};
        for (std::size_t i = 0; i < p.size() && i < k_; ++i) d[i] = p[i];
        return pack(d);
    }

    bool operator==(const ExtField& o) const {
        return base_ == o.base_ && k_ == o.k_ && modulus_ == o.modulus_;
    }
    bool operator!=(const ExtField& o) const { return !(*this == o); }

private:
    PrimeField base_;
    unsigned k_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;  // ascending, monic
};

} // namespace autalg

#endif
