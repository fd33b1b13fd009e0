#ifndef AUTALG_PRIME_FIELD_HPP
#define AUTALG_PRIME_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace autalg {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// GF(p) with canonical residues 0..p-1.  Elements are plain uint64 values;
/// all arithmetic goes through the field object (the modulus is runtime data).
class PrimeField {
public:
    using elem = std::uint64_t;

    PrimeField() : p_(2) {}

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime_u64(p)) fail("NonPrimeCharacteristic", "characteristic " + std::to_string(p) + " is not prime");
        if (p >= (1ull << 31)) fail("NonPrimeCharacteristic", "characteristic too large (need p < 2^31)");
        if (p_ <= 256) {
            // small fields sit in hot enumeration loops; a multiplication table
            // replaces the div instruction there
            mul_tab_.resize(p_ * p_);
            for (std::uint64_t a = 0; a < p_; ++a)
                for (std::uint64_t b = 0; b < p_; ++b) mul_tab_[a * p_ + b] = a * b % p_;
        }
    }

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return 1; }
    bool finite() const { return true; }
    std::uint64_t size() const { return p_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    bool is_zero(elem a) const { return a == 0; }
    bool eq(elem a, elem b) const { return a == b; }

    elem add(elem a, elem b) const { elem s = a + b; return s >= p_ ? s - p_ : s; }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + p_ - b; }
    elem neg(elem a) const { return a == 0 ? 0 : p_ - a; }
    elem mul(elem a, elem b) const { return mul_tab_.empty() ? a * b % p_ : mul_tab_[a * p_ + b]; }

    elem inv(elem a) const {
        if (a == 0) fail("DivisionByZero", "inverse of 0 in GF(" + std::to_string(p_) + ")");
        // extended Euclid on (a, p)
        std::int64_t t = 0, nt = 1, r = (std::int64_t)p_, nr = (std::int64_t)a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += (std::int64_t)p_;
        return (elem)t;
    }

    elem div(elem a, elem b) const { return mul(a, inv(b)); }

    elem from_int(std::int64_t v) const {
        std::int64_t m = v % (std::int64_t)p_;
        if (m < 0) m += (std::int64_t)p_;
        return (elem)m;
    }

    /// canonical enumeration: 0, 1, ..., p-1
    elem element(std::uint64_t i) const {
        if (i >= p_) fail("DimensionMismatch", "element index out of range");
        return i;
    }
    std::uint64_t index_of(elem a) const { return a; }
    bool less(elem a, elem b) const { return a < b; }

    std::string to_string(elem a) const { return std::to_string(a); }

    elem parse(const std::string& s) const {
        if (s.empty()) fail("SchemaViolation", "empty scalar literal");
        std::size_t pos = 0;
        bool negate = false;
        if (s[0] == '-') { negate = true; pos = 1; }
        std::uint64_t v = 0;
        if (pos == s.size()) fail("SchemaViolation", "bad scalar literal '" + s + "'");
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9') fail("SchemaViolation", "bad scalar literal '" + s + "'");
            v = v * 10 + (std::uint64_t)(s[pos] - '0');
            v %= p_ * 10;  // keep bounded while reading
        }
        v %= p_;
        return negate ? neg(v) : v;
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return !(*this == o); }

private:
    std::uint64_t p_;
    std::vector<std::uint32_t> mul_tab_;
};

} // namespace autalg

#endif
