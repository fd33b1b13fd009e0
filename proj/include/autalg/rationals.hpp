#ifndef AUTALG_RATIONALS_HPP
#define AUTALG_RATIONALS_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace autalg {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

/// Q with arbitrary-precision reduced fractions (characteristic 0).
/// Canonical enumeration walks the integers 0, 1, 2, ... first; parameter
/// selection never needs to reach past them.
class BigRational {
public:
    using elem = bigrat;

    std::uint64_t characteristic() const { return 0; }
    unsigned degree() const { return 1; }
    bool finite() const { return false; }
    std::uint64_t size() const {
        fail("DimensionMismatch", "rational field is infinite");
    }

    elem zero() const { return bigrat(0); }
    elem one() const { return bigrat(1); }
    bool is_zero(const elem& a) const { return a == 0; }
    bool eq(const elem& a, const elem& b) const { return a == b; }

    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem neg(const elem& a) const { return -a; }
    elem mul(const elem& a, const elem& b) const { return a * b; }

    elem inv(const elem& a) const {
        if (a == 0) fail("DivisionByZero", "inverse of 0 in Q");
        return 1 / a;
    }
    elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }

    elem from_int(std::int64_t v) const { return bigrat(v); }

    elem element(std::uint64_t i) const { return bigrat(i); }
    std::uint64_t index_of(const elem& a) const {
        if (boost::multiprecision::denominator(a) != 1 || a < 0)
            fail("DimensionMismatch", "no canonical index for non-integer rational");
        return (std::uint64_t)boost::multiprecision::numerator(a);
    }
    bool less(const elem& a, const elem& b) const { return a < b; }

    std::string to_string(const elem& a) const {
        bigint num = boost::multiprecision::numerator(a);
        bigint den = boost::multiprecision::denominator(a);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    elem parse(const std::string& s) const {
        if (s.empty()) fail("SchemaViolation", "empty scalar literal");
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return bigrat(bigint(s));
            bigint num(s.substr(0, slash));
            bigint den(s.substr(slash + 1));
            if (den == 0) fail("DivisionByZero", "zero denominator in '" + s + "'");
            // the (num, den) ctor rejects negative denominators; division normalizes
            return bigrat(num) / bigrat(den);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail("SchemaViolation", "bad rational literal '" + s + "'");
        }
    }

    bool operator==(const BigRational&) const { return true; }
    bool operator!=(const BigRational&) const { return false; }
};

} // namespace autalg

#endif
