// Exact rational scalar type and small helpers.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace waring4 {

using Scalar = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using QVec = std::vector<Scalar>;

inline Scalar parse_scalar(const std::string& s) {
    try {
        return Scalar(s);
    } catch (const std::exception&) {
        throw std::runtime_error("cannot parse rational number: '" + s + "'");
    }
}

inline std::string scalar_str(const Scalar& q) { return q.str(); }

inline bool is_integer(const Scalar& q) { return denominator(q) == 1; }

}  // namespace waring4
