#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace courtmix {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

struct SingularSystem : std::runtime_error {
    SingularSystem() : std::runtime_error("linear system is singular") {}
};

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational component exceeds 64 bits");
    return v.convert_to<std::int64_t>();
}

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// Solve A x = b exactly by Gaussian elimination with pivoting.
RationalVector solve_linear(RationalMatrix a, RationalVector b);

/// Exact matrix inverse; throws SingularSystem.
RationalMatrix invert(const RationalMatrix& a);

}  // namespace courtmix
