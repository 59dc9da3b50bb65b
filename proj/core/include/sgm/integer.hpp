#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "sgm/error.hpp"

namespace sgm {

using Integer = boost::multiprecision::cpp_int;

inline std::int64_t to_int64(const Integer& v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        fail(ErrorKind::internal, "integer " + v.str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::internal, "64-bit overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::internal, "64-bit overflow in multiplication");
    return r;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b)
{
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

bool is_prime(std::int64_t p);

}  // namespace sgm
