#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace raneycore {

// Arbitrary-precision nonnegative integer; all counts and sizes are exact.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Natural& n) { return n.str(); }

namespace detail {

// Precondition violation visible to callers.
inline void check_arg(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Internal consistency check; active in all build types.
inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error(msg);
}

}  // namespace detail

}  // namespace raneycore
