#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace basetwo {

/// Exact group orders. Desk-scale values fit in 64 bits, but nothing here
/// assumes so.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Narrowing conversion; throws when the value does not fit.
std::uint64_t to_u64(const BigInt& v);

}  // namespace basetwo
