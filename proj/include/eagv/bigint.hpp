#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace eagv {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow_big(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

} // namespace eagv
