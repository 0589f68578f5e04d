#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chromabound {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace chromabound
