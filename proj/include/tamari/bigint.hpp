#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tamari {

/// Exact arbitrary-precision integer. All coefficients in this library are
/// integers; no floating point is used anywhere.
using Int = boost::multiprecision::cpp_int;

}  // namespace tamari
