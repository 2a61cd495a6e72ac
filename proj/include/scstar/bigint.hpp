#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace scstar {

using Big = boost::multiprecision::cpp_int;

inline Big pow2(int e) { return Big(1) << e; }

} // namespace scstar
