#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace surfcohom {

using BigInt = boost::multiprecision::cpp_int;

} // namespace surfcohom
