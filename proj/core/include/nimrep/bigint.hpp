#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nimrep {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace nimrep
