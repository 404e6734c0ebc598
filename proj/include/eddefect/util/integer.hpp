#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace eddefect {

using Integer = boost::multiprecision::cpp_int;

}  // namespace eddefect
