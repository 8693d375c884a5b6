#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kron {

using bigint = boost::multiprecision::cpp_int;

} // namespace kron
