#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace mubcomp {

/// Exact rational used for normalized squared inner products and Welch ratios.
using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

}  // namespace mubcomp
