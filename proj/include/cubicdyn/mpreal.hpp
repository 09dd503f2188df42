#pragma once

#include <gmpxx.h>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <complex>
#include <string>

namespace cubicdyn {

namespace bmp = boost::multiprecision;

template <unsigned Digits>
using FloatD = bmp::number<bmp::cpp_bin_float<Digits>, bmp::et_off>;

using Float32 = FloatD<32>;
using Float64 = FloatD<64>;
using Float128 = FloatD<128>;
using Float256 = FloatD<256>;

// Working type of the explicit-map module.
using Real = Float64;
using Cplx = std::complex<Real>;

// Decimal expansion of r rounded toward zero to the given number of fractional digits.
std::string rat_to_decimal(const mpq_class& r, int digits);

template <class F>
F rat_to(const mpq_class& r) {
  return F(r.get_num().get_str().c_str()) / F(r.get_den().get_str().c_str());
}

}  // namespace cubicdyn
