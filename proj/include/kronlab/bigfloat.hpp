#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>
#include <string>

#include "kronlab/rational.hpp"

namespace kronlab {

using BigReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>, boost::multiprecision::et_off>;
using BigComplex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>>,
    boost::multiprecision::et_off>;

template <class R>
struct NumTraits;

template <>
struct NumTraits<double> {
  using Complex = std::complex<double>;
  static double pi() { return boost::math::constants::pi<double>(); }
  static double from_rational(const Rational& r) { return r.get_d(); }
  static double epsilon() { return 1e-17; }
  static double to_double(double x) { return x; }
};

template <>
struct NumTraits<BigReal> {
  using Complex = BigComplex;
  static BigReal pi() { return boost::math::constants::pi<BigReal>(); }
  static BigReal from_rational(const Rational& r) {
    return BigReal(r.get_num().get_str()) / BigReal(r.get_den().get_str());
  }
  static BigReal epsilon() { return BigReal("1e-40"); }
  static double to_double(const BigReal& x) { return static_cast<double>(x); }
};

inline bool is_zero_value(const BigComplex& x) { return x == BigComplex(0); }

template <class R>
using Cplx = typename NumTraits<R>::Complex;

}  // namespace kronlab
