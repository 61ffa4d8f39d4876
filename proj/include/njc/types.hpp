#pragma once

#include <complex>

namespace njc {

using cplx = std::complex<double>;

}  // namespace njc
