#pragma once

#include "sfc/curve.hpp"
#include "sfc/interval.hpp"

namespace sfc {

// The Gosper flowsnake: seven similar copies at scale 1/sqrt(7), rotation
// angles arctan(sqrt(3)/5) off multiples of 2*pi/3, three of them reversed.
// Matrix entries are exact field elements; only the fractal unit region
// needs conservative treatment (a certified enclosing circle).
ScanningOrder gosper_order();

// Rational upper bound q >= sqrt(v) for a nonnegative field element.
Rational sqrt_upper(const ExactScalar& v, unsigned bits);

}  // namespace sfc
