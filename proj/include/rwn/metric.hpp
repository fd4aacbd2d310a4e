#ifndef RWN_METRIC_HPP
#define RWN_METRIC_HPP

#include "rwn/params.hpp"

namespace rwn::metric {

// f(r) = sqrt(1 - 2A*/r + Z*^2/r^2); identically 1 when gravity is off.
double f(double r, const ModelParams& p);

// Compactified form, g(eta) = eta * f(r(eta)):
//   g(eta) = sqrt((1 + 2A* + Z*^2) eta^2 - 2(A* + Z*^2) eta + Z*^2),
// strictly positive on (0,1] in the naked sector; g(0) = Z*, g(1) = 1.
double g(double eta, const ModelParams& p);

// eta = r/(1+r) and its inverse r = eta/(1-eta); mutually inverse
// diffeomorphisms between (0,inf) and (0,1).
double eta_of_r(double r);
double r_of_eta(double eta);

} // namespace rwn::metric

#endif
