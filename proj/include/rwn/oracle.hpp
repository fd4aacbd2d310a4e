#ifndef RWN_ORACLE_HPP
#define RWN_ORACLE_HPP

#include <string>
#include <vector>

#include "rwn/constants.hpp"

namespace rwn::oracle {

struct OracleValue {
    double eps = 0.0;
    bool in_range = false; // defined iff k^2 > (Z alpha)^2
};

// Sommerfeld fine structure spectrum of the flat-space point-Coulomb Dirac
// operator,
//   eps = 1 / sqrt(1 + (Z alpha)^2 / (n - |k| + sqrt(k^2 - (Z alpha)^2))^2),
// for n >= 1 and k in {-n, ..., -1, 1, ..., n-1}. k = +n is rejected.
OracleValue sommerfeld(int n, int k, double z, double alpha = constants::alpha_fs);

// Dimensionless Bohr spectrum, -(1/2)(Z alpha + grav_term)^2 / n^2, in units
// of m_e c^2 (grav_term is the dimensionless G M m_e / hbar c).
double bohr(int n, double z, double alpha = constants::alpha_fs, double grav_term = 0.0);

// Qualitative targets read off the literature eigenvalue plot: where the
// lowest curve crosses eps = 0, and where the two lowest curves meet the
// eps = -1 continuum, with tolerances in Z.
struct Landmark {
    std::string curve;
    double z;
    double eps;
    double z_tolerance;
};

std::vector<Landmark> fig1_landmarks();

} // namespace rwn::oracle

#endif
