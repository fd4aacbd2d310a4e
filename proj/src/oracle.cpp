#include "rwn/oracle.hpp"

#include <cmath>

#include "rwn/error.hpp"

namespace rwn::oracle {

OracleValue sommerfeld(int n, int k, double z, double alpha) {
    if (n < 1)
        throw Error(ErrorCode::invalid_argument, "sommerfeld: n must be >= 1");
    if (k == 0 || std::abs(k) > n)
        throw Error(ErrorCode::invalid_argument, "sommerfeld: k must be nonzero with |k| <= n");
    if (k == n)
        throw Error(ErrorCode::invalid_argument, "sommerfeld: k = +n is not in the index set");
    if (!(z > 0.0) || !(alpha > 0.0))
        throw Error(ErrorCode::invalid_argument, "sommerfeld: Z and alpha must be positive");

    const double za = z * alpha;
    if (za * za >= static_cast<double>(k) * k)
        return {0.0, false};
    const double root = std::sqrt(static_cast<double>(k) * k - za * za);
    const double denom = n - std::abs(k) + root;
    return {1.0 / std::sqrt(1.0 + za * za / (denom * denom)), true};
}

double bohr(int n, double z, double alpha, double grav_term) {
    if (n < 1)
        throw Error(ErrorCode::invalid_argument, "bohr: n must be >= 1");
    if (grav_term < 0.0)
        throw Error(ErrorCode::invalid_argument, "bohr: grav_term must be non-negative");
    const double coupling = z * alpha + grav_term;
    return -0.5 * coupling * coupling / (static_cast<double>(n) * n);
}

std::vector<Landmark> fig1_landmarks() {
    return {
        {"1S-crossing", 145.0, 0.0, 2.0},
        {"1S-continuum", 147.0, -1.0, 3.0},
        {"2P-continuum", 160.0, -1.0, 5.0},
    };
}

} // namespace rwn::oracle
