#ifndef RWN_IO_HPP
#define RWN_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rwn/barriers.hpp"
#include "rwn/integrator.hpp"
#include "rwn/shooting.hpp"
#include "rwn/wavefunction.hpp"

namespace rwn::io {

// Full round-trip precision ("%.17g"); parsing the text recovers the bits.
std::string format_double(double x);

// Spectral table, header Z,k,N,n,epsilon,oracle_epsilon,delta,bracket_width,
// iterations,status. Optional fields are empty; statuses are ok/absent/error.
void write_table_csv(const shooting::SpectralTable& t, std::ostream& os);
shooting::SpectralTable read_table_csv(std::istream& is);

// JSON mirror with identical field names (null for missing values, plus a
// fine-grained "detail" status string).
void write_table_json(const shooting::SpectralTable& t, std::ostream& os);
shooting::SpectralTable read_table_json(std::istream& is);

void write_table_file(const shooting::SpectralTable& t, const std::string& path, bool json);
shooting::SpectralTable read_table_file(const std::string& path, bool json);

// Orbit dump: header tau,eta,omega_lift, one row per accepted step.
void write_trajectory_csv(const ode::Trajectory<2>& traj, std::ostream& os);

// Radial solution dump: header r,u,v,R,omega.
void write_radial_csv(const wavefunction::RadialSolution& sol, std::ostream& os);

// One line per report: name,grid,min_margin,passed.
void write_barrier_reports(const std::vector<barriers::BarrierReport>& reports,
                           std::ostream& os);

} // namespace rwn::io

#endif
