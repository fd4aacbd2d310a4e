#include "rwn/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rwn/error.hpp"

namespace rwn::io {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

using shooting::EigenvalueRecord;
using shooting::RecordStatus;

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

RecordStatus status_from_string(const std::string& s) {
    if (s == "ok")
        return RecordStatus::ok;
    if (s == "absent" || s == "bracket-not-found")
        return RecordStatus::bracket_not_found;
    if (s == "undecided")
        return RecordStatus::undecided;
    return RecordStatus::error;
}

const char* table_header = "Z,k,N,n,epsilon,oracle_epsilon,delta,bracket_width,iterations,status";

} // namespace

void write_table_csv(const shooting::SpectralTable& t, std::ostream& os) {
    os << table_header << "\n";
    for (const auto& r : t.rows) {
        os << format_double(r.z) << ',' << r.k << ',' << r.N << ',' << r.n << ',';
        const bool have_eps = r.status == RecordStatus::ok || r.status == RecordStatus::undecided;
        if (have_eps)
            os << format_double(r.eps);
        os << ',';
        if (r.oracle_eps)
            os << format_double(*r.oracle_eps);
        os << ',';
        if (have_eps && r.oracle_eps)
            os << format_double(r.eps - *r.oracle_eps);
        os << ',';
        if (have_eps)
            os << format_double(r.bracket_width);
        os << ',' << r.iterations << ',' << record_status_csv(r.status) << "\n";
    }
}

shooting::SpectralTable read_table_csv(std::istream& is) {
    shooting::SpectralTable t;
    std::string line;
    if (!std::getline(is, line))
        throw Error(ErrorCode::io, "read_table_csv: empty input");
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        const auto f = split_csv(line);
        if (f.size() != 10)
            throw Error(ErrorCode::io, "read_table_csv: malformed row: " + line);
        EigenvalueRecord r;
        r.z = std::stod(f[0]);
        r.k = std::stoi(f[1]);
        r.N = std::stoi(f[2]);
        r.n = std::stoi(f[3]);
        if (!f[4].empty())
            r.eps = std::stod(f[4]);
        if (!f[5].empty())
            r.oracle_eps = std::stod(f[5]);
        if (!f[7].empty())
            r.bracket_width = std::stod(f[7]);
        r.iterations = std::stol(f[8]);
        r.status = status_from_string(f[9]);
        t.rows.push_back(std::move(r));
    }
    return t;
}

void write_table_json(const shooting::SpectralTable& t, std::ostream& os) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json j;
        j["Z"] = r.z;
        j["k"] = r.k;
        j["N"] = r.N;
        j["n"] = r.n;
        const bool have_eps = r.status == RecordStatus::ok || r.status == RecordStatus::undecided;
        j["epsilon"] = have_eps ? nlohmann::json(r.eps) : nlohmann::json();
        j["oracle_epsilon"] = r.oracle_eps ? nlohmann::json(*r.oracle_eps) : nlohmann::json();
        j["delta"] = have_eps && r.oracle_eps ? nlohmann::json(r.eps - *r.oracle_eps)
                                              : nlohmann::json();
        j["bracket_width"] = have_eps ? nlohmann::json(r.bracket_width) : nlohmann::json();
        j["iterations"] = r.iterations;
        j["status"] = record_status_csv(r.status);
        j["detail"] = shooting::record_status_name(r.status);
        rows.push_back(std::move(j));
    }
    os << rows.dump(2) << "\n";
}

shooting::SpectralTable read_table_json(std::istream& is) {
    nlohmann::json rows;
    is >> rows;
    shooting::SpectralTable t;
    for (const auto& j : rows) {
        EigenvalueRecord r;
        r.z = j.at("Z").get<double>();
        r.k = j.at("k").get<int>();
        r.N = j.at("N").get<int>();
        r.n = j.at("n").get<int>();
        if (!j.at("epsilon").is_null())
            r.eps = j.at("epsilon").get<double>();
        if (!j.at("oracle_epsilon").is_null())
            r.oracle_eps = j.at("oracle_epsilon").get<double>();
        if (!j.at("bracket_width").is_null())
            r.bracket_width = j.at("bracket_width").get<double>();
        r.iterations = j.at("iterations").get<long>();
        r.status = status_from_string(j.value("detail", j.at("status").get<std::string>()));
        t.rows.push_back(std::move(r));
    }
    return t;
}

void write_table_file(const shooting::SpectralTable& t, const std::string& path, bool json) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw Error(ErrorCode::io, "cannot open for writing: " + path);
    json ? write_table_json(t, os) : write_table_csv(t, os);
    if (!os)
        throw Error(ErrorCode::io, "write failed: " + path);
}

shooting::SpectralTable read_table_file(const std::string& path, bool json) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw Error(ErrorCode::io, "cannot open for reading: " + path);
    return json ? read_table_json(is) : read_table_csv(is);
}

void write_trajectory_csv(const ode::Trajectory<2>& traj, std::ostream& os) {
    os << "tau,eta,omega_lift\n";
    for (std::size_t i = 0; i < traj.t.size(); ++i)
        os << format_double(traj.t[i]) << ',' << format_double(traj.y[i][0]) << ','
           << format_double(traj.y[i][1]) << "\n";
}

void write_radial_csv(const wavefunction::RadialSolution& sol, std::ostream& os) {
    os << "r,u,v,R,omega\n";
    for (std::size_t i = 0; i < sol.r.size(); ++i)
        os << format_double(sol.r[i]) << ',' << format_double(sol.u[i]) << ','
           << format_double(sol.v[i]) << ',' << format_double(sol.R[i]) << ','
           << format_double(sol.omega[i]) << "\n";
}

void write_barrier_reports(const std::vector<barriers::BarrierReport>& reports,
                           std::ostream& os) {
    os << "name,grid,min_margin,passed\n";
    for (const auto& r : reports)
        os << r.name << ',' << r.grid << ',' << format_double(r.min_margin) << ','
           << (r.passed ? "true" : "false") << "\n";
}

} // namespace rwn::io
