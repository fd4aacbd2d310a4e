#ifndef RWN_ERROR_HPP
#define RWN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rwn {

enum class ErrorCode {
    invalid_argument,
    not_naked,          // metric root would be real: A* >= Z* with gravity on
    domain,             // evaluation outside an operation's domain
    bracket_not_found,
    undecided_orbit,
    step_limit,
    step_underflow,
    non_connector,
    io,
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::invalid_argument: return "invalid-argument";
        case ErrorCode::not_naked: return "not-naked";
        case ErrorCode::domain: return "domain";
        case ErrorCode::bracket_not_found: return "bracket-not-found";
        case ErrorCode::undecided_orbit: return "undecided-orbit";
        case ErrorCode::step_limit: return "step-limit";
        case ErrorCode::step_underflow: return "step-underflow";
        case ErrorCode::non_connector: return "non-connector";
        case ErrorCode::io: return "io";
        case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

} // namespace rwn

#endif
