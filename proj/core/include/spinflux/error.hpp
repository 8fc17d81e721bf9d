#pragma once

#include <stdexcept>
#include <string>

namespace spinflux {

// Categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
    config = 2,
    phase = 3,
    numerical = 4,
    io = 5,
    domain = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline Error config_error(const std::string& msg) { return {ErrorKind::config, msg}; }
inline Error phase_error(const std::string& msg) { return {ErrorKind::phase, msg}; }
inline Error numerical_error(const std::string& msg) { return {ErrorKind::numerical, msg}; }
inline Error io_error(const std::string& msg) { return {ErrorKind::io, msg}; }
inline Error domain_error(const std::string& msg) { return {ErrorKind::domain, msg}; }

}  // namespace spinflux
