#ifndef MONODYN_ERROR_HPP
#define MONODYN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace monodyn {

enum class errc {
    invalid_parameter,
    threshold_exceeds_degree,
    unsupported_majority,
    unsupported_regime,
    parse_error,
    construction_failed,
};

inline const char* to_string(errc c) {
    switch (c) {
        case errc::invalid_parameter: return "invalid-parameter";
        case errc::threshold_exceeds_degree: return "threshold-exceeds-degree";
        case errc::unsupported_majority: return "unsupported-majority";
        case errc::unsupported_regime: return "unsupported-regime";
        case errc::parse_error: return "parse-error";
        case errc::construction_failed: return "construction-failed";
    }
    return "unknown";
}

/// Error thrown by all monodyn operations; carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace monodyn

#endif
