#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace adelic {

// Error categories; the CLI maps them 1:1 onto exit codes.
enum class errc {
    usage = 1,        // inadmissible request: bad flags or a violated precondition
    verification = 2, // a certificate or consistency check failed
    schema = 3,       // malformed input document
    budget = 4,       // an enumeration or verification budget was exceeded
};

class error : public std::runtime_error {
public:
    error(errc kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail_usage(const std::string& msg) { throw error(errc::usage, msg); }
[[noreturn]] inline void fail_verification(const std::string& msg) { throw error(errc::verification, msg); }
[[noreturn]] inline void fail_schema(const std::string& msg) { throw error(errc::schema, msg); }
[[noreturn]] inline void fail_budget(const std::string& msg) { throw error(errc::budget, msg); }

} // namespace adelic
