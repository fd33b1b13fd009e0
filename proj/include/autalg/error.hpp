#ifndef AUTALG_ERROR_HPP
#define AUTALG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace autalg {

// Every failure carries a stable machine-readable code plus a human message.
// Codes are what tests and the CLI switch on; messages are free-form.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace autalg

#endif
