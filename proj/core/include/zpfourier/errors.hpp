#pragma once

#include <stdexcept>
#include <string>

namespace zpf {

// Every recoverable failure carries one of these codes so callers (and the
// CLI exit-code mapping) can dispatch without string matching.
enum class Errc {
    not_prime,
    not_irreducible,
    field_too_large,
    element_not_canonical,
    division_by_zero,
    zero_element,
    order_not_divisible,
    bad_root_override,
    length_mismatch,
    index_out_of_range,
    size_mismatch,
    zero_difference,
    length_exceeds_group,
    domain_too_small,
    mismatched_parameters,
    zero_function,
    cap_exceeded,
    not_square,
    bad_argument,
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// A mathematical invariant that the theory guarantees has been observed to
// fail. This is a bug signal, never a finding; it maps to its own exit code.
class HardFailure : public std::logic_error {
public:
    explicit HardFailure(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace zpf
