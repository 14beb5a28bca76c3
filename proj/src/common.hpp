#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccuv {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;
using u8 = std::uint8_t;

enum class errc {
    ok = 0,
    invalid_argument,
    not_prime,
    even_prime,
    reducible_polynomial,
    zero_input,
    division_by_zero,
    not_a_unit,
    not_a_square,
    bound_violation,
    not_a_unit_form,
    uncovered_family,
    parse_error,
    out_of_range,
    cap_exceeded,
    budget_exceeded,
    internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc c, std::string msg) : std::runtime_error(std::move(msg)), code_(c) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

// base^exp with overflow detection
i64 checked_pow_i64(i64 base, u32 exp);

} // namespace ccuv
