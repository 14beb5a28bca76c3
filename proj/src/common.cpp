#include "common.hpp"

namespace ccuv {

const char* errc_name(errc c) {
    switch (c) {
    case errc::ok: return "ok";
    case errc::invalid_argument: return "invalid_argument";
    case errc::not_prime: return "not_prime";
    case errc::even_prime: return "even_prime";
    case errc::reducible_polynomial: return "reducible_polynomial";
    case errc::zero_input: return "zero_input";
    case errc::division_by_zero: return "division_by_zero";
    case errc::not_a_unit: return "not_a_unit";
    case errc::not_a_square: return "not_a_square";
    case errc::bound_violation: return "bound_violation";
    case errc::not_a_unit_form: return "not_a_unit_form";
    case errc::uncovered_family: return "uncovered_family";
    case errc::parse_error: return "parse_error";
    case errc::out_of_range: return "out_of_range";
    case errc::cap_exceeded: return "cap_exceeded";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::internal: return "internal";
    }
    return "unknown";
}

i64 checked_pow_i64(i64 base, u32 exp) {
    if (base < 0) fail(errc::invalid_argument, "checked_pow_i64: negative base");
    i64 r = 1;
    for (u32 i = 0; i < exp; ++i) {
        if (base != 0 && r > (std::int64_t{1} << 62) / base)
            fail(errc::out_of_range, "checked_pow_i64: overflow");
        r *= base;
    }
    return r;
}

} // namespace ccuv
