#pragma once

#include "common.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ccuv {

// element of GF(p^m), encoded as sum_i c_i * p^i with digits c_i in [0, p)
using fq = u64;

class Field {
public:
    // p odd prime, m >= 1, s >= 1, p^m <= 2^31, p^s <= 2^31.
    // irreducible: monic degree-m polynomial c_0,...,c_m over F_p; when absent the
    // smallest monic irreducible (by integer encoding of c_0..c_{m-1}) is chosen.
    static Field make(u64 p, u32 m, u32 s, const std::vector<u64>* irreducible = nullptr);

    u64 p() const { return p_; }
    u32 m() const { return m_; }
    u32 s() const { return s_; }
    u64 q() const { return q_; }       // p^m
    i64 ps() const { return ps_; }     // p^s
    i64 n() const { return 2 * ps_; }  // code length 2 p^s
    const std::vector<u64>& irreducible() const { return irr_; }

    fq add(fq a, fq b) const;
    fq sub(fq a, fq b) const;
    fq neg(fq a) const;
    fq mul(fq a, fq b) const;
    fq inv(fq a) const;      // a != 0
    fq pow(fq a, u64 e) const;
    fq frobenius(fq a) const;  // a |-> a^p
    fq from_int(u64 c) const { return c % p_; }

    bool is_qr(fq a) const;  // a != 0
    // canonical square root of a quadratic residue: of the two roots r, -r the one
    // with the smaller digit at the lowest nonzero coordinate; sqrt(0) = 0
    fq sqrt(fq a) const;
    // the unique a0 with a0^(p^s) == alpha1 (alpha1 != 0)
    fq alpha0_root(fq alpha1) const;

    void digits(fq a, u64* out) const;  // m digits, ascending
    fq pack(const u64* d) const;

    std::string describe() const;  // GF(p^m; irreducible=c_0,...,c_m)
    std::string to_string(fq a) const;
    fq parse(std::string_view text) const;

private:
    u64 p_ = 0;
    u32 m_ = 0, s_ = 0;
    u64 q_ = 0;
    i64 ps_ = 0;
    std::vector<u64> irr_;  // c_0..c_m, monic
    std::vector<u64> red_;  // x^m = sum_j red_[j] x^j in the quotient
};

bool is_prime_u64(u64 x);

} // namespace ccuv
