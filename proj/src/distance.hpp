#pragma once

#include "ideal.hpp"

#include <optional>

namespace ccuv {

// partition of the key range: unit (minimum-weight codeword is a unit multiple
// of a power basis element, distance 1 resp. 2), ranged ((Gamma, gamma) cell),
// zero (the zero code)
struct Bucket {
    enum class Kind { unit, ranged, zero };
    Kind kind = Kind::unit;
    i64 Gamma = 0, gamma = 0;
};

// nu in [0, p^s]: unit at 0, ranged with
//   p^s - p^(s-gamma) + (Gamma-1) p^(s-gamma-1) + 1 <= nu <= p^s - p^(s-gamma) + Gamma p^(s-gamma-1)
// for nu in [1, p^s-1], zero at p^s
Bucket bucket_1ps(i64 nu, i64 p, i64 s);
// nu in [0, 2 p^s]: unit on [0, p^s], ranged on [p^s+1, 2p^s-1] (shifted by p^s), zero at 2 p^s
Bucket bucket_2ps(i64 nu, i64 p, i64 s);

struct CodeReport {
    i64 eta_exponent = 0;
    i64 d_h = 0;
    i64 d_sp = 0;
    std::optional<i64> im;
    std::string provenance;
};

i64 d_hamming(const Ambient& A, const IdealSpec& spec);
i64 d_symbol_pair(const Ambient& A, const IdealSpec& spec);

// simple-root-free base codes <(x^2-alpha0)^ell> in F_{p^m}[x]/(x^{2p^s} - alpha),
// alpha a nonsquare; ell in [0, p^s]
i64 d_hamming_base(i64 ell, i64 p, i64 m, i64 s);
i64 d_symbol_pair_base(i64 ell, i64 p, i64 m, i64 s);

// full formula evaluation for a validated spec
CodeReport evaluate(const Ambient& A, const IdealSpec& spec);

} // namespace ccuv
