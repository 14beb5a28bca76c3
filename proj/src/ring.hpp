#pragma once

#include "field.hpp"

namespace ccuv {

// element a1 + a2*u + a3*v + a4*uv of F + uF + vF + uvF, u^2 = v^2 = 0, uv = vu
struct R4 {
    fq a1 = 0, a2 = 0, a3 = 0, a4 = 0;
    bool operator==(const R4&) const = default;
};

enum class UnitFamily {
    square,           // a1 a quadratic residue
    case_full,        // a1 nonresidue, a2 != 0, a3 != 0
    case_no_u,        // a1 nonresidue, a2 == 0, a3 != 0, a4 != 0
    case_no_v,        // a1 nonresidue, a3 == 0, a2 != 0, a4 != 0 (u<->v mirror of case_no_u)
    uncovered,
};

const char* family_name(UnitFamily f);

class Ring {
public:
    explicit Ring(const Field& F) : F_(&F) {}

    const Field& field() const { return *F_; }

    R4 zero() const { return {}; }
    R4 one() const { return {1, 0, 0, 0}; }
    R4 from_field(fq a) const { return {a, 0, 0, 0}; }

    R4 add(R4 a, R4 b) const;
    R4 sub(R4 a, R4 b) const;
    R4 neg(R4 a) const;
    R4 mul(R4 a, R4 b) const;
    R4 scale(R4 a, fq c) const;
    R4 pow(R4 a, u64 e) const;
    bool is_zero(R4 a) const { return a == R4{}; }

    bool is_unit(R4 a) const { return a.a1 != 0; }
    R4 inv(R4 a) const;  // a a unit
    // whether the unit a is a square in the ring
    bool is_square_unit(R4 a) const;
    // gamma with gamma^2 == a, for a square unit; deterministic choice
    R4 sqrt_unit(R4 a) const;
    UnitFamily classify_unit(R4 a) const;
    R4 swap_uv(R4 a) const { return {a.a1, a.a3, a.a2, a.a4}; }

    std::string to_string(R4 a) const;
    R4 parse(std::string_view text) const;

private:
    const Field* F_;
};

} // namespace ccuv
