#pragma once

#include "ring.hpp"

#include <utility>
#include <vector>

namespace ccuv {

// element of R[x]/(x^n - alpha), dense coefficients, size n
using QuotPoly = std::vector<R4>;

// f(x) = sum_k (a_k x + b_k) (x^2 - alpha0)^k, k in [0, p^s)
struct AdicPair {
    R4 a, b;
};
using AdicForm = std::vector<AdicPair>;

// the working quotient R[x]/(x^{2 p^s} - alpha) for a unit alpha
struct Ambient {
    Field field;
    R4 alpha_input;            // as given
    R4 alpha;                  // working value: u<->v applied when input is case_no_v
    UnitFamily input_family;   // of alpha_input
    bool swapped = false;
    fq alpha0 = 0;             // alpha0^(p^s) == alpha.a1

    static Ambient make(const Field& f, R4 alpha_in);
    static Ambient make(const Field& f, std::string_view alpha_literal);

    Ring ring() const { return Ring(field); }
    i64 n() const { return field.n(); }
    i64 ps() const { return field.ps(); }
    // case_no_v reduces to case_no_u after the swap
    UnitFamily working_family() const {
        return input_family == UnitFamily::case_no_v ? UnitFamily::case_no_u : input_family;
    }
    bool covered() const {
        UnitFamily w = working_family();
        return w == UnitFamily::case_full || w == UnitFamily::case_no_u;
    }
};

QuotPoly qp_zero(const Ambient& A);
QuotPoly qp_one(const Ambient& A);
bool qp_is_zero(const QuotPoly& f);
QuotPoly qp_add(const Ambient& A, const QuotPoly& f, const QuotPoly& g);
QuotPoly qp_scale(const Ambient& A, const QuotPoly& f, R4 c);
QuotPoly qp_mul(const Ambient& A, const QuotPoly& f, const QuotPoly& g);
QuotPoly qp_mul_x(const Ambient& A, const QuotPoly& f);  // multiply by x (constacyclic shift)
QuotPoly x2ma0_pow(const Ambient& A, i64 e);             // (x^2 - alpha0)^e

AdicForm to_adic(const Ambient& A, const QuotPoly& f);
QuotPoly from_adic(const Ambient& A, const AdicForm& pairs);

// index e with (x^2 - alpha0)^e == 0 and (x^2 - alpha0)^(e-1) != 0
i64 nilpotency_index(const Ambient& A);

// base-field analogue: F[x]/(x^n - alpha1), dense coefficients, size n
using FPoly = std::vector<fq>;

FPoly fp_mul(const Field& F, fq alpha1, const FPoly& f, const FPoly& g);
FPoly fp_x2ma0_pow(const Field& F, fq alpha1, fq alpha0, i64 e);
std::vector<std::pair<fq, fq>> fp_to_adic(const Field& F, fq alpha0, FPoly f);
FPoly fp_from_adic(const Field& F, fq alpha0, const std::vector<std::pair<fq, fq>>& pairs);

} // namespace ccuv
