#pragma once

#include "distance.hpp"

namespace ccuv {

// RREF F_p basis of a code over F_p^(n*block); block digits per code position
struct BasisMatrix {
    i64 n = 0;
    i64 block = 0;
    u64 p = 0;
    std::vector<std::vector<u8>> rows;
    std::vector<i64> pivots;
    i64 rank() const { return static_cast<i64>(rows.size()); }
    i64 cols() const { return n * block; }
};

struct RrefResult {
    i64 rank = 0;
    std::vector<i64> pivots;
};
RrefResult rref_inplace(std::vector<std::vector<u8>>& rows, u64 p);

std::vector<u8> flatten(const Ambient& A, const QuotPoly& f);
std::vector<u8> flatten_base(const Field& F, const FPoly& f);

BasisMatrix basis_from_generators(const Ambient& A, const std::vector<QuotPoly>& gens);
BasisMatrix basis_matrix(const Ambient& A, const IdealSpec& spec);
// <(x^2-alpha0)^ell> in F[x]/(x^n - alpha), alpha0^(p^s) = alpha
BasisMatrix basis_matrix_base(const Field& F, fq alpha, i64 ell);

bool member(const BasisMatrix& B, std::vector<u8> vec);
std::vector<std::vector<u8>> parity_check(const BasisMatrix& B);

i64 hamming_weight_flat(const std::vector<u8>& v, i64 block);
i64 pair_weight_flat(const std::vector<u8>& v, i64 block);

struct WeightCert {
    enum class Kind { exact, lower_bound, budget_exceeded, cap_exceeded };
    Kind kind = Kind::exact;
    i64 value = 0;            // exact minimum, or "minimum >= value" for lower_bound
    i64 upper = -1;           // best weight observed when not exact (-1: none seen)
    std::vector<u8> witness;  // flat minimizer for exact results (empty for the zero code)
    u64 nodes = 0;
    i64 searched = 0;         // largest support size fully explored (witness search)
};

struct ExhaustiveResult {
    WeightCert dh, dsp;
};

// walks all p^rank codewords (Gray order); requires p^rank <= cap
ExhaustiveResult exhaustive_min(const BasisMatrix& B, u64 cap);

// support-driven search over supports of size <= w_max
WeightCert min_hamming(const BasisMatrix& B, i64 w_max, u64 node_budget);
WeightCert min_pair(const BasisMatrix& B, i64 w_max, u64 node_budget);

struct OracleOptions {
    u64 cap = 5'000'000;  // exhaustive codeword limit, also the witness node budget
    i64 wmax = 0;         // witness support bound when the exhaustive walk is too big; 0 = off
};

struct OracleReport {
    i64 rank = 0;
    bool exhaustive = false;
    WeightCert dh, dsp;
};

OracleReport oracle_eval(const Ambient& A, const IdealSpec& spec, const OracleOptions& opts);
OracleReport oracle_eval_base(const Field& F, fq alpha, i64 ell, const OracleOptions& opts);

} // namespace ccuv
