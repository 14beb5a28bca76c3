#pragma once

#include "quotient.hpp"

#include <random>
#include <string>
#include <vector>

namespace ccuv {

// ideal shapes in R[x]/(x^{2 p^s} - alpha), alpha a nonsquare unit:
//   a0 = <0>, a1 = <1>
//   b  = <u (x^2-alpha0)^ell>
//   c  = <(x^2-alpha0)^ell + u (x^2-alpha0)^t z(x)>
//   d  = <(x^2-alpha0)^ell + u (x^2-alpha0)^t z(x), u (x^2-alpha0)^mu>
enum class IdealType { a0, a1, b, c, d };

const char* type_name(IdealType t);
IdealType type_from_name(std::string_view name);

// z(x) = sum_k (z0k x + z1k) (x^2 - alpha0)^k over the field, k ascending
struct ZPoly {
    std::vector<std::pair<fq, fq>> pairs;
    bool is_zero() const;
    bool unit_part() const;  // k = 0 pair nonzero
    void trim();
    bool operator==(const ZPoly&) const = default;
};

struct IdealSpec {
    IdealType type = IdealType::a0;
    i64 ell = 0, t = 0, mu = 0;
    ZPoly z;
};

// for type d, z-terms with t + k >= mu already lie in <u (x^2-alpha0)^mu>
// and are dropped; a fully absorbed z becomes 0 (and t resets)
IdealSpec canonicalize(const Ambient& A, IdealSpec spec);

// canonicalize, then enforce the shape bounds; returns the canonical spec
IdealSpec validate_spec(const Ambient& A, IdealSpec spec);

// bounds that make sense for any unit alpha (no family gate, mu only range-
// checked); the generator/oracle path accepts these even when no closed-form
// count applies
IdealSpec validate_structural(const Ambient& A, IdealSpec spec);

// smallest I with u (x^2-alpha0)^I in the ideal generated by the type-c part
i64 im_value(const Ambient& A, const IdealSpec& spec);

// log_p of the codeword count
i64 count_exponent(const Ambient& A, const IdealSpec& spec);

std::vector<QuotPoly> generators(const Ambient& A, const IdealSpec& spec);

struct EnumPolicy {
    enum class Kind { zero_only, representative, random_k };
    Kind kind = Kind::representative;
    int k = 1;
    u64 seed = 1;
};

// full classification listing: a0, a1, all b, all c, all d, with z samples
// chosen by policy (zero_only skips the z != 0 blocks; representative uses
// z = 1; random_k draws k unit z per cell)
std::vector<IdealSpec> enumerate_specs(const Ambient& A, const EnumPolicy& policy);

std::string z_to_string(const Ambient& A, const ZPoly& z);    // expanded polynomial in x
ZPoly parse_z(const Ambient& A, std::string_view text);       // polynomial in x over the field
ZPoly random_unit_z(const Ambient& A, std::mt19937_64& rng, i64 max_kappa);
std::string ideal_label(const Ambient& A, const IdealSpec& spec);

} // namespace ccuv
