#include "ideal.hpp"

#include <algorithm>
#include <cctype>

namespace ccuv {

const char* type_name(IdealType t) {
    switch (t) {
    case IdealType::a0: return "A0";
    case IdealType::a1: return "A1";
    case IdealType::b: return "B";
    case IdealType::c: return "C";
    case IdealType::d: return "D";
    }
    return "?";
}

IdealType type_from_name(std::string_view name) {
    if (name == "A0" || name == "a0") return IdealType::a0;
    if (name == "A1" || name == "a1") return IdealType::a1;
    if (name == "B" || name == "b") return IdealType::b;
    if (name == "C" || name == "c") return IdealType::c;
    if (name == "D" || name == "d") return IdealType::d;
    fail(errc::parse_error, "unknown ideal type '" + std::string(name) + "'");
}

bool ZPoly::is_zero() const {
    for (auto& [a, b] : pairs)
        if (a != 0 || b != 0) return false;
    return true;
}

bool ZPoly::unit_part() const {
    return !pairs.empty() && (pairs[0].first != 0 || pairs[0].second != 0);
}

void ZPoly::trim() {
    while (!pairs.empty() && pairs.back().first == 0 && pairs.back().second == 0)
        pairs.pop_back();
}

IdealSpec canonicalize(const Ambient& A, IdealSpec spec) {
    (void)A;
    spec.z.trim();
    if (spec.type == IdealType::d && !spec.z.is_zero()) {
        // u (x^2-alpha0)^(t+k) z0k-terms with t + k >= mu are multiples of the
        // second generator
        i64 keep = spec.mu - spec.t;  // pairs with k < keep survive
        if (keep < 0) keep = 0;
        if (static_cast<i64>(spec.z.pairs.size()) > keep)
            spec.z.pairs.resize(static_cast<size_t>(keep));
        spec.z.trim();
        if (spec.z.is_zero()) spec.t = 0;  // fully absorbed: t loses its meaning
    }
    // a t supplied without z is left alone for the validator to reject
    return spec;
}

namespace {

void check_range(const char* what, i64 v, i64 lo, i64 hi) {
    if (v < lo || v > hi)
        fail(errc::bound_violation, std::string(what) + " must lie in [" + std::to_string(lo) +
                                        ", " + std::to_string(hi) + "], got " + std::to_string(v));
}

// At ell = p^s + t the generator collapses to (x^2-alpha0)^t (u(alpha2+z) + alpha3 v + alpha4 uv)
// and the uv reduction carry enters scaled by alpha3 (2 alpha2 + z(x)): the carry dies to the
// extent that 2 alpha2 + z vanishes (x^2-alpha0)-adically.  j = min(val(2 alpha2 + z), t) measures
// the loss; j = 0 whenever alpha2 = 0 (z stays a unit).
i64 eq_shift(const Ambient& A, i64 t, const ZPoly& z) {
    const Field& F = A.field;
    fq two_a2 = F.add(A.alpha.a2, A.alpha.a2);
    for (size_t k = 0; k < z.pairs.size(); ++k) {
        fq zx = z.pairs[k].first;
        fq zc = k == 0 ? F.add(z.pairs[k].second, two_a2) : z.pairs[k].second;
        if (zx != 0 || zc != 0) return std::min<i64>(static_cast<i64>(k), t);
    }
    return t;
}

i64 im_c(const Ambient& A, i64 ell, i64 t, const ZPoly& z) {
    i64 ps = A.ps();
    bool zu = !z.is_zero();
    if (zu && ell == ps + t) return ps + eq_shift(A, t, z);
    if (A.working_family() == UnitFamily::case_full) {
        if (!zu) return std::min(ell, ps);
        return std::min({ell, ps, 2 * ps - ell + t});
    }
    if (!zu) return ell;
    return std::min(ell, 2 * ps + t - ell);
}

} // namespace

IdealSpec validate_structural(const Ambient& A, IdealSpec raw) {
    IdealSpec spec = canonicalize(A, raw);
    i64 ps = A.ps();
    i64 nmax = 2 * ps - 1;
    switch (spec.type) {
    case IdealType::a0:
    case IdealType::a1:
        if (spec.ell != 0 || spec.t != 0 || spec.mu != 0 || !spec.z.is_zero())
            fail(errc::invalid_argument,
                 std::string(type_name(spec.type)) + " takes no parameters");
        break;
    case IdealType::b:
        if (!spec.z.is_zero()) fail(errc::invalid_argument, "type B takes no z");
        if (spec.t != 0 || spec.mu != 0) fail(errc::invalid_argument, "type B takes only ell");
        check_range("ell", spec.ell, 0, nmax);
        break;
    case IdealType::c: {
        if (spec.mu != 0) fail(errc::invalid_argument, "type C takes no mu");
        bool zu = !spec.z.is_zero();
        if (zu && !spec.z.unit_part())
            fail(errc::not_a_unit_form, "z(x) must be 0 or carry a unit constant pair (z00 x + z10 != 0)");
        check_range("ell", spec.ell, zu ? 1 : 0, nmax);
        if (zu)
            check_range("t", spec.t, 0, spec.ell - 1);
        else if (spec.t != 0)
            fail(errc::invalid_argument, "type C takes t only alongside a nonzero z");
        break;
    }
    case IdealType::d: {
        bool zu = !spec.z.is_zero();
        if (zu && !spec.z.unit_part())
            fail(errc::not_a_unit_form, "z(x) must be 0 or carry a unit constant pair (z00 x + z10 != 0)");
        check_range("ell", spec.ell, zu ? 1 : 0, nmax);
        if (zu)
            check_range("t", spec.t, 0, spec.ell - 1);
        else if (spec.t != 0)
            fail(errc::invalid_argument, "type D takes t only alongside a nonzero z");
        check_range("mu", spec.mu, 0, nmax);
        break;
    }
    }
    return spec;
}

IdealSpec validate_spec(const Ambient& A, IdealSpec raw) {
    if (!A.covered())
        fail(errc::uncovered_family,
             std::string("alpha falls outside the covered families (") +
                 family_name(A.input_family) + ")");
    IdealSpec spec = validate_structural(A, std::move(raw));
    if (spec.type == IdealType::d) {
        i64 im = im_c(A, spec.ell, spec.t, spec.z);
        if (spec.mu >= im)
            fail(errc::bound_violation, "mu must lie in [0, " + std::to_string(im - 1) +
                                            "] (below I = " + std::to_string(im) + "), got " +
                                            std::to_string(spec.mu));
    }
    return spec;
}

i64 im_value(const Ambient& A, const IdealSpec& spec) {
    IdealSpec s = validate_spec(A, spec);
    if (s.type != IdealType::c && s.type != IdealType::d)
        fail(errc::invalid_argument, "I is defined for types C and D");
    return im_c(A, s.ell, s.t, s.z);
}

i64 count_exponent(const Ambient& A, const IdealSpec& spec) {
    IdealSpec s = validate_spec(A, spec);
    i64 ps = A.ps();
    i64 m = A.field.m();
    bool full = A.working_family() == UnitFamily::case_full;
    switch (s.type) {
    case IdealType::a0: return 0;
    case IdealType::a1: return 8 * m * ps;
    case IdealType::b: return 2 * m * (2 * ps - s.ell);
    case IdealType::c: {
        bool zu = !s.z.is_zero();
        if (zu && s.t >= 1 && s.ell == ps + s.t)
            return 2 * m * (2 * ps - s.t - eq_shift(A, s.t, s.z));
        if (full) {
            if (!zu) return s.ell <= ps ? 4 * m * (2 * ps - s.ell) : 2 * m * (3 * ps - s.ell);
            if (s.ell <= ps) return 4 * m * (2 * ps - s.ell);
            if (s.ell < ps + s.t) return 2 * m * (3 * ps - s.ell);
            return 2 * m * (2 * ps - s.t);
        }
        if (!zu) return 4 * m * (2 * ps - s.ell);
        if (2 * s.ell <= 2 * ps + s.t) return 4 * m * (2 * ps - s.ell);
        return 2 * m * (2 * ps - s.t);
    }
    case IdealType::d: return 2 * m * (4 * ps - s.ell - s.mu);
    }
    fail(errc::internal, "unreachable");
}

std::vector<QuotPoly> generators(const Ambient& A, const IdealSpec& spec) {
    IdealSpec s = validate_structural(A, spec);
    auto embed_u_poly = [&](const FPoly& f) {
        QuotPoly g = qp_zero(A);
        for (size_t i = 0; i < g.size(); ++i) g[i] = R4{0, f[i], 0, 0};
        return g;
    };
    auto u_times = [&](i64 e) {
        return qp_scale(A, x2ma0_pow(A, e), R4{0, 1, 0, 0});
    };
    auto c_part = [&]() {
        QuotPoly g = x2ma0_pow(A, s.ell);
        if (!s.z.is_zero()) {
            FPoly zf = fp_from_adic(A.field, A.alpha0, s.z.pairs);
            QuotPoly uz = qp_mul(A, embed_u_poly(zf), x2ma0_pow(A, s.t));
            g = qp_add(A, g, uz);
        }
        return g;
    };
    switch (s.type) {
    case IdealType::a0: return {};
    case IdealType::a1: return {qp_one(A)};
    case IdealType::b: return {u_times(s.ell)};
    case IdealType::c: return {c_part()};
    case IdealType::d: return {c_part(), u_times(s.mu)};
    }
    fail(errc::internal, "unreachable");
}

std::vector<IdealSpec> enumerate_specs(const Ambient& A, const EnumPolicy& policy) {
    if (A.input_family == UnitFamily::square) return {};  // handled by the two-factor split
    if (!A.covered())
        fail(errc::uncovered_family,
             std::string("alpha falls outside the covered families (") +
                 family_name(A.input_family) + ")");
    i64 ps = A.ps();
    i64 nmax = 2 * ps - 1;
    std::mt19937_64 rng(policy.seed);
    ZPoly one_z{{{0, 1}}};

    auto z_samples = [&](i64 max_kappa) {
        std::vector<ZPoly> out;
        switch (policy.kind) {
        case EnumPolicy::Kind::zero_only: break;
        case EnumPolicy::Kind::representative: out.push_back(one_z); break;
        case EnumPolicy::Kind::random_k:
            if (max_kappa < 0) {
                out.push_back(one_z);  // fully absorbed cell, keep the table shape
            } else {
                for (int i = 0; i < policy.k; ++i)
                    out.push_back(random_unit_z(A, rng, max_kappa));
            }
            break;
        }
        return out;
    };

    std::vector<IdealSpec> out;
    out.push_back({IdealType::a0, 0, 0, 0, {}});
    out.push_back({IdealType::a1, 0, 0, 0, {}});
    for (i64 ell = 0; ell <= nmax; ++ell) out.push_back({IdealType::b, ell, 0, 0, {}});
    for (i64 ell = 1; ell <= nmax; ++ell) out.push_back({IdealType::c, ell, 0, 0, {}});
    for (i64 ell = 1; ell <= nmax; ++ell)
        for (i64 t = 0; t < ell; ++t)
            for (auto& z : z_samples(ps - 1)) out.push_back({IdealType::c, ell, t, 0, z});
    for (i64 ell = 1; ell <= nmax; ++ell) {
        i64 im0 = im_c(A, ell, 0, {});
        for (i64 mu = 0; mu < im0; ++mu) out.push_back({IdealType::d, ell, 0, mu, {}});
    }
    for (i64 ell = 1; ell <= nmax; ++ell)
        for (i64 t = 0; t < ell; ++t) {
            bool eq = t >= 1 && ell == ps + t;
            i64 mu_cap = eq ? ps + t : im_c(A, ell, t, one_z);
            for (i64 mu = 0; mu < mu_cap; ++mu) {
                i64 max_kappa = std::min(mu - t - 1, ps - 1);
                for (auto& z : z_samples(max_kappa)) {
                    if (eq && mu >= ps + eq_shift(A, t, z)) continue;
                    out.push_back({IdealType::d, ell, t, mu, z});
                }
            }
        }
    return out;
}

ZPoly random_unit_z(const Ambient& A, std::mt19937_64& rng, i64 max_kappa) {
    if (max_kappa < 0) fail(errc::invalid_argument, "random_unit_z needs max_kappa >= 0");
    max_kappa = std::min(max_kappa, A.ps() - 1);
    std::uniform_int_distribution<u64> dist(0, A.field.q() - 1);
    ZPoly z;
    z.pairs.resize(static_cast<size_t>(max_kappa) + 1);
    for (auto& [a, b] : z.pairs) {
        a = dist(rng);
        b = dist(rng);
    }
    while (z.pairs[0].first == 0 && z.pairs[0].second == 0) {
        z.pairs[0].first = dist(rng);
        z.pairs[0].second = dist(rng);
    }
    z.trim();
    return z;
}

ZPoly parse_z(const Ambient& A, std::string_view text) {
    const Field& F = A.field;
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) fail(errc::parse_error, "empty z literal");

    FPoly coeffs(static_cast<size_t>(A.n()), 0);
    size_t i = 0;
    bool first = true;
    while (i < t.size()) {
        bool negate = false;
        if (t[i] == '+' || t[i] == '-') {
            negate = t[i] == '-';
            ++i;
            if (i >= t.size()) fail(errc::parse_error, "dangling sign in z literal");
        } else if (!first) {
            fail(errc::parse_error, "expected + or - in z literal");
        }
        first = false;

        int depth = 0;
        size_t start = i;
        while (i < t.size()) {
            char ch = t[i];
            if (ch == '(') ++depth;
            else if (ch == ')') --depth;
            else if ((ch == '+' || ch == '-') && depth == 0) break;
            ++i;
        }
        if (depth != 0) fail(errc::parse_error, "unbalanced parentheses in z literal");
        std::string_view term(t.data() + start, i - start);
        if (term.empty()) fail(errc::parse_error, "empty term in z literal");

        // split at a top-level 'x'
        size_t xpos = std::string_view::npos;
        int d2 = 0;
        for (size_t j = 0; j < term.size(); ++j) {
            if (term[j] == '(') ++d2;
            else if (term[j] == ')') --d2;
            else if (term[j] == 'x' && d2 == 0) {
                xpos = j;
                break;
            }
        }
        fq c = 1;
        u64 expo = 0;
        if (xpos == std::string_view::npos) {
            std::string_view cs = term;
            c = cs.front() == '(' && cs.back() == ')' ? F.parse(cs.substr(1, cs.size() - 2))
                                                      : F.parse(cs);
        } else {
            std::string_view cs = term.substr(0, xpos);
            if (!cs.empty() && cs.back() == '*') cs.remove_suffix(1);
            if (cs.empty())
                c = 1;
            else
                c = cs.front() == '(' && cs.back() == ')' ? F.parse(cs.substr(1, cs.size() - 2))
                                                          : F.parse(cs);
            expo = 1;
            std::string_view rest = term.substr(xpos + 1);
            if (!rest.empty()) {
                if (rest.front() != '^') fail(errc::parse_error, "malformed power in z literal");
                rest.remove_prefix(1);
                expo = 0;
                if (rest.empty()) fail(errc::parse_error, "missing exponent in z literal");
                for (char ch : rest) {
                    if (!std::isdigit(static_cast<unsigned char>(ch)))
                        fail(errc::parse_error, "malformed exponent in z literal");
                    expo = expo * 10 + static_cast<u64>(ch - '0');
                    if (expo > static_cast<u64>(A.n())) break;
                }
            }
        }
        if (expo >= static_cast<u64>(A.n()))
            fail(errc::parse_error, "z degree must be below 2 p^s");
        if (negate) c = F.neg(c);
        coeffs[expo] = F.add(coeffs[expo], c);
    }
    ZPoly z;
    z.pairs = fp_to_adic(F, A.alpha0, coeffs);
    z.trim();
    return z;
}

std::string z_to_string(const Ambient& A, const ZPoly& z) {
    const Field& F = A.field;
    if (z.is_zero()) return "0";
    std::vector<std::pair<fq, fq>> pairs = z.pairs;
    FPoly coeffs = fp_from_adic(F, A.alpha0, pairs);
    std::string out;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += "+";
        std::string cs = F.to_string(coeffs[i]);
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs.find('+') != std::string::npos ? "(" + cs + ")" : cs;
            out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string ideal_label(const Ambient& A, const IdealSpec& spec) {
    const Field& F = A.field;
    std::string a0s = F.to_string(A.alpha0);
    if (a0s.find('+') != std::string::npos) a0s = "(" + a0s + ")";
    std::string base = "(x^2-" + a0s + ")";
    auto P = [&](i64 e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return base;
        return base + "^" + std::to_string(e);
    };
    switch (spec.type) {
    case IdealType::a0: return "<0>";
    case IdealType::a1: return "<1>";
    case IdealType::b: return "<u" + P(spec.ell) + ">";
    case IdealType::c: {
        std::string g = spec.ell == 0 ? "1" : P(spec.ell);
        if (!spec.z.is_zero()) g += "+u" + P(spec.t) + "z(x)";
        return "<" + g + ">";
    }
    case IdealType::d: {
        std::string g = spec.ell == 0 ? "1" : P(spec.ell);
        if (!spec.z.is_zero()) g += "+u" + P(spec.t) + "z(x)";
        return "<" + g + ", u" + P(spec.mu) + ">";
    }
    }
    return "?";
}

} // namespace ccuv
