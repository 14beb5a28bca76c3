#include "quotient.hpp"

namespace ccuv {

Ambient Ambient::make(const Field& f, R4 alpha_in) {
    Ring rg(f);
    if (!rg.is_unit(alpha_in))
        fail(errc::not_a_unit, "alpha must be a unit (its field part must be nonzero)");
    Ambient A;
    A.field = f;
    A.alpha_input = alpha_in;
    A.input_family = rg.classify_unit(alpha_in);
    A.swapped = A.input_family == UnitFamily::case_no_v;
    A.alpha = A.swapped ? rg.swap_uv(alpha_in) : alpha_in;
    A.alpha0 = f.alpha0_root(A.alpha.a1);
    return A;
}

Ambient Ambient::make(const Field& f, std::string_view alpha_literal) {
    return make(f, Ring(f).parse(alpha_literal));
}

QuotPoly qp_zero(const Ambient& A) { return QuotPoly(static_cast<size_t>(A.n())); }

QuotPoly qp_one(const Ambient& A) {
    QuotPoly f = qp_zero(A);
    f[0] = A.ring().one();
    return f;
}

bool qp_is_zero(const QuotPoly& f) {
    for (const R4& c : f)
        if (!(c == R4{})) return false;
    return true;
}

QuotPoly qp_add(const Ambient& A, const QuotPoly& f, const QuotPoly& g) {
    Ring rg = A.ring();
    QuotPoly h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = rg.add(f[i], g[i]);
    return h;
}

QuotPoly qp_scale(const Ambient& A, const QuotPoly& f, R4 c) {
    Ring rg = A.ring();
    QuotPoly h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = rg.mul(f[i], c);
    return h;
}

QuotPoly qp_mul(const Ambient& A, const QuotPoly& f, const QuotPoly& g) {
    Ring rg = A.ring();
    size_t n = f.size();
    std::vector<R4> buf(2 * n - 1);
    for (size_t i = 0; i < n; ++i) {
        if (f[i] == R4{}) continue;
        for (size_t j = 0; j < n; ++j) {
            if (g[j] == R4{}) continue;
            buf[i + j] = rg.add(buf[i + j], rg.mul(f[i], g[j]));
        }
    }
    QuotPoly h(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(n));
    for (size_t i = n; i < buf.size(); ++i)
        h[i - n] = rg.add(h[i - n], rg.mul(buf[i], A.alpha));
    return h;
}

QuotPoly qp_mul_x(const Ambient& A, const QuotPoly& f) {
    Ring rg = A.ring();
    size_t n = f.size();
    QuotPoly h(n);
    h[0] = rg.mul(f[n - 1], A.alpha);
    for (size_t i = 1; i < n; ++i) h[i] = f[i - 1];
    return h;
}

QuotPoly x2ma0_pow(const Ambient& A, i64 e) {
    Ring rg = A.ring();
    R4 na0 = rg.neg(rg.from_field(A.alpha0));
    QuotPoly r = qp_one(A);
    for (i64 k = 0; k < e; ++k) {
        QuotPoly shifted = qp_mul_x(A, qp_mul_x(A, r));
        r = qp_add(A, shifted, qp_scale(A, r, na0));
    }
    return r;
}

AdicForm to_adic(const Ambient& A, const QuotPoly& f) {
    Ring rg = A.ring();
    R4 a0 = rg.from_field(A.alpha0);
    std::vector<R4> c = f;
    AdicForm pairs(static_cast<size_t>(A.ps()));
    for (auto& pr : pairs) {
        for (size_t i = c.size(); i-- > 2;)
            c[i - 2] = rg.add(c[i - 2], rg.mul(a0, c[i]));
        pr = {c[1], c[0]};
        c.erase(c.begin(), c.begin() + 2);
    }
    return pairs;
}

QuotPoly from_adic(const Ambient& A, const AdicForm& pairs) {
    Ring rg = A.ring();
    R4 na0 = rg.neg(rg.from_field(A.alpha0));
    QuotPoly r = qp_zero(A);
    for (size_t k = pairs.size(); k-- > 0;) {
        // r = r * (x^2 - alpha0) + (a_k x + b_k); degree never wraps
        QuotPoly nr = qp_zero(A);
        for (size_t i = 0; i + 2 < nr.size(); ++i) nr[i + 2] = r[i];
        for (size_t i = 0; i < nr.size(); ++i) nr[i] = rg.add(nr[i], rg.mul(na0, r[i]));
        nr[1] = rg.add(nr[1], pairs[k].a);
        nr[0] = rg.add(nr[0], pairs[k].b);
        r = std::move(nr);
    }
    return r;
}

i64 nilpotency_index(const Ambient& A) {
    if (!A.covered())
        fail(errc::uncovered_family, "nilpotency index is computed for the covered nonsquare families");
    Ring rg = A.ring();
    R4 na0 = rg.neg(rg.from_field(A.alpha0));
    QuotPoly r = qp_one(A);
    i64 cap = 3 * A.ps() + 2;
    for (i64 e = 1; e <= cap; ++e) {
        QuotPoly shifted = qp_mul_x(A, qp_mul_x(A, r));
        r = qp_add(A, shifted, qp_scale(A, r, na0));
        if (qp_is_zero(r)) return e;
    }
    fail(errc::internal, "nilpotency index exceeded its expected range");
}

FPoly fp_mul(const Field& F, fq alpha1, const FPoly& f, const FPoly& g) {
    size_t n = f.size();
    std::vector<fq> buf(2 * n - 1, 0);
    for (size_t i = 0; i < n; ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < n; ++j)
            if (g[j] != 0) buf[i + j] = F.add(buf[i + j], F.mul(f[i], g[j]));
    }
    FPoly h(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(n));
    for (size_t i = n; i < buf.size(); ++i)
        h[i - n] = F.add(h[i - n], F.mul(buf[i], alpha1));
    return h;
}

FPoly fp_x2ma0_pow(const Field& F, fq alpha1, fq alpha0, i64 e) {
    size_t n = static_cast<size_t>(F.n());
    fq na0 = F.neg(alpha0);
    FPoly r(n, 0);
    r[0] = 1;
    for (i64 k = 0; k < e; ++k) {
        FPoly nr(n, 0);
        nr[0] = F.mul(r[n - 2], alpha1);
        nr[1] = F.mul(r[n - 1], alpha1);
        for (size_t i = 2; i < n; ++i) nr[i] = r[i - 2];
        for (size_t i = 0; i < n; ++i) nr[i] = F.add(nr[i], F.mul(na0, r[i]));
        r = std::move(nr);
    }
    return r;
}

std::vector<std::pair<fq, fq>> fp_to_adic(const Field& F, fq alpha0, FPoly f) {
    std::vector<std::pair<fq, fq>> pairs(static_cast<size_t>(F.ps()));
    for (auto& pr : pairs) {
        for (size_t i = f.size(); i-- > 2;)
            f[i - 2] = F.add(f[i - 2], F.mul(alpha0, f[i]));
        pr = {f[1], f[0]};
        f.erase(f.begin(), f.begin() + 2);
    }
    return pairs;
}

FPoly fp_from_adic(const Field& F, fq alpha0, const std::vector<std::pair<fq, fq>>& pairs) {
    size_t n = static_cast<size_t>(F.n());
    fq na0 = F.neg(alpha0);
    FPoly r(n, 0);
    for (size_t k = pairs.size(); k-- > 0;) {
        FPoly nr(n, 0);
        for (size_t i = 0; i + 2 < n; ++i) nr[i + 2] = r[i];
        for (size_t i = 0; i < n; ++i) nr[i] = F.add(nr[i], F.mul(na0, r[i]));
        nr[1] = F.add(nr[1], pairs[k].first);
        nr[0] = F.add(nr[0], pairs[k].second);
        r = std::move(nr);
    }
    return r;
}

} // namespace ccuv
