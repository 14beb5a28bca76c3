#include "distance.hpp"

namespace ccuv {

Bucket bucket_1ps(i64 nu, i64 p, i64 s) {
    i64 ps = checked_pow_i64(p, static_cast<u32>(s));
    if (nu < 0 || nu > ps) fail(errc::out_of_range, "bucket_1ps key out of [0, p^s]");
    if (nu == 0) return {Bucket::Kind::unit, 0, 0};
    if (nu == ps) return {Bucket::Kind::zero, 0, 0};
    for (i64 gamma = 0; gamma < s; ++gamma) {
        i64 block = checked_pow_i64(p, static_cast<u32>(s - gamma));       // p^(s-gamma)
        i64 sub = block / p;                                               // p^(s-gamma-1)
        i64 lo = ps - block;
        if (nu <= lo || nu > lo + (p - 1) * sub) continue;
        i64 Gamma = (nu - lo + sub - 1) / sub;
        return {Bucket::Kind::ranged, Gamma, gamma};
    }
    fail(errc::internal, "bucket_1ps tiling gap");
}

Bucket bucket_2ps(i64 nu, i64 p, i64 s) {
    i64 ps = checked_pow_i64(p, static_cast<u32>(s));
    if (nu < 0 || nu > 2 * ps) fail(errc::out_of_range, "bucket_2ps key out of [0, 2p^s]");
    if (nu <= ps) return {Bucket::Kind::unit, 0, 0};
    if (nu == 2 * ps) return {Bucket::Kind::zero, 0, 0};
    return bucket_1ps(nu - ps, p, s);
}

namespace {

i64 bucket_value(const Bucket& b, i64 p) {
    switch (b.kind) {
    case Bucket::Kind::unit: return 1;
    case Bucket::Kind::zero: return 0;
    case Bucket::Kind::ranged:
        return (b.Gamma + 1) * checked_pow_i64(p, static_cast<u32>(b.gamma));
    }
    return 0;
}

std::string bucket_id(const Bucket& b) {
    switch (b.kind) {
    case Bucket::Kind::unit: return "unit";
    case Bucket::Kind::zero: return "zero";
    case Bucket::Kind::ranged:
        return "range(G=" + std::to_string(b.Gamma) + ",g=" + std::to_string(b.gamma) + ")";
    }
    return "?";
}

// distance key per type: b -> ell, c/d on the ring side key through I resp. mu
i64 distance_key(const Ambient& A, const IdealSpec& s) {
    switch (s.type) {
    case IdealType::b: return s.ell;
    case IdealType::c: return im_value(A, s);
    case IdealType::d: return s.mu;
    default: return 0;
    }
}

} // namespace

i64 d_hamming(const Ambient& A, const IdealSpec& spec) {
    IdealSpec s = validate_spec(A, spec);
    if (s.type == IdealType::a0) return 0;
    if (s.type == IdealType::a1) return 1;
    Bucket b = bucket_2ps(distance_key(A, s), static_cast<i64>(A.field.p()), A.field.s());
    return bucket_value(b, static_cast<i64>(A.field.p()));
}

i64 d_symbol_pair(const Ambient& A, const IdealSpec& spec) {
    return 2 * d_hamming(A, spec);
}

i64 d_hamming_base(i64 ell, i64 p, i64 m, i64 s) {
    (void)m;
    Bucket b = bucket_1ps(ell, p, s);
    return bucket_value(b, p);
}

i64 d_symbol_pair_base(i64 ell, i64 p, i64 m, i64 s) {
    return 2 * d_hamming_base(ell, p, m, s);
}

CodeReport evaluate(const Ambient& A, const IdealSpec& spec) {
    IdealSpec s = validate_spec(A, spec);
    bool full = A.working_family() == UnitFamily::case_full;
    const char* fam = full ? "full" : "nou";
    i64 ps = A.ps();

    CodeReport r;
    r.eta_exponent = count_exponent(A, s);
    r.d_h = d_hamming(A, s);
    r.d_sp = 2 * r.d_h;

    std::string cnt, im_id, dist_id;
    switch (s.type) {
    case IdealType::a0:
        cnt = "cnt:A0";
        dist_id = "A0";
        break;
    case IdealType::a1:
        cnt = "cnt:A1";
        dist_id = "A1";
        break;
    case IdealType::b:
        cnt = "cnt:B";
        break;
    case IdealType::c: {
        bool zu = !s.z.is_zero();
        bool eq = zu && s.t >= 1 && s.ell == ps + s.t;
        if (eq) {
            cnt = std::string("cnt:C:") + fam + ":z:eq";
        } else if (full) {
            if (!zu)
                cnt = s.ell <= ps ? "cnt:C:full:z0:lo" : "cnt:C:full:z0:hi";
            else if (s.ell <= ps)
                cnt = "cnt:C:full:z:lo";
            else if (s.ell < ps + s.t)
                cnt = "cnt:C:full:z:mid";
            else
                cnt = "cnt:C:full:z:tail";
        } else {
            if (!zu)
                cnt = "cnt:C:nou:z0";
            else if (2 * s.ell <= 2 * ps + s.t)
                cnt = "cnt:C:nou:z:lo";
            else
                cnt = "cnt:C:nou:z:hi";
        }
        r.im = im_value(A, s);
        im_id = std::string("im:") + fam + (zu ? ":z" : ":z0") + (eq ? ":eq" : "");
        break;
    }
    case IdealType::d: {
        cnt = "cnt:D";
        bool zu = !s.z.is_zero();
        bool eq = zu && s.t >= 1 && s.ell == ps + s.t;
        r.im = im_value(A, s);
        im_id = std::string("im:") + fam + (zu ? ":z" : ":z0") + (eq ? ":eq" : "");
        break;
    }
    }

    std::string prov = cnt;
    if (r.im) prov += "; " + im_id;
    if (dist_id.empty()) {
        Bucket b = bucket_2ps(distance_key(A, s), static_cast<i64>(A.field.p()), A.field.s());
        std::string key = s.type == IdealType::b ? "B" : (s.type == IdealType::c ? "C" : "D");
        prov += "; dH:" + key + ":" + bucket_id(b);
        prov += "; dsp:" + key + ":" + bucket_id(b);
    } else {
        prov += "; dH:" + dist_id + "; dsp:" + dist_id;
    }
    r.provenance = std::move(prov);
    return r;
}

} // namespace ccuv
