#include "ccuv/ccuv.h"

#include "table.hpp"
#include "verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>

using namespace ccuv;

struct ccuv_field {
    Field f;
};
struct ccuv_ambient {
    Ambient a;
};
struct ccuv_verify {
    VerifyReport r;
};

namespace {

thread_local std::string g_last_error;

int map_code(errc c) {
    switch (c) {
    case errc::ok: return CCUV_OK;
    case errc::invalid_argument: return CCUV_EINVAL;
    case errc::not_prime: return CCUV_ENOTPRIME;
    case errc::even_prime: return CCUV_EEVENPRIME;
    case errc::reducible_polynomial: return CCUV_EREDUCIBLE;
    case errc::zero_input: return CCUV_EINVAL;
    case errc::division_by_zero: return CCUV_EINVAL;
    case errc::not_a_unit: return CCUV_ENOTUNIT;
    case errc::not_a_square: return CCUV_EINVAL;
    case errc::bound_violation: return CCUV_EBOUND;
    case errc::not_a_unit_form: return CCUV_ENOTUNIT;
    case errc::uncovered_family: return CCUV_EUNCOVERED;
    case errc::parse_error: return CCUV_EPARSE;
    case errc::out_of_range: return CCUV_EBOUND;
    case errc::cap_exceeded: return CCUV_ECAP;
    case errc::budget_exceeded: return CCUV_EBUDGET;
    case errc::internal: return CCUV_EINTERNAL;
    }
    return CCUV_EINTERNAL;
}

int set_error(int status, std::string msg) {
    g_last_error = std::move(msg);
    return status;
}

template <typename Fn> int guarded(Fn&& fn) {
    try {
        int rc = fn();
        if (rc == CCUV_OK) g_last_error.clear();
        return rc;
    } catch (const error& e) {
        return set_error(map_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(CCUV_ENOMEM, "out of memory");
    } catch (const std::exception& e) {
        return set_error(CCUV_EINTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

IdealSpec spec_from_c(const Ambient& A, const ccuv_spec& cs) {
    if (!cs.type) fail(errc::invalid_argument, "spec type is required");
    IdealSpec s;
    s.type = type_from_name(cs.type);
    s.ell = cs.ell;
    s.t = cs.t;
    s.mu = cs.mu;
    if (cs.z && *cs.z && std::strcmp(cs.z, "0") != 0) s.z = parse_z(A, cs.z);
    return s;
}

EnumPolicy policy_from_c(const char* policy, int32_t k, uint64_t seed) {
    EnumPolicy pol;
    std::string p = policy ? policy : "rep";
    if (p == "zero")
        pol.kind = EnumPolicy::Kind::zero_only;
    else if (p == "rep" || p == "representative")
        pol.kind = EnumPolicy::Kind::representative;
    else if (p == "random")
        pol.kind = EnumPolicy::Kind::random_k;
    else
        fail(errc::invalid_argument, "policy must be zero, rep, or random");
    if (pol.kind == EnumPolicy::Kind::random_k && k < 1)
        fail(errc::invalid_argument, "random policy needs k >= 1");
    pol.k = k < 1 ? 1 : k;
    pol.seed = seed;
    return pol;
}

void fill_cert(const WeightCert& cert, int32_t& exact, int64_t& value, int64_t& upper,
               const char* which) {
    switch (cert.kind) {
    case WeightCert::Kind::exact:
        exact = 1;
        value = cert.value;
        upper = cert.value;
        break;
    case WeightCert::Kind::lower_bound:
        exact = 0;
        value = cert.value;
        upper = cert.upper;
        break;
    default:
        fail(errc::budget_exceeded,
             std::string(which) + " search budget exhausted before a verdict; raise cap or wmax");
    }
}

} // namespace

extern "C" {

const char* ccuv_version(void) { return "1.0.0"; }

const char* ccuv_status_name(int status) {
    switch (status) {
    case CCUV_OK: return "ok";
    case CCUV_EINVAL: return "invalid-argument";
    case CCUV_ENOTPRIME: return "not-prime";
    case CCUV_EEVENPRIME: return "even-characteristic";
    case CCUV_EREDUCIBLE: return "reducible-modulus";
    case CCUV_EPARSE: return "parse-error";
    case CCUV_ENOTUNIT: return "not-a-unit";
    case CCUV_EBOUND: return "bound-violation";
    case CCUV_EUNCOVERED: return "uncovered-family";
    case CCUV_EBUDGET: return "budget-exceeded";
    case CCUV_ECAP: return "cap-exceeded";
    case CCUV_ENOMEM: return "out-of-memory";
    case CCUV_EINTERNAL: return "internal-error";
    }
    return "unknown-status";
}

const char* ccuv_last_error(void) { return g_last_error.c_str(); }

void ccuv_string_free(char* s) { std::free(s); }

int ccuv_field_create(int64_t p, int32_t m, int32_t s, const uint64_t* irreducible,
                      size_t irreducible_len, ccuv_field** out) {
    return guarded([&]() -> int {
        if (!out) return set_error(CCUV_EINVAL, "out handle is null");
        *out = nullptr;
        if (p < 2) return set_error(CCUV_ENOTPRIME, "p must be an odd prime");
        if (m < 1 || s < 1) return set_error(CCUV_EINVAL, "m and s must be positive");
        std::vector<u64> irr(irreducible, irreducible + (irreducible ? irreducible_len : 0));
        Field f = Field::make(static_cast<u64>(p), static_cast<u32>(m), static_cast<u32>(s),
                              irr.empty() ? nullptr : &irr);
        *out = new ccuv_field{std::move(f)};
        return CCUV_OK;
    });
}

void ccuv_field_destroy(ccuv_field* f) { delete f; }

int ccuv_field_describe(const ccuv_field* f, char** out) {
    return guarded([&]() -> int {
        if (!f || !out) return set_error(CCUV_EINVAL, "null argument");
        *out = dup_string(f->f.describe());
        return CCUV_OK;
    });
}

int ccuv_ambient_create(const ccuv_field* f, const char* alpha, ccuv_ambient** out) {
    return guarded([&]() -> int {
        if (!f || !alpha || !out) return set_error(CCUV_EINVAL, "null argument");
        *out = nullptr;
        *out = new ccuv_ambient{Ambient::make(f->f, alpha)};
        return CCUV_OK;
    });
}

void ccuv_ambient_destroy(ccuv_ambient* a) { delete a; }

const char* ccuv_ambient_family(const ccuv_ambient* a) {
    if (!a) return nullptr;
    return family_name(a->a.input_family);
}

int ccuv_classify_render(const ccuv_ambient* a, char** out) {
    return guarded([&]() -> int {
        if (!a || !out) return set_error(CCUV_EINVAL, "null argument");
        *out = dup_string(classify_render(a->a));
        return CCUV_OK;
    });
}

int ccuv_eval(const ccuv_ambient* a, const ccuv_spec* spec, ccuv_report* out) {
    return guarded([&]() -> int {
        if (!a || !spec || !out) return set_error(CCUV_EINVAL, "null argument");
        CodeReport r = evaluate(a->a, spec_from_c(a->a, *spec));
        *out = ccuv_report{};
        out->eta_exponent = r.eta_exponent;
        out->d_h = r.d_h;
        out->d_sp = r.d_sp;
        out->has_im = r.im.has_value() ? 1 : 0;
        out->im = r.im.value_or(0);
        std::snprintf(out->provenance, sizeof out->provenance, "%s", r.provenance.c_str());
        return CCUV_OK;
    });
}

int ccuv_oracle_eval(const ccuv_ambient* a, const ccuv_spec* spec, uint64_t cap, int64_t wmax,
                     ccuv_oracle_report* out) {
    return guarded([&]() -> int {
        if (!a || !spec || !out) return set_error(CCUV_EINVAL, "null argument");
        OracleOptions opts;
        if (cap > 0) opts.cap = cap;
        opts.wmax = wmax;
        OracleReport r = oracle_eval(a->a, spec_from_c(a->a, *spec), opts);
        *out = ccuv_oracle_report{};
        out->rank = r.rank;
        out->exhaustive = r.exhaustive ? 1 : 0;
        fill_cert(r.dh, out->d_h_exact, out->d_h, out->d_h_upper, "Hamming");
        fill_cert(r.dsp, out->d_sp_exact, out->d_sp, out->d_sp_upper, "symbol-pair");
        return CCUV_OK;
    });
}

int ccuv_table_render(const ccuv_ambient* a, const char* format, const char* policy, int32_t k,
                      uint64_t seed, char** out) {
    return guarded([&]() -> int {
        if (!a || !out) return set_error(CCUV_EINVAL, "null argument");
        EnumPolicy pol = policy_from_c(policy, k, seed);
        std::vector<TableRow> rows = build_table(a->a, pol);
        std::string fmt = format ? format : "md";
        std::string text;
        if (fmt == "md")
            text = render_markdown(a->a, rows, pol);
        else if (fmt == "csv")
            text = render_csv(a->a, rows);
        else if (fmt == "json")
            text = render_json(a->a, rows, pol);
        else
            return set_error(CCUV_EINVAL, "format must be md, csv, or json");
        *out = dup_string(text);
        return CCUV_OK;
    });
}

int ccuv_verify_run(const ccuv_ambient* a, const char* policy, int32_t k, uint64_t seed,
                    uint64_t cap, int64_t wmax, int32_t threads, ccuv_verify** out) {
    return guarded([&]() -> int {
        if (!a || !out) return set_error(CCUV_EINVAL, "null argument");
        *out = nullptr;
        VerifyOptions opts;
        opts.policy = policy_from_c(policy, k, seed);
        if (cap > 0) opts.cap = cap;
        opts.wmax = wmax;
        opts.threads = threads;
        *out = new ccuv_verify{run_verify(a->a, opts)};
        return CCUV_OK;
    });
}

void ccuv_verify_destroy(ccuv_verify* v) { delete v; }

int64_t ccuv_verify_specs(const ccuv_verify* v) {
    return v ? static_cast<int64_t>(v->r.checks.size()) : -1;
}
int64_t ccuv_verify_passes(const ccuv_verify* v) { return v ? v->r.passes : -1; }
int64_t ccuv_verify_failures(const ccuv_verify* v) { return v ? v->r.failures : -1; }
int64_t ccuv_verify_skips(const ccuv_verify* v) { return v ? v->r.skips : -1; }

int ccuv_verify_render(const ccuv_verify* v, const char* format, char** out) {
    return guarded([&]() -> int {
        if (!v || !out) return set_error(CCUV_EINVAL, "null argument");
        std::string fmt = format ? format : "text";
        if (fmt == "text")
            *out = dup_string(v->r.text());
        else if (fmt == "json")
            *out = dup_string(v->r.json());
        else
            return set_error(CCUV_EINVAL, "format must be text or json");
        return CCUV_OK;
    });
}

} // extern "C"
