#include <ccuv/ccuv.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct FieldHandle {
    ccuv_field* h = nullptr;
    ~FieldHandle() { ccuv_field_destroy(h); }
};
struct AmbientHandle {
    ccuv_ambient* h = nullptr;
    ~AmbientHandle() { ccuv_ambient_destroy(h); }
};
struct VerifyHandle {
    ccuv_verify* h = nullptr;
    ~VerifyHandle() { ccuv_verify_destroy(h); }
};
struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { ccuv_string_free(s); }
};

int exit_code_for(int rc) {
    if (rc == CCUV_OK) return 0;
    if (rc == CCUV_EBUDGET || rc == CCUV_ECAP) return 3;
    return 2;
}

int report_error(int rc, const std::string& hint = "") {
    std::cerr << "error: " << ccuv_last_error() << " [" << ccuv_status_name(rc) << "]";
    if (!hint.empty()) std::cerr << "; " << hint;
    std::cerr << "\n";
    return exit_code_for(rc);
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return 2;
    }
    f << text;
    return 0;
}

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

struct Options {
    int64_t p = 0;
    int32_t m = 1, s = 1;
    std::string alpha;
    std::vector<uint64_t> irreducible;
    std::string format;
    std::string z_policy = "rep";
    int32_t z_k = 1;
    uint64_t seed = 1;
    int64_t wmax = 0;
    uint64_t cap = 5'000'000;
    int32_t threads = 0;
    std::string out_path;

    std::string type;
    int64_t ell = 0, t = 0, mu = 0;
    std::string z;
    std::string source = "formula";
};

int make_field(const Options& o, FieldHandle& f) {
    return ccuv_field_create(o.p, o.m, o.s, o.irreducible.empty() ? nullptr : o.irreducible.data(),
                             o.irreducible.size(), &f.h);
}

int make_ambient(const Options& o, FieldHandle& f, AmbientHandle& a) {
    if (o.alpha.empty()) return -1;  // caller reports usage
    int rc = make_field(o, f);
    if (rc != CCUV_OK) return rc;
    return ccuv_ambient_create(f.h, o.alpha.c_str(), &a.h);
}

std::string resolve_format(const Options& o, const char* fallback) {
    return o.format.empty() ? fallback : o.format;
}

int cmd_field_info(const Options& o) {
    FieldHandle f;
    int rc = make_field(o, f);
    if (rc != CCUV_OK) return report_error(rc);
    OwnedString desc;
    rc = ccuv_field_describe(f.h, &desc.s);
    if (rc != CCUV_OK) return report_error(rc);
    std::ostringstream os;
    os << desc.s << "\n";
    uint64_t ps = 1;
    for (int32_t i = 0; i < o.s; ++i) ps *= static_cast<uint64_t>(o.p);
    os << "p^s = " << ps << ", code length n = " << 2 * ps << "\n";
    return emit(os.str(), o.out_path);
}

int cmd_classify(const Options& o) {
    if (o.alpha.empty()) return usage_error("classify needs --alpha");
    FieldHandle f;
    AmbientHandle a;
    int rc = make_ambient(o, f, a);
    if (rc != CCUV_OK) return report_error(rc);
    OwnedString text;
    rc = ccuv_classify_render(a.h, &text.s);
    if (rc != CCUV_OK) return report_error(rc);
    return emit(text.s, o.out_path);
}

int cmd_table(const Options& o) {
    if (o.alpha.empty()) return usage_error("table needs --alpha");
    std::string fmt = resolve_format(o, "md");
    if (fmt != "md" && fmt != "csv" && fmt != "json")
        return usage_error("table supports --format md|csv|json");
    FieldHandle f;
    AmbientHandle a;
    int rc = make_ambient(o, f, a);
    if (rc != CCUV_OK) return report_error(rc);
    OwnedString text;
    rc = ccuv_table_render(a.h, fmt.c_str(), o.z_policy.c_str(), o.z_k, o.seed, &text.s);
    if (rc != CCUV_OK) return report_error(rc);
    return emit(text.s, o.out_path);
}

nlohmann::json formula_json(const ccuv_report& r) {
    nlohmann::json j;
    j["eta_exponent"] = r.eta_exponent;
    j["d_h"] = r.d_h;
    j["d_sp"] = r.d_sp;
    j["im"] = r.has_im ? nlohmann::json(r.im) : nlohmann::json();
    j["provenance"] = r.provenance;
    return j;
}

nlohmann::json oracle_json(const ccuv_oracle_report& r) {
    nlohmann::json j;
    j["rank"] = r.rank;
    j["exhaustive"] = r.exhaustive != 0;
    j["d_h"] = {{"value", r.d_h},
                {"exact", r.d_h_exact != 0},
                {"upper", r.d_h_upper < 0 ? nlohmann::json() : nlohmann::json(r.d_h_upper)}};
    j["d_sp"] = {{"value", r.d_sp},
                 {"exact", r.d_sp_exact != 0},
                 {"upper", r.d_sp_upper < 0 ? nlohmann::json() : nlohmann::json(r.d_sp_upper)}};
    return j;
}

void formula_text(std::ostringstream& os, const ccuv_report& r) {
    os << "eta_exponent: " << r.eta_exponent << "\n";
    os << "d_h: " << r.d_h << "\n";
    os << "d_sp: " << r.d_sp << "\n";
    if (r.has_im) os << "im: " << r.im << "\n";
    os << "provenance: " << r.provenance << "\n";
}

void oracle_text(std::ostringstream& os, const ccuv_oracle_report& r) {
    os << "rank: " << r.rank << (r.exhaustive ? " (exhaustive walk)" : " (witness search)") << "\n";
    os << "d_h: ";
    if (r.d_h_exact)
        os << r.d_h << " (exact)";
    else
        os << ">= " << r.d_h << (r.d_h_upper >= 0 ? " (best seen " + std::to_string(r.d_h_upper) + ")" : "");
    os << "\n";
    os << "d_sp: ";
    if (r.d_sp_exact)
        os << r.d_sp << " (exact)";
    else
        os << ">= " << r.d_sp << (r.d_sp_upper >= 0 ? " (best seen " + std::to_string(r.d_sp_upper) + ")" : "");
    os << "\n";
}

bool agrees(const ccuv_report& fr, const ccuv_oracle_report& orr, std::string& why) {
    bool ok = true;
    if (orr.rank != fr.eta_exponent) {
        why += "rank " + std::to_string(orr.rank) + " != eta_exponent " +
               std::to_string(fr.eta_exponent) + "; ";
        ok = false;
    }
    auto check = [&](const char* name, int64_t formula, int32_t exact, int64_t value,
                     int64_t upper) {
        if (exact ? formula == value : (formula >= value && (upper < 0 || formula <= upper)))
            return;
        why += std::string(name) + " formula " + std::to_string(formula) +
               (exact ? " != oracle " + std::to_string(value)
                      : " outside oracle bracket [" + std::to_string(value) + ", " +
                            (upper < 0 ? "inf" : std::to_string(upper)) + "]") +
               "; ";
        ok = false;
    };
    check("d_h", fr.d_h, orr.d_h_exact, orr.d_h, orr.d_h_upper);
    check("d_sp", fr.d_sp, orr.d_sp_exact, orr.d_sp, orr.d_sp_upper);
    return ok;
}

int cmd_distance(const Options& o) {
    if (o.alpha.empty()) return usage_error("distance needs --alpha");
    if (o.type.empty()) return usage_error("distance needs --type A0|A1|B|C|D");
    std::string fmt = resolve_format(o, "text");
    if (fmt != "text" && fmt != "json") return usage_error("distance supports --format text|json");
    if (o.source != "formula" && o.source != "oracle" && o.source != "both")
        return usage_error("--source must be formula, oracle, or both");

    FieldHandle f;
    AmbientHandle a;
    int rc = make_ambient(o, f, a);
    if (rc != CCUV_OK) return report_error(rc);

    ccuv_spec spec{};
    spec.type = o.type.c_str();
    spec.ell = o.ell;
    spec.t = o.t;
    spec.mu = o.mu;
    spec.z = o.z.empty() ? nullptr : o.z.c_str();

    bool want_formula = o.source != "oracle";
    bool want_oracle = o.source != "formula";

    ccuv_report fr{};
    if (want_formula) {
        rc = ccuv_eval(a.h, &spec, &fr);
        if (rc != CCUV_OK)
            return report_error(rc, rc == CCUV_EUNCOVERED ? "retry with --source oracle" : "");
    }
    ccuv_oracle_report orr{};
    if (want_oracle) {
        rc = ccuv_oracle_eval(a.h, &spec, o.cap, o.wmax, &orr);
        if (rc != CCUV_OK)
            return report_error(rc, rc == CCUV_ECAP ? "set --wmax to enable the witness search" : "");
    }

    std::string verdict_why;
    bool verdict = !(want_formula && want_oracle) || agrees(fr, orr, verdict_why);

    std::string text;
    if (fmt == "json") {
        nlohmann::json j;
        j["spec"] = {{"type", o.type}, {"ell", o.ell}, {"t", o.t}, {"mu", o.mu},
                     {"z", o.z.empty() ? "0" : o.z}};
        if (want_formula) j["formula"] = formula_json(fr);
        if (want_oracle) j["oracle"] = oracle_json(orr);
        if (want_formula && want_oracle) j["agreement"] = verdict;
        text = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        if (want_formula) {
            if (want_oracle) os << "formula:\n";
            formula_text(os, fr);
        }
        if (want_oracle) {
            if (want_formula) os << "oracle:\n";
            oracle_text(os, orr);
        }
        if (want_formula && want_oracle)
            os << "agreement: " << (verdict ? "ok" : "MISMATCH: " + verdict_why) << "\n";
        text = os.str();
    }
    int erc = emit(text, o.out_path);
    if (erc != 0) return erc;
    return verdict ? 0 : 1;
}

int cmd_verify(const Options& o) {
    if (o.alpha.empty()) return usage_error("verify needs --alpha");
    std::string fmt = resolve_format(o, "text");
    if (fmt != "text" && fmt != "json") return usage_error("verify supports --format text|json");
    FieldHandle f;
    AmbientHandle a;
    int rc = make_ambient(o, f, a);
    if (rc != CCUV_OK) return report_error(rc);
    VerifyHandle v;
    rc = ccuv_verify_run(a.h, o.z_policy.c_str(), o.z_k, o.seed, o.cap, o.wmax, o.threads, &v.h);
    if (rc != CCUV_OK) return report_error(rc);
    OwnedString text;
    rc = ccuv_verify_render(v.h, fmt.c_str(), &text.s);
    if (rc != CCUV_OK) return report_error(rc);
    int erc = emit(text.s, o.out_path);
    if (erc != 0) return erc;
    return ccuv_verify_failures(v.h) == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"constacyclic codes of length 2p^s over F_{p^m}[u,v]/(u^2, v^2, uv-vu): "
                 "classification, counts, Hamming and symbol-pair distances, search oracle"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value file mirroring the flags (flags win)");

    app.add_option("--p", o.p, "odd prime p")->required();
    app.add_option("--m", o.m, "extension degree m (field F_{p^m})")->capture_default_str();
    app.add_option("--s", o.s, "length exponent s (code length 2 p^s)")->capture_default_str();
    app.add_option("--alpha", o.alpha, "unit constant, e.g. 2+v+uv or 1+(g+1)u");
    app.add_option("--irreducible", o.irreducible,
                   "modulus coefficients c0,...,cm for F_{p^m} (default: lexicographically first)")
        ->delimiter(',');
    app.add_option("--format", o.format, "md|csv|json for table, text|json elsewhere");
    app.add_option("--z-policy", o.z_policy, "z sampling: zero|rep|random")->capture_default_str();
    app.add_option("--z-k", o.z_k, "samples per cell for --z-policy random")
        ->capture_default_str();
    app.add_option("--seed", o.seed, "seed for --z-policy random")->capture_default_str();
    app.add_option("--wmax", o.wmax, "witness support bound when codes exceed --cap (0: off)")
        ->capture_default_str();
    app.add_option("--cap", o.cap, "exhaustive enumeration limit / search node budget")
        ->capture_default_str();
    app.add_option("--threads", o.threads, "verification worker threads (0: hardware)")
        ->capture_default_str();
    app.add_option("--out", o.out_path, "write output to this file instead of stdout");

    CLI::App* c_classify = app.add_subcommand("classify", "family of alpha and the ideal shapes");
    CLI::App* c_distance =
        app.add_subcommand("distance", "counts and distances for one ideal spec");
    CLI::App* c_table = app.add_subcommand("table", "full classification table");
    CLI::App* c_verify =
        app.add_subcommand("verify", "formula-vs-oracle campaign over all enumerated specs");
    CLI::App* c_field = app.add_subcommand("field-info", "field parameters and modulus");

    c_distance->add_option("--type", o.type, "A0|A1|B|C|D");
    c_distance->add_option("--ell", o.ell, "exponent of (x^2-alpha0) in the main generator");
    c_distance->add_option("--t", o.t, "exponent on the u-part shift (with nonzero z)");
    c_distance->add_option("--mu", o.mu, "exponent of the second generator (type D)");
    c_distance->add_option("--z", o.z, "z polynomial in x, e.g. 0, 1, x^2+2x");
    c_distance->add_option("--source", o.source, "formula|oracle|both")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (c_field->parsed()) return cmd_field_info(o);
    if (c_classify->parsed()) return cmd_classify(o);
    if (c_table->parsed()) return cmd_table(o);
    if (c_distance->parsed()) return cmd_distance(o);
    if (c_verify->parsed()) return cmd_verify(o);
    return usage_error("no subcommand given");
}
