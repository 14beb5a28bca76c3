#pragma once

#include "oracle.hpp"
#include "table.hpp"

#include <functional>

namespace ccuv {

enum class CheckStatus { pass, pass_bounded, fail, skip };

struct SpecCheck {
    IdealSpec spec;  // as enumerated
    CodeReport formula;
    i64 oracle_rank = -1;
    bool rank_ok = false;
    bool im_checked = false;
    bool im_ok = true;
    CheckStatus dh = CheckStatus::pass, dsp = CheckStatus::pass;
    i64 dh_seen = -1, dsp_seen = -1;  // exact oracle values when known
    bool exhaustive = false;
    std::string detail;

    bool skipped() const { return dh == CheckStatus::skip || dsp == CheckStatus::skip; }
    bool ok() const {
        return rank_ok && im_ok && !skipped() && dh != CheckStatus::fail &&
               dsp != CheckStatus::fail;
    }
};

struct VerifyOptions {
    EnumPolicy policy;
    u64 cap = 5'000'000;
    i64 wmax = 0;    // 0: derive the witness bound from the formula value per spec
    int threads = 0; // 0: hardware concurrency
    // test hook: replaces the formula layer
    std::function<CodeReport(const Ambient&, const IdealSpec&)> evaluator;
};

struct VerifyReport {
    std::string header;
    std::vector<SpecCheck> checks;
    i64 passes = 0, bounded = 0, failures = 0, skips = 0;
    std::vector<std::string> notes;

    bool all_ok() const { return failures == 0; }
    std::string text() const;
    std::string json() const;
};

VerifyReport run_verify(const Ambient& A, const VerifyOptions& opts);

struct BaseCheck {
    i64 ell = 0;
    i64 formula_dh = 0, formula_dsp = 0;
    i64 rank = 0;
    bool rank_ok = false;
    CheckStatus dh = CheckStatus::pass, dsp = CheckStatus::pass;
    i64 dh_seen = -1, dsp_seen = -1;
    std::string detail;
};

struct BaseVerifyReport {
    std::string header;
    std::vector<BaseCheck> checks;
    i64 passes = 0, failures = 0, skips = 0;
    bool all_ok() const { return failures == 0 && skips == 0; }
    std::string text() const;
};

// checks <(x^2-alpha0)^ell> for every ell in [0, p^s]; alpha must be a nonsquare unit
BaseVerifyReport run_verify_base(const Field& F, fq alpha, u64 cap);

} // namespace ccuv
