#pragma once

#include "distance.hpp"

namespace ccuv {

struct TableRow {
    IdealSpec spec;  // as enumerated (pre-canonicalization)
    CodeReport report;
    std::string label;
    std::string z_str;
    bool dsp_footnote = false;
};

std::vector<TableRow> build_table(const Ambient& A, const EnumPolicy& policy);

std::string policy_name(const EnumPolicy& policy);
std::string render_markdown(const Ambient& A, const std::vector<TableRow>& rows,
                            const EnumPolicy& policy);
std::string render_csv(const Ambient& A, const std::vector<TableRow>& rows);
std::string render_json(const Ambient& A, const std::vector<TableRow>& rows,
                        const EnumPolicy& policy);

// structural summary of the ambient quotient for one unit alpha
std::string classify_render(const Ambient& A);

} // namespace ccuv
