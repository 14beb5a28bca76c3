#include "ring.hpp"

#include <cctype>

namespace ccuv {

const char* family_name(UnitFamily f) {
    switch (f) {
    case UnitFamily::square: return "Square";
    case UnitFamily::case_full: return "CaseFull";
    case UnitFamily::case_no_u: return "CaseNoU";
    case UnitFamily::case_no_v: return "CaseNoV-swapped";
    case UnitFamily::uncovered: return "Uncovered";
    }
    return "unknown";
}

R4 Ring::add(R4 a, R4 b) const {
    return {F_->add(a.a1, b.a1), F_->add(a.a2, b.a2), F_->add(a.a3, b.a3), F_->add(a.a4, b.a4)};
}

R4 Ring::sub(R4 a, R4 b) const { return add(a, neg(b)); }

R4 Ring::neg(R4 a) const {
    return {F_->neg(a.a1), F_->neg(a.a2), F_->neg(a.a3), F_->neg(a.a4)};
}

R4 Ring::mul(R4 a, R4 b) const {
    const Field& F = *F_;
    R4 c;
    c.a1 = F.mul(a.a1, b.a1);
    c.a2 = F.add(F.mul(a.a1, b.a2), F.mul(a.a2, b.a1));
    c.a3 = F.add(F.mul(a.a1, b.a3), F.mul(a.a3, b.a1));
    c.a4 = F.add(F.add(F.mul(a.a1, b.a4), F.mul(a.a4, b.a1)),
                 F.add(F.mul(a.a2, b.a3), F.mul(a.a3, b.a2)));
    return c;
}

R4 Ring::scale(R4 a, fq c) const {
    return {F_->mul(a.a1, c), F_->mul(a.a2, c), F_->mul(a.a3, c), F_->mul(a.a4, c)};
}

R4 Ring::pow(R4 a, u64 e) const {
    R4 r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

R4 Ring::inv(R4 a) const {
    if (!is_unit(a)) fail(errc::not_a_unit, "inverse of a non-unit");
    const Field& F = *F_;
    fq i1 = F.inv(a.a1);
    fq i2 = F.mul(i1, i1);
    fq i3 = F.mul(i2, i1);
    R4 b;
    b.a1 = i1;
    b.a2 = F.neg(F.mul(a.a2, i2));
    b.a3 = F.neg(F.mul(a.a3, i2));
    fq two = F.from_int(2);
    b.a4 = F.mul(F.sub(F.mul(two, F.mul(a.a2, a.a3)), F.mul(a.a4, a.a1)), i3);
    if (!(mul(a, b) == one())) fail(errc::internal, "ring inverse postcondition failed");
    return b;
}

bool Ring::is_square_unit(R4 a) const {
    if (!is_unit(a)) fail(errc::not_a_unit, "is_square_unit requires a unit");
    return F_->is_qr(a.a1);
}

R4 Ring::sqrt_unit(R4 a) const {
    if (!is_square_unit(a)) fail(errc::not_a_square, "unit is not a square in the ring");
    const Field& F = *F_;
    fq g1 = F.sqrt(a.a1);
    fq two = F.from_int(2);
    fq d = F.inv(F.mul(two, g1));
    R4 g;
    g.a1 = g1;
    g.a2 = F.mul(a.a2, d);
    g.a3 = F.mul(a.a3, d);
    g.a4 = F.mul(F.sub(a.a4, F.mul(two, F.mul(g.a2, g.a3))), d);
    if (!(mul(g, g) == a)) fail(errc::internal, "sqrt_unit postcondition failed");
    return g;
}

UnitFamily Ring::classify_unit(R4 a) const {
    if (!is_unit(a)) fail(errc::not_a_unit, "classify_unit requires a unit");
    if (F_->is_qr(a.a1)) return UnitFamily::square;
    bool u2 = a.a2 != 0, u3 = a.a3 != 0, u4 = a.a4 != 0;
    if (u2 && u3) return UnitFamily::case_full;
    if (!u2 && u3 && u4) return UnitFamily::case_no_u;
    if (!u3 && u2 && u4) return UnitFamily::case_no_v;
    return UnitFamily::uncovered;
}

std::string Ring::to_string(R4 a) const {
    auto coef = [&](fq c, const char* marker) -> std::string {
        std::string cs = F_->to_string(c);
        if (cs == "1") return marker;
        if (cs.find('+') != std::string::npos) return "(" + cs + ")" + marker;
        return cs + marker;
    };
    std::string out;
    auto app = [&](std::string part) {
        if (!out.empty()) out += "+";
        out += std::move(part);
    };
    if (a.a1 != 0) app(F_->to_string(a.a1));
    if (a.a2 != 0) app(coef(a.a2, "u"));
    if (a.a3 != 0) app(coef(a.a3, "v"));
    if (a.a4 != 0) app(coef(a.a4, "uv"));
    return out.empty() ? "0" : out;
}

R4 Ring::parse(std::string_view text) const {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) fail(errc::parse_error, "empty ring literal");

    R4 acc;
    size_t i = 0;
    bool first = true;
    while (i < t.size()) {
        bool negate = false;
        if (t[i] == '+' || t[i] == '-') {
            negate = t[i] == '-';
            ++i;
            if (i >= t.size()) fail(errc::parse_error, "dangling sign in ring literal");
        } else if (!first) {
            fail(errc::parse_error, "expected + or - in ring literal");
        }
        first = false;

        // take one term: up to the next top-level + or -
        int depth = 0;
        size_t start = i;
        while (i < t.size()) {
            char ch = t[i];
            if (ch == '(') ++depth;
            else if (ch == ')') --depth;
            else if ((ch == '+' || ch == '-') && depth == 0) break;
            ++i;
        }
        if (depth != 0) fail(errc::parse_error, "unbalanced parentheses in ring literal");
        std::string_view term(t.data() + start, i - start);
        if (term.empty()) fail(errc::parse_error, "empty term in ring literal");

        int marker = 0;  // 0 none, 1 u, 2 v, 3 uv
        if (term.size() >= 2 && term.substr(term.size() - 2) == "uv") {
            marker = 3;
            term.remove_suffix(2);
        } else if (term.back() == 'u') {
            marker = 1;
            term.remove_suffix(1);
        } else if (term.back() == 'v') {
            marker = 2;
            term.remove_suffix(1);
        }

        fq c;
        if (term.empty()) {
            if (marker == 0) fail(errc::parse_error, "empty coefficient in ring literal");
            c = 1;
        } else if (term.front() == '(') {
            if (term.back() != ')') fail(errc::parse_error, "malformed parenthesized coefficient");
            c = F_->parse(term.substr(1, term.size() - 2));
        } else {
            c = F_->parse(term);
        }
        if (negate) c = F_->neg(c);

        R4 part;
        switch (marker) {
        case 0: part = {c, 0, 0, 0}; break;
        case 1: part = {0, c, 0, 0}; break;
        case 2: part = {0, 0, c, 0}; break;
        case 3: part = {0, 0, 0, c}; break;
        }
        acc = add(acc, part);
    }
    return acc;
}

} // namespace ccuv
