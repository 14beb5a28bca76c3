#include "field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ccuv {

namespace {

constexpr u32 kMaxM = 24;

// dense polynomials over F_p, coefficients ascending
using PPoly = std::vector<u64>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmul_mod(const PPoly& a, const PPoly& b, const PPoly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    // reduce by monic f
    size_t df = f.size() - 1;
    for (size_t i = c.size(); i-- > df;) {
        u64 t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (size_t j = 0; j < df; ++j)
            c[i - df + j] = (c[i - df + j] + t * (p - f[j])) % p;
    }
    c.resize(df);
    ptrim(c);
    return c;
}

PPoly px_pow_mod(u64 e, const PPoly& f, u64 p) {
    PPoly r{1};
    PPoly base{0, 1};
    if (f.size() == 2) base = pmul_mod(base, {1}, f, p);  // reduce degree-1 case
    while (e) {
        if (e & 1) r = pmul_mod(r, base, f, p);
        base = pmul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

PPoly pmod(PPoly a, const PPoly& b, u64 p) {
    ptrim(a);
    size_t db = b.size() - 1;
    u64 lead_inv = 1;
    {
        // inverse of b's leading coefficient mod p
        u64 lc = b.back() % p, r = 1, e = p - 2, base = lc;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        lead_inv = r;
    }
    while (a.size() > db) {
        u64 t = a.back() * lead_inv % p;
        size_t shift = a.size() - 1 - db;
        if (t != 0)
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = (a[shift + j] + t * (p - b[j] % p)) % p;
        a.pop_back();
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PPoly pgcd(PPoly a, PPoly b, u64 p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f monic of degree m over F_p; true iff f has no factor of degree <= m/2
bool poly_irreducible(const PPoly& f, u64 p, u32 m) {
    if (m == 1) return true;
    for (u32 d = 1; d <= m / 2; ++d) {
        u64 e = 1;
        for (u32 i = 0; i < d; ++i) e *= p;
        PPoly g = px_pow_mod(e, f, p);  // x^(p^d) mod f
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        ptrim(g);
        PPoly h = pgcd(f, g, p);
        if (h.size() > 1) return false;
    }
    return true;
}

u64 parse_uint(std::string_view s, size_t& i) {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        fail(errc::parse_error, "expected a number in field literal");
    u64 v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        if (v > (~u64{0} - 9) / 10) fail(errc::parse_error, "number too large in field literal");
        v = v * 10 + static_cast<u64>(s[i] - '0');
        ++i;
    }
    return v;
}

} // namespace

bool is_prime_u64(u64 x) {
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (u64 d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

Field Field::make(u64 p, u32 m, u32 s, const std::vector<u64>* irreducible) {
    if (p == 2) fail(errc::even_prime, "p must be an odd prime, got 2");
    if (!is_prime_u64(p)) fail(errc::not_prime, "p must be prime, got " + std::to_string(p));
    if (m < 1) fail(errc::invalid_argument, "m must be >= 1");
    if (m > kMaxM) fail(errc::out_of_range, "m too large");
    if (s < 1) fail(errc::invalid_argument, "s must be >= 1");

    Field F;
    F.p_ = p;
    F.m_ = m;
    F.s_ = s;

    u64 q = 1;
    for (u32 i = 0; i < m; ++i) {
        if (q > (u64{1} << 31) / p) fail(errc::out_of_range, "p^m exceeds 2^31");
        q *= p;
    }
    F.q_ = q;
    i64 ps = 1;
    for (u32 i = 0; i < s; ++i) {
        if (ps > (i64{1} << 31) / static_cast<i64>(p)) fail(errc::out_of_range, "p^s exceeds 2^31");
        ps *= static_cast<i64>(p);
    }
    F.ps_ = ps;

    if (irreducible) {
        const auto& c = *irreducible;
        if (c.size() != m + 1) fail(errc::invalid_argument, "irreducible must have m+1 coefficients");
        if (c[m] != 1) fail(errc::invalid_argument, "irreducible must be monic");
        for (u64 d : c)
            if (d >= p) fail(errc::invalid_argument, "irreducible coefficients must lie in [0, p)");
        PPoly f(c.begin(), c.end());
        if (!poly_irreducible(f, p, m))
            fail(errc::reducible_polynomial, "polynomial is reducible over F_p");
        F.irr_ = c;
    } else {
        // smallest monic irreducible by integer encoding of c_0..c_{m-1}
        bool found = false;
        for (u64 v = 0; v < q && !found; ++v) {
            PPoly f(m + 1, 0);
            u64 t = v;
            for (u32 i = 0; i < m; ++i) {
                f[i] = t % p;
                t /= p;
            }
            f[m] = 1;
            if (m >= 2 && f[0] == 0) continue;  // divisible by x
            if (poly_irreducible(f, p, m)) {
                F.irr_.assign(f.begin(), f.end());
                found = true;
            }
        }
        if (!found) fail(errc::internal, "no irreducible polynomial found");
    }

    F.red_.resize(m);
    for (u32 j = 0; j < m; ++j) F.red_[j] = (p - F.irr_[j]) % p;
    return F;
}

void Field::digits(fq a, u64* out) const {
    for (u32 i = 0; i < m_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
}

fq Field::pack(const u64* d) const {
    fq a = 0;
    for (u32 i = m_; i-- > 0;) a = a * p_ + d[i] % p_;
    return a;
}

fq Field::add(fq a, fq b) const {
    u64 da[kMaxM], db[kMaxM];
    digits(a, da);
    digits(b, db);
    for (u32 i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
    return pack(da);
}

fq Field::sub(fq a, fq b) const { return add(a, neg(b)); }

fq Field::neg(fq a) const {
    u64 d[kMaxM];
    digits(a, d);
    for (u32 i = 0; i < m_; ++i) d[i] = (p_ - d[i]) % p_;
    return pack(d);
}

fq Field::mul(fq a, fq b) const {
    if (a == 0 || b == 0) return 0;
    u64 da[kMaxM], db[kMaxM], buf[2 * kMaxM];
    digits(a, da);
    digits(b, db);
    for (u32 i = 0; i < 2 * m_; ++i) buf[i] = 0;
    for (u32 i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (u32 j = 0; j < m_; ++j)
            buf[i + j] = (buf[i + j] + da[i] * db[j]) % p_;
    }
    for (u32 i = 2 * m_ - 2; i + 1 > m_; --i) {
        u64 c = buf[i];
        if (c == 0) continue;
        buf[i] = 0;
        for (u32 j = 0; j < m_; ++j)
            buf[i - m_ + j] = (buf[i - m_ + j] + c * red_[j]) % p_;
    }
    return pack(buf);
}

fq Field::pow(fq a, u64 e) const {
    fq r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

fq Field::inv(fq a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    return pow(a, q_ - 2);
}

fq Field::frobenius(fq a) const { return pow(a, p_); }

bool Field::is_qr(fq a) const {
    if (a == 0) fail(errc::zero_input, "is_qr requires a nonzero element");
    return pow(a, (q_ - 1) / 2) == 1;
}

fq Field::sqrt(fq a) const {
    if (a == 0) return 0;
    if (!is_qr(a)) fail(errc::not_a_square, "element is not a quadratic residue");

    fq r;
    if (q_ % 4 == 3) {
        r = pow(a, (q_ + 1) / 4);
    } else {
        // Tonelli-Shanks: q - 1 = 2^e * o with o odd
        u64 o = q_ - 1;
        u32 e = 0;
        while (o % 2 == 0) {
            o /= 2;
            ++e;
        }
        fq c = 0;
        for (fq x = 2; x < q_; ++x) {
            if (!is_qr(x)) {
                c = x;
                break;
            }
        }
        fq z = pow(c, o);
        fq t = pow(a, o);
        r = pow(a, (o + 1) / 2);
        u32 mexp = e;
        while (t != 1) {
            fq t2 = t;
            u32 i = 0;
            while (t2 != 1) {
                t2 = mul(t2, t2);
                ++i;
            }
            fq b = z;
            for (u32 j = 0; j + i + 1 < mexp; ++j) b = mul(b, b);
            r = mul(r, b);
            z = mul(b, b);
            t = mul(t, z);
            mexp = i;
        }
    }

    // canonical choice between r and -r
    fq r2 = neg(r);
    u64 d1[kMaxM], d2[kMaxM];
    digits(r, d1);
    digits(r2, d2);
    for (u32 i = 0; i < m_; ++i) {
        if (d1[i] != d2[i]) return d1[i] < d2[i] ? r : r2;
    }
    return r;
}

fq Field::alpha0_root(fq alpha1) const {
    if (alpha1 == 0) fail(errc::zero_input, "alpha0_root requires a nonzero element");
    u32 r0 = s_ % m_;
    u32 k = (m_ - r0) % m_;
    fq a0 = alpha1;
    for (u32 i = 0; i < k; ++i) a0 = frobenius(a0);
    fq chk = a0;
    for (u32 i = 0; i < s_; ++i) chk = frobenius(chk);
    if (chk != alpha1) fail(errc::internal, "alpha0_root postcondition failed");
    return a0;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << p_ << "^" << m_ << "; irreducible=";
    for (size_t i = 0; i < irr_.size(); ++i) {
        if (i) os << ",";
        os << irr_[i];
    }
    os << ")";
    return os.str();
}

std::string Field::to_string(fq a) const {
    u64 d[kMaxM];
    digits(a, d);
    std::string out;
    for (u32 i = m_; i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
        } else {
            if (d[i] != 1) out += std::to_string(d[i]);
            out += "g";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

fq Field::parse(std::string_view text) const {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) fail(errc::parse_error, "empty field literal");

    fq acc = 0;
    size_t i = 0;
    bool first = true;
    while (i < t.size()) {
        bool negate = false;
        if (t[i] == '+' || t[i] == '-') {
            negate = t[i] == '-';
            ++i;
            if (i >= t.size()) fail(errc::parse_error, "dangling sign in field literal");
        } else if (!first) {
            fail(errc::parse_error, "expected + or - in field literal");
        }
        first = false;

        u64 coef = 1;
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(t[i]))) {
            coef = parse_uint(t, i);
            saw_coef = true;
        }
        u64 expo = 0;
        if (i < t.size() && t[i] == 'g') {
            if (m_ == 1) fail(errc::parse_error, "symbol g is not available in a prime field");
            ++i;
            expo = 1;
            if (i < t.size() && t[i] == '^') {
                ++i;
                expo = parse_uint(t, i);
            }
        } else if (!saw_coef) {
            fail(errc::parse_error, std::string("unexpected character '") + t[i] + "' in field literal");
        }

        fq term = from_int(coef);
        if (expo > 0) term = mul(term, pow(static_cast<fq>(p_), expo));
        if (negate) term = neg(term);
        acc = add(acc, term);
    }
    return acc;
}

} // namespace ccuv
