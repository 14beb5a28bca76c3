#include "oracle.hpp"

#include <algorithm>
#include <bit>

namespace ccuv {

namespace {

constexpr i64 kMaxOraclePositions = 63;

void check_oracle_scale(u64 p, i64 n) {
    if (p > 251) fail(errc::out_of_range, "oracle supports p <= 251");
    if (n > kMaxOraclePositions) fail(errc::out_of_range, "oracle supports n <= 63");
}

// p-ary reflected Gray walk: each step changes one digit by +/-1
class GrayCounter {
public:
    GrayCounter(u64 p, i64 k)
        : p_(p), a_(static_cast<size_t>(k), 0), f_(static_cast<size_t>(k) + 1),
          o_(static_cast<size_t>(k), 1) {
        for (size_t i = 0; i < f_.size(); ++i) f_[i] = static_cast<i64>(i);
    }

    // digit index changed, or -1 when the walk is complete
    i64 step(int& delta) {
        i64 j = f_[0];
        f_[0] = 0;
        if (j == static_cast<i64>(a_.size())) return -1;
        size_t ju = static_cast<size_t>(j);
        delta = o_[ju];
        a_[ju] = static_cast<u8>(static_cast<int>(a_[ju]) + o_[ju]);
        if (a_[ju] == 0 || a_[ju] == p_ - 1) {
            o_[ju] = -o_[ju];
            f_[ju] = f_[ju + 1];
            f_[ju + 1] = j + 1;
        }
        return j;
    }

private:
    u64 p_;
    std::vector<u8> a_;
    std::vector<i64> f_;
    std::vector<int> o_;
};

// p^k if it stays <= limit, else -1
i64 pow_capped(u64 p, i64 k, u64 limit) {
    u64 r = 1;
    for (i64 i = 0; i < k; ++i) {
        if (r > limit / p) return -1;
        r *= p;
    }
    return static_cast<i64>(r);
}

u64 rotate_down_mask(u64 mask, i64 n) {
    return ((mask >> 1) | ((mask & 1) << (n - 1))) & ((n == 64 ? ~u64{0} : (u64{1} << n) - 1));
}

void add_row(std::vector<u8>& dst, const std::vector<u8>& row, int delta, u64 p) {
    int ip = static_cast<int>(p);
    if (delta > 0) {
        for (size_t i = 0; i < dst.size(); ++i) {
            int s = static_cast<int>(dst[i]) + static_cast<int>(row[i]);
            dst[i] = static_cast<u8>(s >= ip ? s - ip : s);
        }
    } else {
        for (size_t i = 0; i < dst.size(); ++i) {
            int s = static_cast<int>(dst[i]) - static_cast<int>(row[i]);
            dst[i] = static_cast<u8>(s < 0 ? s + ip : s);
        }
    }
}

} // namespace

RrefResult rref_inplace(std::vector<std::vector<u8>>& rows, u64 p) {
    RrefResult res;
    if (rows.empty()) return res;
    size_t ncols = rows[0].size();
    size_t r = 0;
    auto inv_mod = [&](u64 a) {
        u64 x = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) x = x * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return x;
    };
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        u64 s = inv_mod(rows[r][c]);
        if (s != 1)
            for (size_t j = c; j < ncols; ++j)
                rows[r][j] = static_cast<u8>(rows[r][j] * s % p);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            u64 f = p - rows[i][c];
            for (size_t j = c; j < ncols; ++j)
                rows[i][j] = static_cast<u8>((rows[i][j] + f * rows[r][j]) % p);
        }
        res.pivots.push_back(static_cast<i64>(c));
        ++r;
    }
    rows.resize(r);
    res.rank = static_cast<i64>(r);
    return res;
}

std::vector<u8> flatten(const Ambient& A, const QuotPoly& f) {
    const Field& F = A.field;
    u32 m = F.m();
    std::vector<u8> out(f.size() * 4 * m);
    std::vector<u64> d(m);
    size_t k = 0;
    for (const R4& c : f) {
        for (fq part : {c.a1, c.a2, c.a3, c.a4}) {
            F.digits(part, d.data());
            for (u32 i = 0; i < m; ++i) out[k++] = static_cast<u8>(d[i]);
        }
    }
    return out;
}

std::vector<u8> flatten_base(const Field& F, const FPoly& f) {
    u32 m = F.m();
    std::vector<u8> out(f.size() * m);
    std::vector<u64> d(m);
    size_t k = 0;
    for (fq c : f) {
        F.digits(c, d.data());
        for (u32 i = 0; i < m; ++i) out[k++] = static_cast<u8>(d[i]);
    }
    return out;
}

BasisMatrix basis_from_generators(const Ambient& A, const std::vector<QuotPoly>& gens) {
    const Field& F = A.field;
    check_oracle_scale(F.p(), A.n());
    u32 m = F.m();
    fq gen = m >= 2 ? static_cast<fq>(F.p()) : 1;

    std::vector<std::vector<u8>> rows;
    for (const QuotPoly& g : gens) {
        QuotPoly shifted = g;
        for (i64 j = 0; j < A.n(); ++j) {
            if (j > 0) shifted = qp_mul_x(A, shifted);
            for (u32 e = 0; e < m; ++e) {
                fq sc = F.pow(gen, e);
                for (R4 theta : {R4{sc, 0, 0, 0}, R4{0, sc, 0, 0}, R4{0, 0, sc, 0}, R4{0, 0, 0, sc}})
                    rows.push_back(flatten(A, qp_scale(A, shifted, theta)));
            }
        }
    }
    RrefResult rr = rref_inplace(rows, F.p());
    BasisMatrix B;
    B.n = A.n();
    B.block = 4 * m;
    B.p = F.p();
    B.rows = std::move(rows);
    B.pivots = std::move(rr.pivots);
    return B;
}

BasisMatrix basis_matrix(const Ambient& A, const IdealSpec& spec) {
    return basis_from_generators(A, generators(A, spec));
}

BasisMatrix basis_matrix_base(const Field& F, fq alpha, i64 ell) {
    check_oracle_scale(F.p(), F.n());
    if (alpha == 0) fail(errc::zero_input, "base alpha must be nonzero");
    if (ell < 0 || ell > F.ps()) fail(errc::bound_violation, "base ell must lie in [0, p^s]");
    fq alpha0 = F.alpha0_root(alpha);
    FPoly g = fp_x2ma0_pow(F, alpha, alpha0, ell);
    u32 m = F.m();
    fq gen = m >= 2 ? static_cast<fq>(F.p()) : 1;

    std::vector<std::vector<u8>> rows;
    FPoly shifted = g;
    size_t n = static_cast<size_t>(F.n());
    for (size_t j = 0; j < n; ++j) {
        if (j > 0) {
            FPoly next(n);
            next[0] = F.mul(shifted[n - 1], alpha);
            for (size_t i = 1; i < n; ++i) next[i] = shifted[i - 1];
            shifted = std::move(next);
        }
        for (u32 e = 0; e < m; ++e) {
            fq sc = F.pow(gen, e);
            FPoly scaled(n);
            for (size_t i = 0; i < n; ++i) scaled[i] = F.mul(shifted[i], sc);
            rows.push_back(flatten_base(F, scaled));
        }
    }
    RrefResult rr = rref_inplace(rows, F.p());
    BasisMatrix B;
    B.n = F.n();
    B.block = m;
    B.p = F.p();
    B.rows = std::move(rows);
    B.pivots = std::move(rr.pivots);
    return B;
}

bool member(const BasisMatrix& B, std::vector<u8> vec) {
    for (size_t i = 0; i < B.rows.size(); ++i) {
        u8 c = vec[static_cast<size_t>(B.pivots[i])];
        if (c == 0) continue;
        u64 f = B.p - c;
        const auto& row = B.rows[i];
        for (size_t j = 0; j < vec.size(); ++j)
            vec[j] = static_cast<u8>((vec[j] + f * row[j]) % B.p);
    }
    for (u8 x : vec)
        if (x != 0) return false;
    return true;
}

std::vector<std::vector<u8>> parity_check(const BasisMatrix& B) {
    size_t N = static_cast<size_t>(B.cols());
    std::vector<char> is_pivot(N, 0);
    for (i64 pv : B.pivots) is_pivot[static_cast<size_t>(pv)] = 1;
    std::vector<std::vector<u8>> H;
    H.reserve(N - B.rows.size());
    for (size_t f = 0; f < N; ++f) {
        if (is_pivot[f]) continue;
        std::vector<u8> h(N, 0);
        h[f] = 1;
        for (size_t i = 0; i < B.rows.size(); ++i)
            h[static_cast<size_t>(B.pivots[i])] = static_cast<u8>((B.p - B.rows[i][f]) % B.p);
        H.push_back(std::move(h));
    }
    return H;
}

i64 hamming_weight_flat(const std::vector<u8>& v, i64 block) {
    i64 w = 0;
    for (size_t pos = 0; pos < v.size(); pos += static_cast<size_t>(block)) {
        for (i64 b = 0; b < block; ++b) {
            if (v[pos + static_cast<size_t>(b)] != 0) {
                ++w;
                break;
            }
        }
    }
    return w;
}

i64 pair_weight_flat(const std::vector<u8>& v, i64 block) {
    i64 n = static_cast<i64>(v.size()) / block;
    u64 mask = 0;
    for (i64 pos = 0; pos < n; ++pos) {
        for (i64 b = 0; b < block; ++b) {
            if (v[static_cast<size_t>(pos * block + b)] != 0) {
                mask |= u64{1} << pos;
                break;
            }
        }
    }
    if (mask == 0) return 0;
    return std::popcount(mask | rotate_down_mask(mask, n));
}

ExhaustiveResult exhaustive_min(const BasisMatrix& B, u64 cap) {
    ExhaustiveResult res;
    i64 total = pow_capped(B.p, B.rank(), cap);
    if (total < 0) {
        res.dh.kind = res.dsp.kind = WeightCert::Kind::cap_exceeded;
        return res;
    }
    if (B.rank() == 0) {
        res.dh = {WeightCert::Kind::exact, 0, -1, {}, 0, 0};
        res.dsp = {WeightCert::Kind::exact, 0, -1, {}, 0, 0};
        return res;
    }

    size_t N = static_cast<size_t>(B.cols());
    i64 n = B.n, block = B.block;
    std::vector<u8> cw(N, 0);
    GrayCounter gc(B.p, B.rank());
    u64 nodes = 0;
    i64 best_h = -1, best_sp = -1;
    std::vector<u8> wit_h, wit_sp;

    for (;;) {
        int delta = 0;
        i64 j = gc.step(delta);
        if (j < 0) break;
        add_row(cw, B.rows[static_cast<size_t>(j)], delta, B.p);
        ++nodes;

        u64 mask = 0;
        for (i64 pos = 0; pos < n; ++pos) {
            const u8* blk = cw.data() + pos * block;
            for (i64 b = 0; b < block; ++b) {
                if (blk[b] != 0) {
                    mask |= u64{1} << pos;
                    break;
                }
            }
        }
        i64 wh = std::popcount(mask);
        i64 wsp = std::popcount(mask | rotate_down_mask(mask, n));
        if (best_h < 0 || wh < best_h || (wh == best_h && cw < wit_h)) {
            best_h = wh;
            wit_h = cw;
        }
        if (best_sp < 0 || wsp < best_sp || (wsp == best_sp && cw < wit_sp)) {
            best_sp = wsp;
            wit_sp = cw;
        }
    }
    res.dh = {WeightCert::Kind::exact, best_h, -1, std::move(wit_h), nodes, n};
    res.dsp = {WeightCert::Kind::exact, best_sp, -1, std::move(wit_sp), nodes, n};
    return res;
}

namespace {

// enumerate codewords supported inside S and report full-support solutions
// via the callback; returns false if the node budget ran out
template <typename Fn>
bool solve_support(const std::vector<std::vector<u8>>& H, u64 p, i64 block,
                   const std::vector<i64>& S, u64& nodes, u64 budget, Fn&& on_solution) {
    size_t w = S.size();
    size_t sub_cols = w * static_cast<size_t>(block);
    std::vector<std::vector<u8>> Hs(H.size(), std::vector<u8>(sub_cols));
    for (size_t r = 0; r < H.size(); ++r)
        for (size_t i = 0; i < w; ++i)
            for (i64 b = 0; b < block; ++b)
                Hs[r][i * static_cast<size_t>(block) + static_cast<size_t>(b)] =
                    H[r][static_cast<size_t>(S[i] * block + b)];

    RrefResult rr = rref_inplace(Hs, p);
    i64 dprime = static_cast<i64>(sub_cols) - rr.rank;
    if (dprime == 0) return true;
    if (pow_capped(p, dprime, budget > nodes ? budget - nodes : 0) < 0) return false;

    std::vector<char> is_pivot(sub_cols, 0);
    for (i64 pv : rr.pivots) is_pivot[static_cast<size_t>(pv)] = 1;
    std::vector<std::vector<u8>> ns;
    ns.reserve(static_cast<size_t>(dprime));
    for (size_t f = 0; f < sub_cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<u8> v(sub_cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < Hs.size(); ++i)
            v[static_cast<size_t>(rr.pivots[i])] = static_cast<u8>((p - Hs[i][f]) % p);
        ns.push_back(std::move(v));
    }

    std::vector<u8> sol(sub_cols, 0);
    GrayCounter gc(p, dprime);
    for (;;) {
        int delta = 0;
        i64 j = gc.step(delta);
        if (j < 0) break;
        add_row(sol, ns[static_cast<size_t>(j)], delta, p);
        if (++nodes > budget) return false;
        bool full = true;
        for (size_t i = 0; i < w && full; ++i) {
            const u8* blk = sol.data() + i * static_cast<size_t>(block);
            bool nz = false;
            for (i64 b = 0; b < block && !nz; ++b) nz = blk[b] != 0;
            full = nz;
        }
        if (full) on_solution(sol);
    }
    return true;
}

std::vector<u8> embed_solution(const std::vector<u8>& sol, const std::vector<i64>& S, i64 n,
                               i64 block) {
    std::vector<u8> out(static_cast<size_t>(n * block), 0);
    for (size_t i = 0; i < S.size(); ++i)
        for (i64 b = 0; b < block; ++b)
            out[static_cast<size_t>(S[i] * block + b)] =
                sol[i * static_cast<size_t>(block) + static_cast<size_t>(b)];
    return out;
}

bool next_combination(std::vector<i64>& comb, i64 n) {
    i64 k = static_cast<i64>(comb.size());
    i64 i = k - 1;
    while (i >= 0 && comb[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++comb[static_cast<size_t>(i)];
    for (i64 j = i + 1; j < k; ++j) comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    return true;
}

} // namespace

WeightCert min_hamming(const BasisMatrix& B, i64 w_max, u64 node_budget) {
    if (B.rank() == 0) return {WeightCert::Kind::exact, 0, -1, {}, 0, 0};
    auto H = parity_check(B);
    u64 nodes = 0;
    w_max = std::min(w_max, B.n);
    for (i64 w = 1; w <= w_max; ++w) {
        std::vector<i64> S(static_cast<size_t>(w));
        for (i64 i = 0; i < w; ++i) S[static_cast<size_t>(i)] = i;
        std::vector<u8> best;
        bool found = false;
        do {
            if (++nodes > node_budget)
                return {WeightCert::Kind::budget_exceeded, 0, -1, {}, nodes, w - 1};
            bool ok = solve_support(H, B.p, B.block, S, nodes, node_budget,
                                    [&](const std::vector<u8>& sol) {
                                        auto emb = embed_solution(sol, S, B.n, B.block);
                                        if (!found || emb < best) {
                                            best = std::move(emb);
                                            found = true;
                                        }
                                    });
            if (!ok) return {WeightCert::Kind::budget_exceeded, 0, -1, {}, nodes, w - 1};
        } while (next_combination(S, B.n));
        if (found) return {WeightCert::Kind::exact, w, -1, std::move(best), nodes, w};
    }
    return {WeightCert::Kind::lower_bound, w_max + 1, -1, {}, nodes, w_max};
}

WeightCert min_pair(const BasisMatrix& B, i64 w_max, u64 node_budget) {
    if (B.rank() == 0) return {WeightCert::Kind::exact, 0, -1, {}, 0, 0};
    auto H = parity_check(B);
    u64 nodes = 0;
    bool everything = w_max >= B.n;
    w_max = std::min(w_max, B.n);
    i64 best = -1;
    std::vector<u8> wit;
    for (i64 w = 1; w <= w_max; ++w) {
        std::vector<i64> S(static_cast<size_t>(w));
        for (i64 i = 0; i < w; ++i) S[static_cast<size_t>(i)] = i;
        do {
            if (++nodes > node_budget)
                return {WeightCert::Kind::budget_exceeded, 0, best, {}, nodes, w - 1};
            u64 mask = 0;
            for (i64 pos : S) mask |= u64{1} << pos;
            i64 span = std::popcount(mask | rotate_down_mask(mask, B.n));
            if (best >= 0 && span > best) continue;
            bool ok = solve_support(H, B.p, B.block, S, nodes, node_budget,
                                    [&](const std::vector<u8>& sol) {
                                        auto emb = embed_solution(sol, S, B.n, B.block);
                                        if (best < 0 || span < best || (span == best && emb < wit)) {
                                            best = span;
                                            wit = std::move(emb);
                                        }
                                    });
            if (!ok) return {WeightCert::Kind::budget_exceeded, 0, best, {}, nodes, w - 1};
        } while (next_combination(S, B.n));
        if (best >= 0 && best <= w + 1)
            return {WeightCert::Kind::exact, best, -1, std::move(wit), nodes, w};
    }
    if (best >= 0 && (everything || best <= w_max + 2))
        return {WeightCert::Kind::exact, best, -1, std::move(wit), nodes, w_max};
    return {WeightCert::Kind::lower_bound, w_max + 2, best, std::move(wit), nodes, w_max};
}

OracleReport oracle_eval(const Ambient& A, const IdealSpec& spec, const OracleOptions& opts) {
    BasisMatrix B = basis_matrix(A, spec);
    OracleReport rep;
    rep.rank = B.rank();
    if (pow_capped(B.p, B.rank(), opts.cap) >= 0) {
        ExhaustiveResult ex = exhaustive_min(B, opts.cap);
        rep.exhaustive = true;
        rep.dh = std::move(ex.dh);
        rep.dsp = std::move(ex.dsp);
        return rep;
    }
    if (opts.wmax <= 0)
        fail(errc::cap_exceeded, "code has p^" + std::to_string(B.rank()) +
                                     " words, above the exhaustive cap; set a witness bound (wmax)");
    rep.exhaustive = false;
    rep.dh = min_hamming(B, opts.wmax, opts.cap);
    rep.dsp = min_pair(B, std::max<i64>(opts.wmax, 1), opts.cap);
    return rep;
}

OracleReport oracle_eval_base(const Field& F, fq alpha, i64 ell, const OracleOptions& opts) {
    BasisMatrix B = basis_matrix_base(F, alpha, ell);
    OracleReport rep;
    rep.rank = B.rank();
    if (pow_capped(B.p, B.rank(), opts.cap) >= 0) {
        ExhaustiveResult ex = exhaustive_min(B, opts.cap);
        rep.exhaustive = true;
        rep.dh = std::move(ex.dh);
        rep.dsp = std::move(ex.dsp);
        return rep;
    }
    if (opts.wmax <= 0)
        fail(errc::cap_exceeded, "code has p^" + std::to_string(B.rank()) +
                                     " words, above the exhaustive cap; set a witness bound (wmax)");
    rep.exhaustive = false;
    rep.dh = min_hamming(B, opts.wmax, opts.cap);
    rep.dsp = min_pair(B, std::max<i64>(opts.wmax, 1), opts.cap);
    return rep;
}

} // namespace ccuv
