#include <doctest.h>

#include "distance.hpp"

#include <random>

using namespace ccuv;

namespace {

Ambient make_ambient(u64 p, u32 m, u32 s, std::string_view alpha) {
    Field F = Field::make(p, m, s);
    return Ambient::make(F, alpha);
}

const ZPoly kOne{{{0, 1}}};

} // namespace

TEST_CASE("bucket endpoints") {
    CHECK(bucket_1ps(0, 3, 1).kind == Bucket::Kind::unit);
    CHECK(bucket_1ps(3, 3, 1).kind == Bucket::Kind::zero);
    CHECK(bucket_2ps(0, 3, 1).kind == Bucket::Kind::unit);
    CHECK(bucket_2ps(3, 3, 1).kind == Bucket::Kind::unit);
    CHECK(bucket_2ps(6, 3, 1).kind == Bucket::Kind::zero);
    CHECK_THROWS_AS(bucket_1ps(-1, 3, 1), error);
    CHECK_THROWS_AS(bucket_1ps(4, 3, 1), error);
    CHECK_THROWS_AS(bucket_2ps(7, 3, 1), error);
}

TEST_CASE("bucket cells at small parameters") {
    Bucket b = bucket_2ps(4, 3, 1);
    CHECK(b.kind == Bucket::Kind::ranged);
    CHECK(b.Gamma == 1);
    CHECK(b.gamma == 0);
    Bucket c = bucket_2ps(5, 3, 1);
    CHECK(c.Gamma == 2);
    CHECK(c.gamma == 0);
    Bucket d = bucket_2ps(16, 3, 2);
    CHECK(d.kind == Bucket::Kind::ranged);
    CHECK(d.Gamma == 1);
    CHECK(d.gamma == 1);
}

TEST_CASE("bucket cells tile the key range") {
    for (i64 p : {3, 5, 7}) {
        for (i64 s : {1, 2, 3}) {
            i64 ps = checked_pow_i64(p, static_cast<u32>(s));
            for (i64 nu = 1; nu < ps; ++nu) {
                Bucket b = bucket_1ps(nu, p, s);
                REQUIRE(b.kind == Bucket::Kind::ranged);
                CHECK(b.Gamma >= 1);
                CHECK(b.Gamma <= p - 1);
                CHECK(b.gamma >= 0);
                CHECK(b.gamma < s);
                // nu must sit inside its claimed cell
                i64 block = checked_pow_i64(p, static_cast<u32>(s - b.gamma));
                i64 sub = block / p;
                i64 lo = ps - block;
                CHECK(nu > lo + (b.Gamma - 1) * sub);
                CHECK(nu <= lo + b.Gamma * sub);
            }
        }
    }
}

TEST_CASE("bucket values grow with the key") {
    for (i64 p : {3, 5}) {
        for (i64 s : {1, 2, 3}) {
            i64 ps = checked_pow_i64(p, static_cast<u32>(s));
            i64 prev = 1;
            for (i64 nu = 1; nu < ps; ++nu) {
                i64 v = d_hamming_base(nu, p, 1, s);
                CHECK(v >= prev);
                prev = v;
            }
        }
    }
}

TEST_CASE("base code distances") {
    CHECK(d_hamming_base(0, 3, 1, 1) == 1);
    CHECK(d_symbol_pair_base(0, 3, 1, 1) == 2);
    CHECK(d_hamming_base(1, 3, 1, 1) == 2);
    CHECK(d_hamming_base(2, 3, 1, 1) == 3);
    CHECK(d_hamming_base(3, 3, 1, 1) == 0);
    // p = 3, s = 2: plateau then jump at the gamma = 1 cells
    i64 expect[10] = {1, 2, 2, 2, 3, 3, 3, 6, 9, 0};
    for (i64 ell = 0; ell <= 9; ++ell) CHECK(d_hamming_base(ell, 3, 1, 2) == expect[ell]);
}

TEST_CASE("Hamming distances by type") {
    Ambient A = make_ambient(3, 1, 1, "2+v+uv");
    CHECK(d_hamming(A, {IdealType::a0, 0, 0, 0, {}}) == 0);
    CHECK(d_hamming(A, {IdealType::a1, 0, 0, 0, {}}) == 1);
    i64 b_expect[6] = {1, 1, 1, 1, 2, 3};
    for (i64 ell = 0; ell <= 5; ++ell)
        CHECK(d_hamming(A, {IdealType::b, ell, 0, 0, {}}) == b_expect[ell]);
    CHECK(d_hamming(A, {IdealType::c, 5, 4, 0, kOne}) == 3);  // I = 5
    CHECK(d_hamming(A, {IdealType::d, 1, 0, 0, {}}) == 1);
    CHECK(d_hamming(A, {IdealType::d, 5, 4, 4, kOne}) == 2);  // keyed on mu = 4
    CHECK(d_symbol_pair(A, {IdealType::b, 5, 0, 0, {}}) == 6);
    CHECK(d_symbol_pair(A, {IdealType::d, 5, 4, 4, kOne}) == 4);
    CHECK(d_symbol_pair(A, {IdealType::a0, 0, 0, 0, {}}) == 0);
}

TEST_CASE("type B distance never decreases in ell") {
    for (const char* as : {"2+v+uv", "2+u+v"}) {
        for (u32 s : {1u, 2u}) {
            Ambient A = make_ambient(3, 1, s, as);
            i64 prev = 1;
            for (i64 ell = 0; ell < 2 * A.ps(); ++ell) {
                i64 v = d_hamming(A, {IdealType::b, ell, 0, 0, {}});
                CHECK(v >= prev);
                prev = v;
            }
        }
    }
}

TEST_CASE("symbol-pair distance doubles the Hamming distance on every spec") {
    for (const char* as : {"2+v+uv", "2+u+v"}) {
        Ambient A = make_ambient(3, 1, 1, as);
        for (const IdealSpec& s : enumerate_specs(A, {})) {
            CodeReport r = evaluate(A, s);
            CHECK(r.d_sp == 2 * r.d_h);
            CHECK(d_symbol_pair(A, s) == 2 * d_hamming(A, s));
        }
    }
    for (i64 p : {3, 5}) {
        i64 ps = p;
        for (i64 ell = 0; ell <= ps; ++ell)
            CHECK(d_symbol_pair_base(ell, p, 1, 1) == 2 * d_hamming_base(ell, p, 1, 1));
    }
}

TEST_CASE("evaluation fills counts, distances and the threshold") {
    Ambient A = make_ambient(3, 1, 1, "2+v+uv");
    CodeReport b4 = evaluate(A, {IdealType::b, 4, 0, 0, {}});
    CHECK(b4.eta_exponent == 4);
    CHECK(b4.d_h == 2);
    CHECK(b4.d_sp == 4);
    CHECK_FALSE(b4.im.has_value());

    CodeReport c53 = evaluate(A, {IdealType::c, 5, 3, 0, kOne});
    CHECK(c53.eta_exponent == 6);
    REQUIRE(c53.im.has_value());
    CHECK(*c53.im == 4);
    CHECK(c53.d_h == 2);

    CodeReport a1 = evaluate(A, {IdealType::a1, 0, 0, 0, {}});
    CHECK(a1.eta_exponent == 24);
    CHECK(a1.d_h == 1);
    CHECK(a1.d_sp == 2);
}

TEST_CASE("provenance identifiers name the formula branch") {
    Ambient A = make_ambient(3, 1, 1, "2+v+uv");
    CHECK(evaluate(A, {IdealType::a1, 0, 0, 0, {}}).provenance == "cnt:A1; dH:A1; dsp:A1");
    CHECK(evaluate(A, {IdealType::b, 1, 0, 0, {}}).provenance ==
          "cnt:B; dH:B:unit; dsp:B:unit");
    CHECK(evaluate(A, {IdealType::b, 4, 0, 0, {}}).provenance ==
          "cnt:B; dH:B:range(G=1,g=0); dsp:B:range(G=1,g=0)");
    CHECK(evaluate(A, {IdealType::c, 2, 0, 0, {}}).provenance.find("cnt:C:nou:z0") == 0);
    CHECK(evaluate(A, {IdealType::c, 2, 0, 0, kOne}).provenance.find("cnt:C:nou:z:lo") == 0);
    CHECK(evaluate(A, {IdealType::c, 5, 0, 0, kOne}).provenance.find("cnt:C:nou:z:hi") == 0);
    CHECK(evaluate(A, {IdealType::d, 2, 0, 1, {}}).provenance.find("cnt:D; im:nou:z0") == 0);

    Ambient B = make_ambient(3, 1, 1, "2+u+v");
    CHECK(evaluate(B, {IdealType::c, 2, 0, 0, {}}).provenance.find("cnt:C:full:z0:lo") == 0);
    CHECK(evaluate(B, {IdealType::c, 4, 0, 0, {}}).provenance.find("cnt:C:full:z0:hi") == 0);
    CHECK(evaluate(B, {IdealType::c, 2, 0, 0, kOne}).provenance.find("cnt:C:full:z:lo") == 0);
    CHECK(evaluate(B, {IdealType::c, 5, 4, 0, kOne}).provenance.find("cnt:C:full:z:mid") == 0);
    CHECK(evaluate(B, {IdealType::c, 5, 0, 0, kOne}).provenance.find("cnt:C:full:z:tail") == 0);
}

TEST_CASE("the boundary branch is tagged and keyed on the collapse depth") {
    Ambient A = make_ambient(3, 1, 1, "2+u+v");
    CodeReport dead = evaluate(A, {IdealType::c, 4, 1, 0, parse_z(A, "1")});
    CHECK(dead.provenance.find("cnt:C:full:z:eq") == 0);
    CHECK(dead.provenance.find("im:full:z:eq") != std::string::npos);
    CHECK(dead.eta_exponent == 8);
    REQUIRE(dead.im.has_value());
    CHECK(*dead.im == 4);
    CHECK(dead.d_h == 2);  // keyed on I = 4

    CodeReport live = evaluate(A, {IdealType::c, 4, 1, 0, parse_z(A, "2")});
    CHECK(live.provenance.find("cnt:C:full:z:eq") == 0);
    CHECK(live.eta_exponent == 10);
    CHECK(*live.im == 3);
    CHECK(live.d_h == 1);

    Ambient C = make_ambient(3, 1, 1, "2+v+uv");
    CodeReport nou = evaluate(C, {IdealType::c, 4, 1, 0, parse_z(C, "1")});
    CHECK(nou.provenance.find("cnt:C:nou:z:eq") == 0);
    CHECK(nou.eta_exponent == 10);
    CHECK(*nou.im == 3);
}

TEST_CASE("formula reports ignore the z sample away from the boundary") {
    Ambient A = make_ambient(3, 1, 1, "2+v+uv");
    std::mt19937_64 rng(55);
    for (auto [ell, t] : {std::pair<i64, i64>{5, 3}, {3, 1}, {2, 0}, {5, 4}}) {
        CodeReport ref = evaluate(A, {IdealType::c, ell, t, 0, kOne});
        for (int it = 0; it < 25; ++it) {
            ZPoly z = random_unit_z(A, rng, A.ps() - 1);
            CodeReport r = evaluate(A, {IdealType::c, ell, t, 0, z});
            CHECK(r.eta_exponent == ref.eta_exponent);
            CHECK(r.d_h == ref.d_h);
            CHECK(r.d_sp == ref.d_sp);
            CHECK(*r.im == *ref.im);
            CHECK(r.provenance == ref.provenance);
        }
    }
}

TEST_CASE("distance evaluation rejects invalid specs") {
    Ambient A = make_ambient(3, 1, 1, "2+v+uv");
    CHECK_THROWS_AS(evaluate(A, {IdealType::c, 2, 3, 0, kOne}), error);
    CHECK_THROWS_AS(d_hamming(A, {IdealType::b, 6, 0, 0, {}}), error);
    Ambient U = make_ambient(3, 1, 1, "2");
    CHECK_THROWS_AS(evaluate(U, {IdealType::b, 1, 0, 0, {}}), error);
}
