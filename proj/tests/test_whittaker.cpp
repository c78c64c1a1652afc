#include <doctest.h>

#include "asai/whittaker.hpp"
#include "oracles.hpp"
#include "rng_util.hpp"

using namespace asai;

namespace {

std::vector<Scalar> longs_to_scalars(long q, std::initializer_list<long> v) {
    std::vector<Scalar> out;
    for (long x : v) out.push_back(Scalar::from_long(q, x));
    return out;
}

std::vector<Scalar> random_params(testutil::Rng& rng, long q, long n) {
    std::vector<Scalar> t;
    for (long k = 0; k < n; ++k) t.push_back(rng.scalar(q, 5));
    return t;
}

} // namespace

TEST_CASE("support and normalization") {
    testutil::Rng rng(1);
    for (ExtType ext :
         {ExtType::split, ExtType::inert_unramified, ExtType::inert_ramified}) {
        LocalDatum d = make_local_datum(5, ext);
        UnramifiedRep r =
            ext == ExtType::split
                ? make_unramified_rep(d, random_params(rng, 5, 3), random_params(rng, 5, 3))
                : make_unramified_rep(d, random_params(rng, 5, 3));
        WhittakerEvaluator w(d, r);
        CHECK(w.value({0, 0, 0}) == Scalar::one(5));
        CHECK(w.value({0, 1, 0}).is_zero());
        CHECK(w.value({2, 3, 1}).is_zero());
        CHECK(w.value({-1, -2, 0}).is_zero());
        CHECK_THROWS_AS(w.value({1, 0}), std::invalid_argument);
    }
}

TEST_CASE("dominant values, ramified case") {
    // shape doubling: lam=(1,0) reads the Schur value at (2,0)
    LocalDatum d = make_local_datum(5, ExtType::inert_ramified);
    UnramifiedRep r = make_unramified_rep(d, longs_to_scalars(5, {2, 3}));
    WhittakerEvaluator w(d, r);
    CHECK(w.value({1, 0}) == Scalar::from_rat(5, rat_make(19, 5)));

    testutil::Rng rng(21);
    for (int iter = 0; iter < 25; ++iter) {
        long q = (iter % 2 == 0) ? 3 : 9;
        LocalDatum dd = make_local_datum(q, ExtType::inert_ramified);
        std::vector<Scalar> t = random_params(rng, q, 2);
        UnramifiedRep rr = make_unramified_rep(dd, t);
        long a = rng.int_in(0, 3), b = rng.int_in(0, a);
        Scalar expect = delta_sqrt(dd, BaseField::E, {a, b}) *
                        testutil::schur_ssyt_oracle({2 * a, 2 * b}, t);
        CHECK(WhittakerEvaluator(dd, rr).value({a, b}) == expect);
    }
}

TEST_CASE("dominant values, unramified inert case") {
    LocalDatum d = make_local_datum(5, ExtType::inert_unramified);
    UnramifiedRep r = make_unramified_rep(d, longs_to_scalars(5, {2, 3}));
    WhittakerEvaluator w(d, r);
    CHECK(w.value({1, 0}) == Scalar::one(5));
    CHECK(w.value({1, 1}) == Scalar::from_long(5, 6));
    CHECK(w.value({2, 0}) == Scalar::from_rat(5, rat_make(19, 25)));
}

TEST_CASE("dominant values, split case") {
    LocalDatum d = make_local_datum(5, ExtType::split);
    UnramifiedRep r =
        make_unramified_rep(d, longs_to_scalars(5, {2}), longs_to_scalars(5, {3}));
    WhittakerEvaluator w(d, r);
    CHECK(w.value({3}) == Scalar::from_long(5, 216));

    UnramifiedRep r2 =
        make_unramified_rep(d, longs_to_scalars(5, {1, 2}), longs_to_scalars(5, {3, 4}));
    WhittakerEvaluator w2(d, r2);
    // q^{-1} (t1+t2)(u1+u2); the two modulus half-powers multiply to q^{-1}
    CHECK(w2.value({1, 0}) == Scalar::from_rat(5, rat_make(21, 5)));
    // q^{-1} s_{(2,1)}(t) s_{(2,1)}(u) with s_{(2,1)}(x,y) = xy(x+y)
    CHECK(w2.value({2, 1}) == Scalar::from_rat(5, rat_make(6 * 84, 5)));
}

TEST_CASE("central shifts factor through the central character") {
    testutil::Rng rng(9);
    for (ExtType ext :
         {ExtType::split, ExtType::inert_unramified, ExtType::inert_ramified}) {
        for (int iter = 0; iter < 20; ++iter) {
            long q = (iter % 2 == 0) ? 2 : 5;
            LocalDatum d = make_local_datum(q, ext);
            long n = rng.int_in(1, 3);
            std::vector<Scalar> t = random_params(rng, q, n);
            UnramifiedRep r = ext == ExtType::split
                                  ? make_unramified_rep(d, t, random_params(rng, q, n))
                                  : make_unramified_rep(d, t);
            WhittakerEvaluator w(d, r);

            std::vector<long> lam(n, 0);
            long cap = 3;
            for (long k = 0; k < n; ++k) {
                lam[k] = rng.int_in(0, cap);
                cap = lam[k];
            }
            Scalar base = w.value(lam);
            for (long c = -3; c <= 3; ++c) {
                std::vector<long> shifted = lam;
                for (long& p : shifted) p += c;
                Scalar omega = Scalar::one(q);
                if (ext == ExtType::split) {
                    for (const Scalar& a : r.satake) omega = omega * a;
                    for (const Scalar& a : r.satake2) omega = omega * a;
                    omega = omega.pow(c);
                } else {
                    omega = central_char_value(r, d, d.uniformizer_val_ext() * c);
                }
                CHECK(w.value(shifted) == omega * base);
            }
        }
    }
}

TEST_CASE("negative tuples via the central shift") {
    LocalDatum d = make_local_datum(5, ExtType::inert_unramified);
    UnramifiedRep r = make_unramified_rep(d, longs_to_scalars(5, {2, 3}));
    // (0,-1) = (1,0) shifted by -1; value(1,0) = 1, central factor 6^{-1}
    CHECK(whittaker_value(d, r, {0, -1}) == Scalar::from_rat(5, rat_make(1, 6)));

    LocalDatum dr = make_local_datum(5, ExtType::inert_ramified);
    UnramifiedRep rr = make_unramified_rep(dr, longs_to_scalars(5, {2, 3}));
    // uniformizer valuation 2: central factor 6^{-2}, value(1,0) = 19/5
    CHECK(whittaker_value(dr, rr, {0, -1}) == Scalar::from_rat(5, rat_make(19, 180)));
}

TEST_CASE("dual values come from the contragredient") {
    LocalDatum d = make_local_datum(5, ExtType::inert_unramified);
    UnramifiedRep r = make_unramified_rep(d, longs_to_scalars(5, {2}));
    CHECK(dual_whittaker_value(d, r, {3}) == Scalar::from_rat(5, rat_make(1, 8)));
    CHECK(dual_whittaker_value(d, r, {0}) == Scalar::one(5));

    testutil::Rng rng(14);
    for (int iter = 0; iter < 20; ++iter) {
        UnramifiedRep rr = make_unramified_rep(d, random_params(rng, 5, 2));
        std::vector<long> lam = {rng.int_in(0, 3), rng.int_in(-2, 0)};
        if (lam[1] > lam[0]) std::swap(lam[0], lam[1]);
        CHECK(dual_whittaker_value(d, rr, lam) ==
              whittaker_value(d, contragredient(rr), lam));
    }
}
