#include "doctest.h"
#include "fixtures.hpp"
#include "hopflab/yd.hpp"

using namespace hopflab;
using namespace fixtures;

namespace {

// 1-dim trivial relative object: eps-action, coaction v -> 1 (x) v
RelHopfModule trivial_rel(const HopfAlgebraData& h) {
    const Field f = h.field();
    const size_t n = h.dim();
    ModuleRep act = ModuleRep::trivial(h.coa);
    Mat rho(f, n, 1);
    h.alg.unit().for_nonzero(
        [&](size_t i, const Scalar& c) { rho.set(i, 0, c); });
    return RelHopfModule{std::move(act), std::move(rho)};
}

}  // namespace

TEST_CASE("check_yd") {
    SUBCASE("trivial module with trivial coaction passes") {
        const auto& obj = dkz2();
        YDModule v{ModuleRep::trivial(obj.H.coa), Mat(obj.H.field(), 4, 1)};
        obj.H.alg.unit().for_nonzero(
            [&](size_t i, const Scalar& c) { v.coaction.set(i, 0, c); });
        CHECK(check_yd(obj.H, v).ok());
    }
    SUBCASE("H with (ad, Delta) is a Yetter-Drinfeld module") {
        const auto& obj = dkz2();
        const auto t = transmute(obj.H, *obj.R);
        CHECK(check_yd(obj.H, h_as_yd(obj.H, t)).ok());
    }
    SUBCASE("corrupted coaction fails with a witness") {
        const auto& obj = dkz2();
        const auto t = transmute(obj.H, *obj.R);
        YDModule v = h_as_yd(obj.H, t);
        Mat bad = v.coaction;
        bad.set(0, 1, bad.at(0, 1) + Scalar::one(obj.H.field()));
        v.coaction = bad;
        const CheckReport rep = check_yd(obj.H, v);
        CHECK(!rep.ok());
        CHECK(!rep.first_failure().empty());
    }
}

TEST_CASE("yd/rel conversions") {
    SUBCASE("R = 1(x)1: the conversion fixes the coaction") {
        const auto& obj = ks3();
        const auto& t = ks3_t();
        const YDModule v = h_as_yd(obj.H, t);
        const RelHopfModule x = yd_to_rel(v, obj.H, t);
        CHECK(x.coaction == v.coaction);
        const YDModule back = rel_to_yd(x, obj.H, t);
        CHECK(back.coaction == v.coaction);
    }
    SUBCASE("round trip on H-as-YD over D(kZ2)") {
        const auto& obj = dkz2();
        const auto& t = dkz2_t();
        const YDModule v = h_as_yd(obj.H, t);
        const RelHopfModule x = yd_to_rel(v, obj.H, t);
        CHECK(check_rel(obj.H, t, x).ok());
        const YDModule back = rel_to_yd(x, obj.H, t);
        CHECK(back.coaction == v.coaction);
    }
    SUBCASE("H-as-YD over D(kS3): coefficient coalgebra is all of H_R") {
        const auto& obj = dks3();
        const auto& t = dks3_t();
        const RelHopfModule x = yd_to_rel(h_as_yd(obj.H, t), obj.H, t);
        CHECK(coefficient_space(x.coaction, 36, 36).dim() == 36);
    }
}

TEST_CASE("associated subcoalgebras") {
    SUBCASE("trivial comodule gives span{1}") {
        const auto& obj = dkz2();
        const auto& t = dkz2_t();
        const auto a = associated_subcoalgebra(trivial_rel(obj.H), obj.H, t);
        CHECK(a.space.dim() == 1);
        CHECK(a.space.contains(obj.H.alg.unit()));
        CHECK(a.h_stable);
        CHECK(a.simple);
    }
    SUBCASE("3-dim simple of D(kS3) has 9-dim coefficient space") {
        const auto& obj = dks3();
        const auto& t = dks3_t();
        const auto& ms = dks3_irr();
        const ModuleRep& w = ms.back().rep;  // a 3-dimensional simple
        REQUIRE(w.dim == 3);
        const Comodule wc = module_to_comodule(w, obj.H, *obj.R, t);
        const auto a = associated_subcoalgebra(wc, obj.H, t);
        CHECK(a.space.dim() == 9);
        CHECK(a.simple);
        CHECK(a.h_stable);
    }
    SUBCASE("group-like coaction on kS3 gives a one-dim non-stable piece") {
        const auto& obj = ks3();
        const auto& t = ks3_t();
        const Field f = obj.H.field();
        const size_t g12 = *obj.basis_index("(12)");
        Comodule w{1, Mat(f, 6, 1)};
        w.coaction.set(g12, 0, Scalar::one(f));
        const auto a = associated_subcoalgebra(w, obj.H, t);
        CHECK(a.space.dim() == 1);
        CHECK(a.space.contains(Vec::basis(f, 6, g12)));
        CHECK(!a.h_stable);
    }
}

TEST_CASE("h_stabilize") {
    SUBCASE("span{1} is stable") {
        const auto& obj = dkz2();
        const auto& t = dkz2_t();
        const Subspace one = Subspace::span(obj.H.field(), 4,
                                            {obj.H.alg.unit()});
        CHECK(is_h_stable(obj.H, t, one));
        CHECK(h_stabilize(obj.H, t, one) == one);
    }
    SUBCASE("span{(12)} in kS3 closes up to the conjugacy class") {
        const auto& obj = ks3();
        const auto& t = ks3_t();
        const Field f = obj.H.field();
        const Subspace c = Subspace::span(
            f, 6, {Vec::basis(f, 6, *obj.basis_index("(12)"))});
        CHECK(!is_h_stable(obj.H, t, c));
        const Subspace closure = h_stabilize(obj.H, t, c);
        CHECK(closure.dim() == 3);
        for (const char* lbl : {"(12)", "(13)", "(23)"})
            CHECK(closure.contains(
                Vec::basis(f, 6, *obj.basis_index(lbl))));
    }
    SUBCASE("non-subcoalgebra input is rejected") {
        const auto& obj = ks3();
        const auto& t = ks3_t();
        const Field f = obj.H.field();
        Vec v = Vec::basis(f, 6, 0);
        v += Vec::basis(f, 6, 1);  // e + (12)-ish: not a subcoalgebra
        CHECK_THROWS_AS(h_stabilize(obj.H, t, Subspace::span(f, 6, {v})),
                        NotASubcoalgebra);
    }
    SUBCASE("every simple subcoalgebra of H_R of D(kS3) is stable") {
        const auto& obj = dks3();
        const auto& t = dks3_t();
        const auto subs = simple_subcoalgebras(t.coalgebra);
        REQUIRE(subs.size() == 8);
        for (const auto& d : subs) CHECK(is_h_stable(obj.H, t, d));
    }
}

TEST_CASE("bar tensor") {
    SUBCASE("bar(W (x) k) is W with its induced coaction") {
        const auto& obj = dkz2();
        const auto& t = dkz2_t();
        const ModuleRep& w = dkz2_irr()[2].rep;
        const ModuleRep k = ModuleRep::trivial(obj.H.coa);
        const RelHopfModule b = bar_tensor(w, k, obj.H, *obj.R, t);
        const Comodule wc = module_to_comodule(w, obj.H, *obj.R, t);
        CHECK(b.coaction == wc.coaction);
        for (size_t i = 0; i < 4; ++i) CHECK(b.act.act[i] == w.act[i]);
    }
    SUBCASE("2-dim (x) 3-dim simples of D(kS3) give a valid 6-dim object") {
        const auto& obj = dks3();
        const auto& t = dks3_t();
        const auto& ms = dks3_irr();
        const RelHopfModule b =
            bar_tensor(ms[2].rep, ms[7].rep, obj.H, *obj.R, t);
        CHECK(b.act.dim == 6);
        CHECK(check_rel(obj.H, t, b).ok());
    }
}

TEST_CASE("classification of simple Yetter-Drinfeld modules") {
    SUBCASE("D(kZ2) over F_3: sixteen one-dimensional simples") {
        const auto& obj = dkz2();
        const auto& t = dkz2_t();
        const auto cls = classify_simple_yd(obj.H, *obj.R, t, dkz2_irr());
        CHECK(cls.size() == 16);
        for (const auto& c : cls) {
            CHECK(c.object.act.dim == 1);
            CHECK(c.d_w.dim() == 1);
        }
    }
    SUBCASE("negative control: bar of the 2-dim simple of kS3 is not simple") {
        const auto& obj = ks3();
        const auto& t = ks3_t();
        const auto ms = simple_modules(obj.H.alg);
        const ModuleRep& std2 = ms[2].rep;
        REQUIRE(std2.dim == 2);
        const RelHopfModule b = bar_tensor(std2, std2, obj.H, *obj.R, t);
        const auto endos =
            hom_space(b.act.act, b.act.act, &b.coaction, &b.coaction);
        CHECK(endos.size() > 1);  // hom dimension 3: triv + sgn + std
        CHECK_THROWS_AS(classify_simple_yd(obj.H, *obj.R, t, ms),
                        SimplicityFailure);
    }
}

TEST_CASE("decomposition of H as a Yetter-Drinfeld module") {
    SUBCASE("D(kZ2): four one-dimensional summands") {
        const auto& obj = dkz2();
        const auto& t = dkz2_t();
        const auto dec = decompose_h_as_yd(obj.H, *obj.R, t);
        CHECK(dec.checks.ok());
        CHECK(dec.summands.size() == 4);
        for (const auto& s : dec.summands) CHECK(s.d_w.dim() == 1);
    }
    SUBCASE("D(kS3): dims 1,1,4,4,4,4,9,9 with all structure checks") {
        const auto& obj = dks3();
        const auto& t = dks3_t();
        const auto dec = decompose_h_as_yd(obj.H, *obj.R, t);
        CHECK(dec.checks.ok());
        std::vector<size_t> dims;
        for (const auto& s : dec.summands) dims.push_back(s.d_w.dim());
        std::sort(dims.begin(), dims.end());
        CHECK(dims == std::vector<size_t>{1, 1, 4, 4, 4, 4, 9, 9});
        for (const auto& s : dec.summands) {
            CHECK(s.h_stable);
            CHECK(s.iso_bar_w_wstar);
        }
    }
}
