#include "doctest.h"
#include "hopflab/builders.hpp"
#include "hopflab/wedderburn.hpp"

#include <set>

using namespace hopflab;

namespace {

// k[x]/(x^2): basis {1, x}
AlgebraData dual_numbers(const Field& f) {
    Mat mult(f, 2, 4);
    const Scalar one = Scalar::one(f);
    mult.set(0, 0, one);
    mult.set(1, 1, one);
    mult.set(1, 2, one);
    return AlgebraData(f, 2, mult, Vec::basis(f, 2, 0));
}

std::vector<size_t> block_dims(const WedderburnDecomposition& d) {
    std::vector<size_t> out;
    for (const auto& b : d.blocks) out.push_back(b.block_dim);
    return out;
}

std::vector<size_t> module_dims(const std::vector<SimpleModule>& ms) {
    std::vector<size_t> out;
    for (const auto& m : ms) out.push_back(m.rep.dim);
    return out;
}

}  // namespace

TEST_CASE("jacobson radical") {
    SUBCASE("kZ3 over F_7 is semisimple (Maschke)") {
        const auto obj = group_algebra(GroupTable::cyclic(3), Field::fp(7));
        CHECK(jacobson_radical(obj.H.alg).dim() == 0);
    }
    SUBCASE("k[x]/(x^2) has radical spanned by x") {
        const AlgebraData a = dual_numbers(Field::rationals());
        const Subspace rad = jacobson_radical(a);
        REQUIRE(rad.dim() == 1);
        CHECK(rad.contains(Vec::basis(Field::rationals(), 2, 1)));
    }
    SUBCASE("D(kS3) over F_7 is semisimple") {
        const auto obj = drinfeld_double(GroupTable::symmetric(3), Field::fp(7));
        CHECK(jacobson_radical(obj.H.alg).dim() == 0);
    }
    SUBCASE("kZ2 over F_2: the trace form method declares itself out") {
        // in characteristic 2 the trace form vanishes identically here, so
        // its kernel (everything) is not the radical; the certified method
        // must refuse rather than report a wrong radical
        const auto obj = group_algebra(GroupTable::cyclic(2), Field::fp(2));
        CHECK_THROWS_AS(jacobson_radical(obj.H.alg), UnsupportedCharacteristic);
    }
    SUBCASE("k[x]/(x^2) radical is certified over F_7 too") {
        const Subspace rad = jacobson_radical(dual_numbers(Field::fp(7)));
        REQUIRE(rad.dim() == 1);
        CHECK(rad.contains(Vec::basis(Field::fp(7), 2, 1)));
    }
}

TEST_CASE("central primitive idempotents") {
    SUBCASE("kZ3 over F_7: three idempotents from the cube roots of unity") {
        const Field f7 = Field::fp(7);
        const auto obj = group_algebra(GroupTable::cyclic(3), f7);
        const auto dec = central_primitive_idempotents(obj.H.alg);
        REQUIRE(dec.blocks.size() == 3);
        // oracle: characters chi(g) in {1,2,4} give e = (1/3) sum chi(g)^-t g^t
        const Scalar third = Scalar::from_int(f7, 3).inverse();
        std::set<std::string> expected;
        for (uint64_t w : {1ull, 2ull, 4ull}) {
            Vec e(f7, 3);
            const uint64_t winv = w == 1 ? 1 : (w == 2 ? 4 : 2);
            uint64_t acc = 1;
            for (size_t t = 0; t < 3; ++t) {
                e.set(t, third * Scalar::fp(f7, acc));
                acc = acc * winv % 7;
            }
            expected.insert(e.str());
        }
        std::set<std::string> got;
        for (const auto& b : dec.blocks) {
            CHECK(b.block_dim == 1);
            CHECK(b.split);
            CHECK(b.matrix_size == 1);
            got.insert(b.idempotent.str());
        }
        CHECK(got == expected);
    }
    SUBCASE("kS3 over F_7: blocks of dims 1,1,4") {
        const auto obj = group_algebra(GroupTable::symmetric(3), Field::fp(7));
        const auto dec = central_primitive_idempotents(obj.H.alg);
        CHECK(block_dims(dec) == std::vector<size_t>{1, 1, 4});
    }
    SUBCASE("D(kS3) over F_7: blocks 1,1,4,4,4,4,9,9") {
        const auto obj = drinfeld_double(GroupTable::symmetric(3), Field::fp(7));
        const auto dec = central_primitive_idempotents(obj.H.alg);
        CHECK(block_dims(dec) == std::vector<size_t>{1, 1, 4, 4, 4, 4, 9, 9});
        for (const auto& b : dec.blocks) CHECK(b.split);
    }
    SUBCASE("non-semisimple input is rejected") {
        CHECK_THROWS_AS(
            central_primitive_idempotents(dual_numbers(Field::rationals())),
            NonSemisimple);
    }
    SUBCASE("kZ3 over Q: rational block plus a non-split quadratic block") {
        const auto obj = group_algebra(GroupTable::cyclic(3), Field::rationals());
        const auto dec = central_primitive_idempotents(obj.H.alg);
        REQUIRE(dec.blocks.size() == 2);
        CHECK(dec.blocks[0].block_dim == 1);
        CHECK(dec.blocks[0].split);
        CHECK(dec.blocks[1].block_dim == 2);
        CHECK(dec.blocks[1].center_degree == 2);
        CHECK(!dec.blocks[1].split);
    }
    SUBCASE("determinism: same seed, same output") {
        const auto obj = drinfeld_double(GroupTable::cyclic(3), Field::fp(7));
        const auto d1 = central_primitive_idempotents(obj.H.alg, 5);
        const auto d2 = central_primitive_idempotents(obj.H.alg, 5);
        REQUIRE(d1.blocks.size() == d2.blocks.size());
        for (size_t i = 0; i < d1.blocks.size(); ++i)
            CHECK(d1.blocks[i].idempotent == d2.blocks[i].idempotent);
    }
}

TEST_CASE("simple modules") {
    SUBCASE("kZ3 over F_7: three one-dimensional modules") {
        const auto obj = group_algebra(GroupTable::cyclic(3), Field::fp(7));
        const auto ms = simple_modules(obj.H.alg);
        CHECK(module_dims(ms) == std::vector<size_t>{1, 1, 1});
        for (const auto& m : ms) CHECK(check_module_rep(obj.H.alg, m.rep).ok());
    }
    SUBCASE("D(kZ2) over F_3: four one-dimensional modules") {
        const auto obj = drinfeld_double(GroupTable::cyclic(2), Field::fp(3));
        CHECK(module_dims(simple_modules(obj.H.alg)) ==
              std::vector<size_t>{1, 1, 1, 1});
    }
    SUBCASE("D(kS3) over F_7: dims 1,1,2,2,2,2,3,3") {
        const auto obj = drinfeld_double(GroupTable::symmetric(3), Field::fp(7));
        const auto ms = simple_modules(obj.H.alg);
        CHECK(module_dims(ms) == std::vector<size_t>{1, 1, 2, 2, 2, 2, 3, 3});
        for (const auto& m : ms) {
            CHECK(check_module_rep(obj.H.alg, m.rep).ok());
            CHECK(hom_space(m.rep.act, m.rep.act).size() == 1);
        }
    }
    SUBCASE("kZ3 over F_5 has a non-split block") {
        // cube roots of unity are not in F_5
        const auto obj = group_algebra(GroupTable::cyclic(3), Field::fp(5));
        CHECK_THROWS_AS(simple_modules(obj.H.alg), NonSplitBlock);
    }
    SUBCASE("sum of squared dims equals the algebra dimension") {
        for (const auto& obj :
             {group_algebra(GroupTable::symmetric(3), Field::fp(7)),
              drinfeld_double(GroupTable::symmetric(3), Field::fp(7))}) {
            size_t sum = 0;
            for (const auto& m : simple_modules(obj.H.alg))
                sum += m.rep.dim * m.rep.dim;
            CHECK(sum == obj.H.dim());
        }
    }
}

TEST_CASE("simple subcoalgebras") {
    SUBCASE("group-like coalgebra: one singleton per group element") {
        const auto obj = group_algebra(GroupTable::symmetric(3), Field::fp(7));
        const auto subs = simple_subcoalgebras(obj.H.coa);
        REQUIRE(subs.size() == 6);
        for (const auto& d : subs) CHECK(d.dim() == 1);
    }
    SUBCASE("coalgebra of D(kZ2) over F_3 splits into four singletons") {
        const auto obj = drinfeld_double(GroupTable::cyclic(2), Field::fp(3));
        const auto subs = simple_subcoalgebras(obj.H.coa);
        REQUIRE(subs.size() == 4);
        size_t total = 0;
        for (const auto& d : subs) total += d.dim();
        CHECK(total == 4);
    }
    SUBCASE("non-cosemisimple coalgebra rejected") {
        // dual of k[x]/(x^2) is a non-cosemisimple coalgebra
        const CoalgebraData c = dual_coalgebra(dual_numbers(Field::fp(7)));
        CHECK_THROWS_AS(simple_subcoalgebras(c), NotCosemisimple);
    }
}

TEST_CASE("hom spaces") {
    const auto obj = group_algebra(GroupTable::symmetric(3), Field::fp(7));
    const auto ms = simple_modules(obj.H.alg);
    REQUIRE(ms.size() == 3);  // trivial, sign, standard
    SUBCASE("Schur: hom(X, X) is one-dimensional for simple X") {
        for (const auto& m : ms)
            CHECK(hom_space(m.rep.act, m.rep.act).size() == 1);
    }
    SUBCASE("hom(trivial, sign) = 0") {
        CHECK(hom_space(ms[0].rep.act, ms[1].rep.act).empty());
        CHECK(!is_isomorphic(ms[0].rep.act, ms[1].rep.act));
    }
    SUBCASE("hom(X, X + X) is two-dimensional for simple X") {
        const ModuleRep& x = ms[2].rep;
        std::vector<Mat> dbl;
        for (const auto& a : x.act) {
            Mat m(a.field(), 2 * x.dim, 2 * x.dim);
            for (size_t r = 0; r < x.dim; ++r)
                for (size_t c = 0; c < x.dim; ++c) {
                    m.set(r, c, a.at(r, c));
                    m.set(x.dim + r, x.dim + c, a.at(r, c));
                }
            dbl.push_back(std::move(m));
        }
        CHECK(hom_space(x.act, dbl).size() == 2);
    }
    SUBCASE("a module is isomorphic to itself") {
        CHECK(is_isomorphic(ms[2].rep.act, ms[2].rep.act));
    }
    SUBCASE("mismatched algebras rejected") {
        std::vector<Mat> short_list(ms[0].rep.act.begin(),
                                    ms[0].rep.act.begin() + 3);
        CHECK_THROWS_AS(hom_space(short_list, ms[1].rep.act), ShapeMismatch);
    }
}
