#pragma once

// Shared example objects for the test suite. The generators self-validate on
// construction (full axiom passes), which is exactly what makes rebuilding
// them per test case wasteful; everything here is immutable after creation.

#include "hopflab/builders.hpp"
#include "hopflab/transmute.hpp"
#include "hopflab/wedderburn.hpp"

namespace fixtures {

using namespace hopflab;

inline const HopfObject& dks3() {
    static const HopfObject o =
        drinfeld_double(GroupTable::symmetric(3), Field::fp(7));
    return o;
}

inline const HopfObject& dkz2() {
    static const HopfObject o =
        drinfeld_double(GroupTable::cyclic(2), Field::fp(3));
    return o;
}

inline const HopfObject& dkz3() {
    static const HopfObject o =
        drinfeld_double(GroupTable::cyclic(3), Field::fp(7));
    return o;
}

inline const HopfObject& ks3() {
    static const HopfObject o =
        group_algebra(GroupTable::symmetric(3), Field::fp(7));
    return o;
}

inline const TransmutedBraidedGroup& dks3_t() {
    static const TransmutedBraidedGroup t = transmute(dks3().H, *dks3().R);
    return t;
}

inline const TransmutedBraidedGroup& dkz2_t() {
    static const TransmutedBraidedGroup t = transmute(dkz2().H, *dkz2().R);
    return t;
}

inline const TransmutedBraidedGroup& ks3_t() {
    static const TransmutedBraidedGroup t = transmute(ks3().H, *ks3().R);
    return t;
}

inline const std::vector<SimpleModule>& dks3_irr() {
    static const std::vector<SimpleModule> ms = simple_modules(dks3().H.alg);
    return ms;
}

inline const std::vector<SimpleModule>& dkz2_irr() {
    static const std::vector<SimpleModule> ms = simple_modules(dkz2().H.alg);
    return ms;
}

}  // namespace fixtures
