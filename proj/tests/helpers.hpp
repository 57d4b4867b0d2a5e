#pragma once

#include "jaccube/curve.hpp"
#include "jaccube/mumford.hpp"

namespace testing_support {

using namespace jaccube;

inline Field F13() { return Field::prime(13); }

inline FieldElement e13(long v) { return FieldElement(F13(), v); }

// y^2 = x^5 - x over F_13, marked roots 0, 1, 12.
inline Genus2Curve curve13() {
  static const Genus2Curve c = Genus2Curve::create(F13(), {e13(0), e13(12), e13(0), e13(0), e13(0)},
                                                   {e13(0), e13(1), e13(12)});
  return c;
}

inline UniPoly poly13(std::initializer_list<long> c) { return UniPoly::from_ints(F13(), c); }

// ((x-2)(x-6), 10x+8): the class of (2,2) + (6,3) - 2 P_inf.
inline MumfordDivisor sample_class() { return MumfordDivisor(curve13(), poly13({12, 5, 1}), poly13({8, 10})); }

}  // namespace testing_support
