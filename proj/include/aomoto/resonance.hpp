#ifndef AOMOTO_RESONANCE_HPP
#define AOMOTO_RESONANCE_HPP

#include <vector>

#include "aomoto/osalgebra.hpp"

namespace aomoto {

/// A flat is dense when its localization is indecomposable, decided by
/// matroid connectivity (every pair of hyperplanes in a common circuit).
bool localization_connected(const std::vector<RatVec>& coefficient_vectors);

/// Dense flats of L - {V}, by flat id, in lattice order.
std::vector<int> dense_flats_affine(const Arrangement& a, const FlatLattice& lattice);

struct InfinityElement {
    int cone_flat_id = -1;
    IndexSet support;  // cone indices; infinity_index stands for H_infinity
    bool contains_infinity = false;
    bool at_infinity = false;  // contained in H_infinity (no affine part)
};

/// Dense elements of L(A_infinity) - {P^l}, realized on the cone: flats of
/// the cone lattice with a nonzero direction space and connected localization.
std::vector<InfinityElement> dense_at_infinity(const ProjectiveClosure& pc);

struct WeightCondition {
    IndexSet support;  // may contain the infinity index
    Rat value;         // lambda(X)
    bool violated = false;
};

struct ResonanceCheck {
    bool ok = true;
    std::vector<WeightCondition> conditions;
    std::vector<WeightCondition> violations;
};

/// Yuzvinsky condition: lambda(X) != 0 at every affine dense flat.
ResonanceCheck check_yuzvinsky(const Arrangement& a, const FlatLattice& lattice,
                               const WeightVector& w);

/// Nonresonance: lambda(X) is not a nonnegative integer at any dense element
/// of L(A_infinity) - {P^l}. With paper_example_compat the condition coming
/// from H_infinity alone is suppressed.
ResonanceCheck check_nonresonance(const ProjectiveClosure& pc, const WeightVector& w,
                                  bool paper_example_compat = false);

}  // namespace aomoto

#endif
