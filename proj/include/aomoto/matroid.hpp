#ifndef AOMOTO_MATROID_HPP
#define AOMOTO_MATROID_HPP

#include <optional>
#include <vector>

#include "aomoto/arrangement.hpp"

namespace aomoto {

/// Sorted ascending tuple of 1-based hyperplane indices.
using IndexSet = std::vector<int>;

bool has_nonempty_intersection(const Arrangement& a, const IndexSet& s);

/// Nonempty intersection and codim == |s|.
bool is_independent(const Arrangement& a, const IndexSet& s);

/// Nonempty intersection and codim == rank(a); cardinality is not checked.
bool is_base_set(const Arrangement& a, int rank, const IndexSet& s);

/// All circuits (inclusion-minimal dependent sets), sorted lexicographically.
/// Enumerated by increasing cardinality with independence pruning.
std::vector<IndexSet> circuits(const Arrangement& a);

std::vector<IndexSet> broken_circuits_of(const std::vector<IndexSet>& circuits);
std::vector<IndexSet> broken_circuits(const Arrangement& a);

/// nbc p-subsets: nonempty intersection, containing no broken circuit.
std::vector<IndexSet> nbc_sets(const Arrangement& a, int p);

/// Facets of the broken circuit complex (nbc sets of size rank), i.e. the
/// standard ordered nbc-bases.
std::vector<IndexSet> nbc_bases(const Arrangement& a);

/// Direct definition: B in nbc such that every H in B can be exchanged for
/// some smaller hyperplane keeping a base.
std::vector<IndexSet> betanbc_direct(const Arrangement& a);

/// Deletion-restriction recursion on the last hyperplane (separator case
/// gives the empty set; rank one gives everything but the minimum).
std::vector<IndexSet> betanbc_recursive(const Arrangement& a);

struct CharPoly {
    std::vector<Int> coeffs;  // coeffs[k] = coefficient of t^k; degree = dimension
    Rat eval(const Rat& t) const;
};

CharPoly char_poly(const Arrangement& a);

/// (-1)^r chi(1); equals |betanbc| (Crapo's beta invariant).
Int beta_count_check(const Arrangement& a);

struct UnmixedReport {
    enum class Classification { Inside, Disjoint, Mixed };
    struct Entry {
        IndexSet flat_support;
        std::vector<IndexSet> nbc_x;
        Classification cls;
    };
    bool unmixed = true;
    std::vector<Entry> per_flat;
};

UnmixedReport is_unmixed_order(const Arrangement& a);

struct AdmissibleReport {
    std::optional<int> nu;
    std::vector<IndexSet> predicted_betanbc;  // rank 2 only; empty otherwise
};

/// nu such that H_i is parallel to H_1 iff i < nu; nullopt when no such nu
/// exists. Parallel = proportional coefficient vectors, constants ignored.
AdmissibleReport admissible_nu(const Arrangement& a);

/// Product-form betanbc for a supersolvable filtration given by its blocks
/// B_1,...,B_r. Validates the filtration and throws std::invalid_argument
/// when it is not supersolvable or the order does not respect the blocks.
std::vector<IndexSet> supersolvable_betanbc(const Arrangement& a,
                                            const std::vector<IndexSet>& blocks);

}  // namespace aomoto

#endif
