// Independent test oracles: deliberately naive algorithms (full subset
// enumeration, Smith normal form, quotient-space ranks) kept out of the
// production library and used only to cross-check it.
#ifndef AOMOTO_TEST_ORACLES_HPP
#define AOMOTO_TEST_ORACLES_HPP

#include <map>
#include <set>
#include <vector>

#include "aomoto/osalgebra.hpp"

namespace aomoto::oracle {

struct LatticeSummary {
    // (codim, closure-maximal support) per flat, sorted.
    std::vector<std::pair<int, IndexSet>> flats;
};

/// 2^n enumeration: every subset is row-reduced exactly; subsets with equal
/// reduced echelon form are one flat whose support is the union of them all.
LatticeSummary brute_force_lattice(const Arrangement& a);

LatticeSummary summarize(const FlatLattice& lattice);

/// All inclusion-minimal dependent subsets by scanning every subset.
std::vector<IndexSet> brute_force_circuits(const Arrangement& a);

/// Rank via the Smith normal form over the integers (entries must be integral).
std::size_t smith_rank(const QMatrix& m);

/// Rank via the rational nullspace: cols - dim ker. A code path independent
/// of the fraction-free elimination used in production.
std::size_t nullspace_rank(const QMatrix& m);

/// Dimensions of the Orlik-Solomon algebra computed as the quotient of the
/// full exterior algebra by the span of all relation generators.
std::vector<int> quotient_os_dims(const Arrangement& a);

/// e_T - iota(reduce(T)) lies in the relation span for every subset T of
/// size p; verifies the straightening normal form against the quotient.
bool quotient_normal_form_consistent(const OSAlgebra& alg, int p);

}  // namespace aomoto::oracle

#endif
