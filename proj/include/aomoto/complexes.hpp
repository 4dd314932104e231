#ifndef AOMOTO_COMPLEXES_HPP
#define AOMOTO_COMPLEXES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aomoto/matroid.hpp"

namespace aomoto {

/// Abstract simplicial complex on vertices 0..vertex_count-1. Simplices are
/// stored per dimension as sorted vertex tuples; the coboundary signs come
/// from positional parity in that fixed vertex order.
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<std::vector<int>>> simplices;  // simplices[d], lex-sorted

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    bool is_pure() const;
    bool has_simplex(const std::vector<int>& s) const;

    static SimplicialComplex from_simplex_family(int vertex_count,
                                                 const std::vector<std::vector<int>>& family);
};

/// Coboundary delta_q : C^q -> C^{q+1} of the augmented cochain complex,
/// q from -1 (augmentation) to dim. Rows are (q+1)-simplices.
QMatrix coboundary(const SimplicialComplex& k, int q);

struct CohomologyResult {
    int dimension = 0;
    std::vector<RatVec> representatives;  // cocycles spanning a complement of the coboundaries
};

/// Reduced simplicial cohomology over the rationals in degree q.
CohomologyResult reduced_cohomology(const SimplicialComplex& k, int q);

/// Reduced Betti numbers, degrees 0..dim().
std::vector<int> reduced_betti_numbers(const SimplicialComplex& k);

struct BrokenCircuitComplex {
    SimplicialComplex complex;  // vertex v <-> hyperplane v+1
    std::vector<IndexSet> facets;
};

struct FolkmanComplex {
    SimplicialComplex complex;
    std::vector<int> vertex_flat;    // vertex -> flat id in the lattice
    std::map<int, int> flat_vertex;  // inverse
};

BrokenCircuitComplex broken_circuit_complex(const Arrangement& a);
FolkmanComplex folkman_complex(const FlatLattice& lattice);

struct ShellingReport {
    bool is_shelling = true;
    std::vector<IndexSet> homology_facets;
    std::optional<IndexSet> violating_facet;
};

/// Verifies the shelling condition for the lexicographic facet order of BC
/// and collects the homology facets (those glued along their full boundary).
ShellingReport check_lex_shelling(const Arrangement& a);

/// Strictly decreasing chain of flats, largest codim first.
using Flag = std::vector<int>;  // flat ids

/// Standard flag X_p = intersection of the last r-p+1 hyperplanes of b.
/// Throws std::invalid_argument unless b is a base.
Flag flag_of_base(const FlatLattice& lattice, const IndexSet& b);

struct PiMap {
    bool simplicial = true;
    std::vector<int> vertex_map;  // F vertex -> BC vertex
    // Pullback on top cochains: rows = top simplices of F, cols = facets of BC.
    QMatrix top_pullback;
    std::vector<std::vector<int>> f_top;  // top simplices of F (vertex tuples)
};

PiMap pi_map(const FlatLattice& lattice, const BrokenCircuitComplex& bc,
             const FolkmanComplex& f);

/// Index of the top simplex of F realizing the flag of b.
std::size_t flag_simplex_index(const FolkmanComplex& f, const FlatLattice& lattice,
                               const IndexSet& b);

struct FlagBasisReport {
    bool ok = false;
    int cohomology_dim = 0;
    std::size_t betanbc_count = 0;
};

/// Checks that {[xi(B)*] : B in betanbc} is a basis of reduced H^{r-1}(F).
FlagBasisReport verify_flag_basis(const Arrangement& a);

}  // namespace aomoto

#endif
