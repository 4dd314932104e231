#ifndef AOMOTO_ARRANGEMENT_HPP
#define AOMOTO_ARRANGEMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aomoto/qmatrix.hpp"
#include "aomoto/rational.hpp"

namespace aomoto {

/// Affine hyperplane: zero locus of coeffs·x + constant. Hyperplane indices
/// are 1-based throughout and define the linear order.
struct Hyperplane {
    int index = 0;
    RatVec coeffs;
    Rat constant;
    std::string label;
};

struct Arrangement {
    int dimension = 0;
    std::vector<Hyperplane> hyperplanes;

    int size() const { return static_cast<int>(hyperplanes.size()); }
    const Hyperplane& hyperplane(int i) const { return hyperplanes.at(i - 1); }

    /// Defining row [coeffs | rhs] with rhs = -constant, the convention used
    /// by every linear system below.
    RatVec equation_row(int i) const;
};

/// Canonical form of an affine subspace: RREF of its defining system with
/// zero rows dropped. Equal subspaces get equal keys.
struct CanonicalForm {
    std::size_t cols = 0;
    std::vector<RatVec> rows;

    auto operator<=>(const CanonicalForm& o) const = default;
};

struct Flat {
    int id = -1;
    std::vector<int> support;  // all hyperplane indices containing the flat
    int codim = 0;
    RatVec point;                    // a rational point on the flat
    std::vector<RatVec> directions;  // basis of the direction space
    CanonicalForm key;
};

class FlatLattice {
public:
    const std::vector<Flat>& flats() const { return flats_; }
    const Flat& flat(int id) const { return flats_.at(id); }
    int rank() const { return rank_; }
    int ambient_id() const { return 0; }

    /// Y <= X in L (reverse inclusion) iff support(Y) subseteq support(X).
    bool leq(int y, int x) const;

    std::vector<int> flats_of_codim(int c) const;
    std::vector<int> maximal_flats() const { return flats_of_codim(rank_); }

    /// Flat equal to the intersection of the given hyperplanes, if nonempty.
    std::optional<int> flat_of(const std::vector<int>& indices) const;

    std::optional<int> find_key(const CanonicalForm& key) const;

private:
    friend FlatLattice build_lattice(const Arrangement& a);
    std::vector<Flat> flats_;
    std::map<CanonicalForm, int> by_key_;
    int rank_ = 0;
    // Equation rows of the arrangement, kept so the lattice is self-contained.
    std::vector<RatVec> equations_;
    std::size_t width_ = 0;
};

struct ProjectiveClosure {
    Arrangement cone;       // central arrangement in dimension l+1
    int infinity_index = 0; // position of the hyperplane at infinity (n+1)
    FlatLattice lattice;    // lattice of the cone
};

/// Deletion-restriction triple relative to one hyperplane.
struct Triple {
    Arrangement deleted;     // A' = A - {H}, order inherited, indices 1..n-1
    std::vector<int> deleted_to_original;
    Arrangement restricted;  // A'' inside H, parametrized, ordered by nu
    std::vector<int> nu;     // nu[k-1] = smallest original index (!= H) containing the k-th A''-hyperplane
};

Arrangement parse_arrangement(const std::string& text);
std::string arrangement_to_json(const Arrangement& a);

FlatLattice build_lattice(const Arrangement& a);

int rank(const Arrangement& a);

/// Rank of the intersection of the given hyperplanes; nullopt if empty.
std::optional<int> subset_rank(const Arrangement& a, const std::vector<int>& indices);

std::vector<int> localization(const FlatLattice& lattice, int flat_id);

Triple triple(const Arrangement& a, int h);

bool is_separator(const Arrangement& a, int h);

ProjectiveClosure projective_closure(const Arrangement& a);

/// Within the closure: the affine flat a cone flat restricts to on the chart
/// z = 1, if the cone flat is not contained in the hyperplane at infinity.
std::optional<CanonicalForm> cone_flat_to_affine_key(const ProjectiveClosure& pc, int cone_flat_id);

}  // namespace aomoto

#endif
