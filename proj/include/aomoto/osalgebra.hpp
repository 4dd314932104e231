#ifndef AOMOTO_OSALGEBRA_HPP
#define AOMOTO_OSALGEBRA_HPP

#include <map>
#include <vector>

#include "aomoto/complexes.hpp"
#include "aomoto/matroid.hpp"

namespace aomoto {

/// Element of the Orlik-Solomon algebra in the nbc-monomial normal form:
/// degree plus a sparse coefficient map on ascending nbc tuples.
struct OSElement {
    int degree = 0;
    std::map<IndexSet, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const IndexSet& monomial, const Rat& coeff);
    OSElement& operator+=(const OSElement& other);
    OSElement& operator*=(const Rat& scalar);
    friend OSElement operator+(OSElement a, const OSElement& b) { return a += b; }
    friend OSElement operator*(const Rat& s, OSElement a) { return a *= s; }
    bool operator==(const OSElement& other) const = default;
};

struct WeightVector {
    RatVec lambda;  // lambda[i-1] is the weight of H_i

    int size() const { return static_cast<int>(lambda.size()); }
    const Rat& of(int i) const { return lambda.at(i - 1); }
    Rat lambda_infinity() const;
};

WeightVector parse_weights(const std::string& text, int n);

/// The Orlik-Solomon algebra of an arrangement with the fixed linear order:
/// nbc monomial bases per degree and the straightening normal form.
class OSAlgebra {
public:
    explicit OSAlgebra(Arrangement a);  // keeps its own copy

    const Arrangement& arrangement() const { return arrangement_; }
    const FlatLattice& lattice() const { return lattice_; }
    int rank() const { return lattice_.rank(); }

    int dim(int p) const;
    const std::vector<IndexSet>& basis(int p) const { return bases_.at(p); }
    std::size_t basis_index(int p, const IndexSet& monomial) const;

    /// Normal form of the word omega_{w1} ... omega_{wk}: zero when the index
    /// set has empty intersection or is dependent, otherwise the nbc-reduced
    /// combination obtained by rewriting along minimal broken circuits.
    OSElement reduce_monomial(const std::vector<int>& word) const;

    OSElement multiply(const OSElement& a, const OSElement& b) const;

    /// Coordinates of a degree-p element in the nbc basis of A^p.
    RatVec coordinates(const OSElement& e) const;

private:
    Arrangement arrangement_;
    FlatLattice lattice_;
    std::vector<IndexSet> broken_circuits_;
    std::map<IndexSet, int> bc_completion_;  // broken circuit -> smallest closing hyperplane
    std::vector<std::vector<IndexSet>> bases_;
    std::vector<std::map<IndexSet, std::size_t>> index_;

    void reduce_sorted(const IndexSet& t, const Rat& coeff, OSElement& out) const;
};

/// omega_lambda = sum of lambda_i omega_i.
OSElement omega_lambda(const OSAlgebra& alg, const WeightVector& w);

/// omega_lambda(X) = sum over the localization at X.
OSElement omega_lambda_flat(const OSAlgebra& alg, const WeightVector& w, int flat_id);

struct AomotoComplex {
    std::vector<std::vector<IndexSet>> bases;  // nbc monomials per degree 0..r
    std::vector<SparseMatrix> differentials;   // d_p : A^p -> A^{p+1}, p = 0..r-1
};

AomotoComplex aomoto_complex(const OSAlgebra& alg, const WeightVector& w);

/// dim H^q(A^., omega_lambda wedge) for q = 0..r, by exact rank.
std::vector<int> aomoto_cohomology(const OSAlgebra& alg, const WeightVector& w);

/// Linear extension of xi* -> omega_lambda(X_1) ... omega_lambda(X_r) on top
/// cochains of the Folkman complex.
OSElement upsilon(const OSAlgebra& alg, const WeightVector& w, const FolkmanComplex& f,
                  const RatVec& top_cochain);

/// Flag form Xi(B) fully reduced to the nbc basis.
OSElement flag_form(const OSAlgebra& alg, const WeightVector& w, const IndexSet& base);

/// Flag form expanded in the exterior algebra only (no circuit rewriting);
/// this is the raw spanning-monomial presentation before any rewriting.
OSElement flag_form_unreduced(const OSAlgebra& alg, const WeightVector& w, const IndexSet& base);

}  // namespace aomoto

#endif
