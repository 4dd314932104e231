#ifndef AOMOTO_BASES_HPP
#define AOMOTO_BASES_HPP

#include <string>
#include <vector>

#include "aomoto/resonance.hpp"

namespace aomoto {

enum class GatingPredicate { None, Yuzvinsky, Nonresonance };

std::string to_string(GatingPredicate p);

struct RankCertificate {
    int dim_top = 0;          // dim A^r
    int rank_image = 0;       // rank of omega_lambda wedge : A^{r-1} -> A^r
    int rank_total = 0;       // rank of [image | candidate vectors]
    std::size_t count = 0;    // number of candidate vectors
    bool independent_mod_image = false;
    bool spans = false;
    bool ok = false;
};

struct CohomologyBasis {
    GatingPredicate predicate = GatingPredicate::None;
    std::vector<IndexSet> betanbc;
    std::vector<OSElement> flag_forms;            // nbc normal forms
    std::vector<OSElement> flag_forms_unreduced;  // exterior expansions
    RankCertificate certificate;
    int phi_inverse_sign = 1;  // (-1)^{r(r+1)/2}, reported, never baked into Xi(B)
};

/// The betanbc flag-form basis of H^r(A^., omega_lambda wedge) with an exact
/// rank certificate. Throws InconsistencyError if the certificate fails while
/// the gating predicate holds.
CohomologyBasis betanbc_basis(const Arrangement& a, const WeightVector& w);

struct TransitionMatrix {
    std::vector<int> order;  // order[k-1] = original index of the k-th hyperplane
    std::vector<IndexSet> source_betanbc;  // rows (basis of the original order)
    std::vector<IndexSet> target_betanbc;  // columns (basis of the new order)
    QMatrix matrix;
    Rat det;
    bool integral = false;
    bool unimodular = false;
    bool weight_independent = false;
    std::vector<std::string> sample_hashes;
};

/// Change of basis between the Xi-bases of two linear orders, solved exactly
/// in H^r for each weight sample. All samples must agree and the matrix must
/// be integral with determinant +-1; otherwise throws InconsistencyError.
TransitionMatrix transition_matrix(const Arrangement& a, const std::vector<int>& order2,
                                   const std::vector<WeightVector>& samples);

Arrangement reorder_arrangement(const Arrangement& a, const std::vector<int>& order);
WeightVector reorder_weights(const WeightVector& w, const std::vector<int>& order);

struct MonomialBasisCheck {
    bool holds = false;
    std::vector<std::string> sufficient_conditions;  // "unmixed", "rank2-admissible"
    RankCertificate certificate;
};

/// Whether {omega_B : B in betanbc} is a basis of H^r, by exact rank, plus
/// which sufficient condition of the special cases applies.
MonomialBasisCheck monomial_basis_check(const Arrangement& a, const WeightVector& w);

}  // namespace aomoto

#endif
