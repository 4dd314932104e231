#include "aomoto/bases.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace aomoto {

std::string to_string(GatingPredicate p) {
    switch (p) {
        case GatingPredicate::None: return "none";
        case GatingPredicate::Yuzvinsky: return "yuzvinsky";
        case GatingPredicate::Nonresonance: return "nonresonance";
    }
    return "none";
}

namespace {

GatingPredicate evaluate_predicate(const Arrangement& a, const FlatLattice& lattice,
                                   const WeightVector& w) {
    if (check_nonresonance(projective_closure(a), w).ok) return GatingPredicate::Nonresonance;
    if (check_yuzvinsky(a, lattice, w).ok) return GatingPredicate::Yuzvinsky;
    return GatingPredicate::None;
}

/// Dense matrix whose columns are the images of the nbc monomials of A^{r-1}
/// under omega_lambda wedge, i.e. a generating set of the image in A^r.
QMatrix image_matrix(const OSAlgebra& alg, const WeightVector& w) {
    int r = alg.rank();
    AomotoComplex cx = aomoto_complex(alg, w);
    return cx.differentials[r - 1].to_dense();
}

RankCertificate certify(const QMatrix& image, const std::vector<RatVec>& candidates, int dim_top) {
    RankCertificate cert;
    cert.dim_top = dim_top;
    cert.count = candidates.size();
    cert.rank_image = static_cast<int>(rank_fraction_free(image));
    QMatrix augmented = image;
    for (const RatVec& v : candidates) augmented.append_col(v);
    cert.rank_total = static_cast<int>(rank_fraction_free(augmented));
    cert.independent_mod_image =
        cert.rank_total == cert.rank_image + static_cast<int>(cert.count);
    cert.spans = cert.rank_total == cert.dim_top;
    cert.ok = cert.independent_mod_image && cert.spans;
    return cert;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace

CohomologyBasis betanbc_basis(const Arrangement& a, const WeightVector& w) {
    OSAlgebra alg(a);
    int r = alg.rank();
    CohomologyBasis basis;
    basis.predicate = evaluate_predicate(a, alg.lattice(), w);
    basis.betanbc = betanbc_direct(a);
    basis.phi_inverse_sign = (r * (r + 1) / 2) % 2 == 0 ? 1 : -1;

    std::vector<RatVec> vectors;
    for (const IndexSet& b : basis.betanbc) {
        basis.flag_forms_unreduced.push_back(flag_form_unreduced(alg, w, b));
        basis.flag_forms.push_back(flag_form(alg, w, b));
        vectors.push_back(alg.coordinates(basis.flag_forms.back()));
    }
    basis.certificate = certify(image_matrix(alg, w), vectors, alg.dim(r));
    if (basis.predicate != GatingPredicate::None && !basis.certificate.ok)
        throw InconsistencyError(
            "flag-form certificate failed under a satisfied nonresonance predicate");
    return basis;
}

Arrangement reorder_arrangement(const Arrangement& a, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != a.size())
        throw std::invalid_argument("order must be a permutation of 1..n");
    std::set<int> seen(order.begin(), order.end());
    if (static_cast<int>(seen.size()) != a.size() || *seen.begin() != 1 ||
        *seen.rbegin() != a.size())
        throw std::invalid_argument("order must be a permutation of 1..n");
    Arrangement out;
    out.dimension = a.dimension;
    for (std::size_t k = 0; k < order.size(); ++k) {
        Hyperplane h = a.hyperplane(order[k]);
        h.index = static_cast<int>(k) + 1;
        out.hyperplanes.push_back(std::move(h));
    }
    return out;
}

WeightVector reorder_weights(const WeightVector& w, const std::vector<int>& order) {
    WeightVector out;
    for (int i : order) out.lambda.push_back(w.of(i));
    return out;
}

TransitionMatrix transition_matrix(const Arrangement& a, const std::vector<int>& order2,
                                   const std::vector<WeightVector>& samples) {
    if (samples.empty()) throw std::invalid_argument("transition_matrix needs weight samples");
    Arrangement a2 = reorder_arrangement(a, order2);
    OSAlgebra alg1(a);
    OSAlgebra alg2(a2);
    int r = alg1.rank();

    TransitionMatrix result;
    result.order = order2;
    result.source_betanbc = betanbc_direct(a);
    result.target_betanbc = betanbc_direct(a2);
    std::size_t m = result.source_betanbc.size();
    if (result.target_betanbc.size() != m)
        throw InconsistencyError("betanbc cardinality differs between orders");
    if (m == 0) {
        result.matrix = QMatrix(0, 0);
        result.det = 1;
        result.integral = result.unimodular = result.weight_independent = true;
        for (std::size_t s = 0; s < samples.size(); ++s)
            result.sample_hashes.push_back(fnv1a_hex("[]"));
        return result;
    }

    bool first = true;
    for (const WeightVector& w : samples) {
        if (!check_yuzvinsky(a, alg1.lattice(), w).ok)
            throw std::invalid_argument("weight sample fails the gating predicate");
        WeightVector w2 = reorder_weights(w, order2);

        // [image | Xi_1 vectors] in the nbc basis of the original order.
        QMatrix system = image_matrix(alg1, w);
        std::size_t image_cols = system.cols();
        for (const IndexSet& b : result.source_betanbc)
            system.append_col(alg1.coordinates(flag_form(alg1, w, b)));

        QMatrix t(m, m);
        for (std::size_t j = 0; j < m; ++j) {
            // Xi-basis element of the reordered arrangement, relabeled back.
            OSElement xi2 = flag_form(alg2, w2, result.target_betanbc[j]);
            OSElement relabeled;
            relabeled.degree = r;
            for (const auto& [mon, c] : xi2.terms) {
                std::vector<int> word;
                for (int k : mon) word.push_back(order2[k - 1]);
                OSElement reduced = alg1.reduce_monomial(word);
                reduced *= c;
                relabeled += reduced;
            }
            auto sol = solve(system, alg1.coordinates(relabeled));
            if (!sol)
                throw InconsistencyError("Xi form of the reordered basis is not in the span");
            for (std::size_t i = 0; i < m; ++i) t(i, j) = (*sol)[image_cols + i];
        }

        std::ostringstream os;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) os << rat_str(t(i, j)) << (j + 1 < m ? "," : ";");
        result.sample_hashes.push_back(fnv1a_hex(os.str()));

        if (first) {
            result.matrix = std::move(t);
            first = false;
        } else if (!(t == result.matrix)) {
            throw InconsistencyError("transition matrix differs across weight samples");
        }
    }

    result.weight_independent = true;
    result.integral = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!is_integer(result.matrix(i, j))) result.integral = false;
    result.det = determinant(result.matrix);
    result.unimodular = result.det == 1 || result.det == -1;
    if (!result.integral || !result.unimodular)
        throw InconsistencyError("transition matrix is not integral unimodular");
    return result;
}

MonomialBasisCheck monomial_basis_check(const Arrangement& a, const WeightVector& w) {
    OSAlgebra alg(a);
    int r = alg.rank();
    MonomialBasisCheck check;

    std::vector<IndexSet> beta = betanbc_direct(a);
    std::vector<RatVec> vectors;
    for (const IndexSet& b : beta) {
        RatVec unit(alg.dim(r), Rat(0));
        unit[alg.basis_index(r, b)] = 1;
        vectors.push_back(std::move(unit));
    }
    check.certificate = certify(image_matrix(alg, w), vectors, alg.dim(r));
    check.holds = check.certificate.ok;

    if (is_unmixed_order(a).unmixed) check.sufficient_conditions.push_back("unmixed");
    if (r == 2 && admissible_nu(a).nu) check.sufficient_conditions.push_back("rank2-admissible");
    return check;
}

}  // namespace aomoto
