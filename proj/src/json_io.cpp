#include "aomoto/json_io.hpp"

#include <algorithm>
#include <set>

namespace aomoto {

namespace {

Json support_json(const IndexSet& support, int infinity_index) {
    Json arr = Json::array();
    for (int i : support) {
        if (i == infinity_index)
            arr.push_back("inf");
        else
            arr.push_back(i);
    }
    return arr;
}

Json conditions_json(const std::vector<WeightCondition>& cs, int infinity_index) {
    Json arr = Json::array();
    for (const WeightCondition& c : cs) {
        Json cj;
        cj["support"] = support_json(c.support, infinity_index);
        cj["value"] = rat_str(c.value);
        cj["violated"] = c.violated;
        arr.push_back(cj);
    }
    return arr;
}

Json certificate_json(const RankCertificate& cert) {
    Json j;
    j["dim_top"] = cert.dim_top;
    j["rank_image"] = cert.rank_image;
    j["rank_total"] = cert.rank_total;
    j["count"] = cert.count;
    j["independent_mod_image"] = cert.independent_mod_image;
    j["spans"] = cert.spans;
    j["ok"] = cert.ok;
    return j;
}

}  // namespace

Json oselement_to_json(const OSElement& e) {
    Json j;
    j["degree"] = e.degree;
    j["terms"] = Json::array();
    for (const auto& [mon, c] : e.terms) {
        Json t;
        t["monomial"] = mon;
        t["coeff"] = rat_str(c);
        j["terms"].push_back(t);
    }
    return j;
}

Json index_sets_to_json(const std::vector<IndexSet>& sets) {
    Json arr = Json::array();
    for (const IndexSet& s : sets) arr.push_back(s);
    return arr;
}

Json lattice_report(const Arrangement& a) {
    FlatLattice lattice = build_lattice(a);
    Json j;
    j["dimension"] = a.dimension;
    j["rank"] = lattice.rank();
    j["flats"] = Json::array();
    for (const Flat& f : lattice.flats()) {
        Json fj;
        fj["id"] = f.id;
        fj["codim"] = f.codim;
        fj["support"] = f.support;
        Json pt = Json::array();
        for (const Rat& x : f.point) pt.push_back(rat_str(x));
        fj["point"] = pt;
        j["flats"].push_back(fj);
    }
    return j;
}

Json circuits_report(const Arrangement& a) {
    Json j;
    j["circuits"] = index_sets_to_json(circuits(a));
    j["broken_circuits"] = index_sets_to_json(broken_circuits(a));
    return j;
}

Json nbc_report(const Arrangement& a) {
    Json j;
    int r = rank(a);
    j["rank"] = r;
    j["facets"] = index_sets_to_json(nbc_bases(a));
    Json by_degree = Json::array();
    for (int p = 0; p <= r; ++p) by_degree.push_back(index_sets_to_json(nbc_sets(a, p)));
    j["sets_by_size"] = by_degree;
    return j;
}

Json betanbc_report(const Arrangement& a, const std::string& method) {
    std::vector<IndexSet> beta;
    if (method == "direct") {
        beta = betanbc_direct(a);
    } else if (method == "recursive") {
        beta = betanbc_recursive(a);
    } else if (method == "shelling") {
        beta = check_lex_shelling(a).homology_facets;
        std::sort(beta.begin(), beta.end());
    } else {
        throw ParseError("unknown betanbc method: " + method);
    }
    return index_sets_to_json(beta);
}

Json charpoly_report(const Arrangement& a) {
    CharPoly chi = char_poly(a);
    Json j;
    j["degree"] = a.dimension;
    Json coeffs = Json::array();
    for (const Int& c : chi.coeffs) coeffs.push_back(c.get_str());
    j["coefficients"] = coeffs;  // coefficients[k] belongs to t^k
    j["chi_at_1"] = chi.eval(1).get_num().get_str();
    j["beta_invariant"] = beta_count_check(a).get_str();
    return j;
}

Json folkman_report(const Arrangement& a) {
    FlatLattice lattice = build_lattice(a);
    FolkmanComplex f = folkman_complex(lattice);
    Json j;
    j["vertices"] = Json::array();
    for (std::size_t v = 0; v < f.vertex_flat.size(); ++v) {
        const Flat& fl = lattice.flat(f.vertex_flat[v]);
        Json vj;
        vj["vertex"] = v;
        vj["codim"] = fl.codim;
        vj["support"] = fl.support;
        j["vertices"].push_back(vj);
    }
    j["facets"] = Json::array();
    if (f.complex.dim() >= 0)
        for (const auto& s : f.complex.simplices[f.complex.dim()]) j["facets"].push_back(s);
    j["dimension"] = f.complex.dim();
    j["pure"] = f.complex.is_pure();
    return j;
}

Json betti_report(const Arrangement& a) {
    FlatLattice lattice = build_lattice(a);
    BrokenCircuitComplex bc = broken_circuit_complex(a);
    FolkmanComplex f = folkman_complex(lattice);
    std::vector<int> bb = reduced_betti_numbers(bc.complex);
    std::vector<int> fb = reduced_betti_numbers(f.complex);
    Json j;
    j["bc"] = bb;
    j["folkman"] = fb;
    j["agree"] = bb == fb;
    return j;
}

Json osdims_report(const Arrangement& a) {
    OSAlgebra alg(a);
    Json j;
    Json dims = Json::array();
    for (int p = 0; p <= alg.rank(); ++p) dims.push_back(alg.dim(p));
    j["dims"] = dims;
    j["rank"] = alg.rank();
    return j;
}

Json aomoto_report(const Arrangement& a, const WeightVector& w) {
    OSAlgebra alg(a);
    std::vector<int> dims = aomoto_cohomology(alg, w);
    Json j;
    j["dims"] = dims;
    j["yuzvinsky"] = check_yuzvinsky(a, alg.lattice(), w).ok;
    j["betanbc_count"] = betanbc_direct(a).size();
    return j;
}

Json basis_report(const Arrangement& a, const WeightVector& w) {
    CohomologyBasis basis = betanbc_basis(a, w);
    Json j;
    j["predicate"] = to_string(basis.predicate);
    j["betanbc"] = index_sets_to_json(basis.betanbc);
    j["elements"] = Json::array();
    for (std::size_t i = 0; i < basis.betanbc.size(); ++i) {
        Json e;
        e["base"] = basis.betanbc[i];
        e["flag_form_unreduced"] = oselement_to_json(basis.flag_forms_unreduced[i]);
        e["normal_form"] = oselement_to_json(basis.flag_forms[i]);
        j["elements"].push_back(e);
    }
    j["certificate"] = certificate_json(basis.certificate);
    j["phi_inverse_sign"] = basis.phi_inverse_sign;
    return j;
}

Json monomial_check_report(const Arrangement& a, const WeightVector& w) {
    MonomialBasisCheck check = monomial_basis_check(a, w);
    Json j;
    j["holds"] = check.holds;
    j["sufficient_conditions"] = check.sufficient_conditions;
    j["certificate"] = certificate_json(check.certificate);
    j["betanbc"] = index_sets_to_json(betanbc_direct(a));
    return j;
}

Json transition_report(const Arrangement& a, const std::vector<int>& order,
                       const std::vector<WeightVector>& samples) {
    TransitionMatrix t = transition_matrix(a, order, samples);
    Json j;
    j["order"] = t.order;
    j["rows_betanbc"] = index_sets_to_json(t.source_betanbc);
    j["cols_betanbc"] = index_sets_to_json(t.target_betanbc);
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.matrix.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < t.matrix.cols(); ++k) row.push_back(rat_str(t.matrix(i, k)));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    j["det"] = rat_str(t.det);
    j["integral"] = t.integral;
    j["unimodular"] = t.unimodular;
    j["weight_independent"] = t.weight_independent;
    j["samples"] = t.sample_hashes.size();
    j["sample_hashes"] = t.sample_hashes;
    return j;
}

Json dense_report(const Arrangement& a, bool with_infinity) {
    FlatLattice lattice = build_lattice(a);
    Json j;
    j["affine"] = Json::array();
    for (int id : dense_flats_affine(a, lattice)) {
        const Flat& f = lattice.flat(id);
        Json fj;
        fj["support"] = f.support;
        fj["codim"] = f.codim;
        j["affine"].push_back(fj);
    }
    if (with_infinity) {
        ProjectiveClosure pc = projective_closure(a);
        j["at_infinity"] = Json::array();
        for (const InfinityElement& e : dense_at_infinity(pc)) {
            Json ej;
            ej["support"] = support_json(e.support, pc.infinity_index);
            ej["contains_infinity"] = e.contains_infinity;
            ej["at_infinity"] = e.at_infinity;
            j["at_infinity"].push_back(ej);
        }
    }
    return j;
}

Json nonresonance_report(const Arrangement& a, const WeightVector& w, bool paper_example_compat) {
    ProjectiveClosure pc = projective_closure(a);
    ResonanceCheck check = check_nonresonance(pc, w, paper_example_compat);
    Json j;
    j["ok"] = check.ok;
    j["conditions"] = conditions_json(check.conditions, pc.infinity_index);
    j["violations"] = conditions_json(check.violations, pc.infinity_index);
    j["lambda_infinity"] = rat_str(w.lambda_infinity());
    return j;
}

namespace {

struct VerifyRun {
    Json checks = Json::array();
    bool ok = true;

    void record(const std::string& name, bool pass, const std::string& detail = "") {
        Json c;
        c["name"] = name;
        c["status"] = pass ? "pass" : "fail";
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(c);
        ok = ok && pass;
    }
};

bool subspace_contained(const Flat& inner, const Flat& outer) {
    // inner subseteq outer iff every defining equation of outer vanishes on
    // inner's witness point and directions.
    for (const RatVec& row : outer.key.rows) {
        Rat v = -row.back();
        for (std::size_t j = 0; j + 1 < row.size(); ++j) v += row[j] * inner.point[j];
        if (v != 0) return false;
        for (const RatVec& d : inner.directions) {
            Rat s = 0;
            for (std::size_t j = 0; j + 1 < row.size(); ++j) s += row[j] * d[j];
            if (s != 0) return false;
        }
    }
    return true;
}

}  // namespace

VerifyOutcome verify_report(const Arrangement& a, const WeightVector* w,
                            bool paper_example_compat) {
    VerifyRun run;
    OSAlgebra alg(a);
    const FlatLattice& lattice = alg.lattice();
    int r = alg.rank();

    {
        bool graded = true, support_bound = true, roundtrip = true;
        for (const Flat& f : lattice.flats()) {
            if (static_cast<int>(f.support.size()) < f.codim) support_bound = false;
            bool indep = is_independent(a, f.support);
            if (indep != (static_cast<int>(f.support.size()) == f.codim)) support_bound = false;
        }
        for (int x : lattice.maximal_flats())
            if (lattice.flat(x).codim != r) graded = false;
        for (const Flat& x : lattice.flats()) {
            for (const Flat& y : lattice.flats()) {
                bool by_support = lattice.leq(y.id, x.id);
                bool by_subspace = subspace_contained(x, y);
                if (by_support != by_subspace) roundtrip = false;
            }
        }
        run.record("lattice-maximal-flats-rank", graded);
        run.record("lattice-support-independence", support_bound);
        run.record("lattice-order-roundtrip", roundtrip);
    }

    std::vector<IndexSet> cs = circuits(a);
    std::vector<IndexSet> bcs = broken_circuits_of(cs);
    {
        bool ok = true;
        for (const IndexSet& c : cs) {
            IndexSet bc(c.begin() + 1, c.end());
            if (!is_independent(a, bc)) ok = false;
        }
        std::vector<IndexSet> nbc = nbc_bases(a);
        for (const IndexSet& b : nbc)
            for (const IndexSet& bc : bcs)
                if (std::includes(b.begin(), b.end(), bc.begin(), bc.end())) ok = false;
        run.record("broken-circuits-independent-nbc-free", ok);
    }

    std::vector<IndexSet> nbc = nbc_bases(a);
    std::vector<IndexSet> beta = betanbc_direct(a);
    {
        // Lemma "min": a standard base is nbc iff each member is the minimum
        // of the localization of its standard flag.
        bool ok = true;
        std::set<IndexSet> nbc_set(nbc.begin(), nbc.end());
        std::vector<int> idx(r, 0);
        std::vector<IndexSet> all_bases;
        IndexSet cur;
        auto rec = [&](auto&& self, int next) -> void {
            if (static_cast<int>(cur.size()) == r) {
                if (is_base_set(a, r, cur)) all_bases.push_back(cur);
                return;
            }
            for (int j = next; j <= a.size(); ++j) {
                cur.push_back(j);
                self(self, j + 1);
                cur.pop_back();
            }
        };
        rec(rec, 1);
        for (const IndexSet& b : all_bases) {
            bool min_property = true;
            for (int p = 0; p < r; ++p) {
                IndexSet tail(b.begin() + p, b.end());
                auto id = lattice.flat_of(tail);
                if (!id || lattice.flat(*id).support.front() != b[p]) {
                    min_property = false;
                    break;
                }
            }
            if (min_property != (nbc_set.count(b) > 0)) ok = false;
        }
        run.record("nbc-standard-flag-min-lemma", ok);
    }

    {
        std::vector<IndexSet> rec = betanbc_recursive(a);
        run.record("betanbc-direct-equals-recursive", rec == beta);
        bool subset = std::includes(nbc.begin(), nbc.end(), beta.begin(), beta.end());
        run.record("betanbc-subset-of-nbc", subset);
        Int expected = beta_count_check(a);
        run.record("betanbc-count-equals-beta-invariant",
                   Int(static_cast<long>(beta.size())) == expected,
                   "count=" + std::to_string(beta.size()) + " beta=" + expected.get_str());
    }

    BrokenCircuitComplex bc = broken_circuit_complex(a);
    FolkmanComplex f = folkman_complex(lattice);
    {
        run.record("bc-pure-dimension",
                   bc.complex.is_pure() && bc.complex.dim() == r - 1);
        run.record("folkman-pure-dimension",
                   f.complex.is_pure() && f.complex.dim() == r - 1);
        bool dd = true;
        for (const SimplicialComplex* k : {&bc.complex, &f.complex}) {
            for (int q = -1; q < k->dim(); ++q) {
                QMatrix a1 = coboundary(*k, q);
                QMatrix a2 = coboundary(*k, q + 1);
                QMatrix prod(a2.rows(), a1.cols());
                for (std::size_t i = 0; i < a2.rows(); ++i)
                    for (std::size_t j = 0; j < a1.cols(); ++j) {
                        Rat s = 0;
                        for (std::size_t k2 = 0; k2 < a2.cols(); ++k2) s += a2(i, k2) * a1(k2, j);
                        if (s != 0) dd = false;
                    }
            }
        }
        run.record("delta-squared-zero", dd);
        std::vector<int> bb = reduced_betti_numbers(bc.complex);
        std::vector<int> fb = reduced_betti_numbers(f.complex);
        run.record("betti-bc-equals-folkman", bb == fb);
        bool vanish = true;
        for (int q = 0; q + 1 < r; ++q)
            if (bb[q] != 0) vanish = false;
        run.record("bc-cohomology-vanishing-below-top", vanish);
        run.record("bc-top-cohomology-counts-betanbc",
                   bb[r - 1] == static_cast<int>(beta.size()));
    }

    {
        ShellingReport sh = check_lex_shelling(a);
        std::vector<IndexSet> hf = sh.homology_facets;
        std::sort(hf.begin(), hf.end());
        run.record("lex-shelling-valid", sh.is_shelling);
        run.record("homology-facets-are-betanbc", hf == beta);
    }

    {
        PiMap pi = pi_map(lattice, bc, f);
        run.record("pi-simplicial", pi.simplicial);
        bool pullback_ok = pi.simplicial;
        if (pi.simplicial) {
            for (std::size_t j = 0; j < bc.facets.size() && pullback_ok; ++j) {
                std::size_t expected_row = flag_simplex_index(f, lattice, bc.facets[j]);
                for (std::size_t i = 0; i < pi.top_pullback.rows(); ++i) {
                    Rat want = (i == expected_row) ? 1 : 0;
                    if (pi.top_pullback(i, j) != want) pullback_ok = false;
                }
            }
        }
        run.record("pi-pullback-sends-duals-to-flag-duals", pullback_ok);

        std::set<Flag> flags;
        for (const IndexSet& b : nbc) flags.insert(flag_of_base(lattice, b));
        run.record("flag-map-injective-on-nbc", flags.size() == nbc.size());
    }

    {
        FlagBasisReport fb = verify_flag_basis(a);
        run.record("flag-duals-basis-of-folkman-cohomology", fb.ok);
    }

    {
        bool anti = true;
        for (int i = 1; i <= a.size() && anti; ++i) {
            OSElement sq = alg.reduce_monomial({i, i});
            if (!sq.is_zero()) anti = false;
            for (int j = i + 1; j <= a.size() && anti; ++j) {
                OSElement ij = alg.reduce_monomial({i, j});
                OSElement ji = alg.reduce_monomial({j, i});
                ji *= Rat(-1);
                if (!(ij == ji)) anti = false;
            }
        }
        run.record("os-exterior-relations", anti);
    }

    if (w) {
        ProjectiveClosure pc = projective_closure(a);
        ResonanceCheck yuz = check_yuzvinsky(a, lattice, *w);
        ResonanceCheck nonres = check_nonresonance(pc, *w, paper_example_compat);
        run.record("nonresonance-implies-yuzvinsky", !nonres.ok || yuz.ok);

        AomotoComplex cx = aomoto_complex(alg, *w);
        bool dd = true;
        for (int p = 0; p + 1 < r; ++p) {
            QMatrix m1 = cx.differentials[p].to_dense();
            QMatrix m2 = cx.differentials[p + 1].to_dense();
            for (std::size_t i = 0; i < m2.rows(); ++i)
                for (std::size_t j = 0; j < m1.cols(); ++j) {
                    Rat s = 0;
                    for (std::size_t k = 0; k < m2.cols(); ++k) s += m2(i, k) * m1(k, j);
                    if (s != 0) dd = false;
                }
        }
        run.record("aomoto-differential-squares-to-zero", dd);

        bool xi_ups = true;
        for (const IndexSet& b : nbc) {
            RatVec dual(f.complex.simplices[r - 1].size(), Rat(0));
            dual[flag_simplex_index(f, lattice, b)] = 1;
            if (!(upsilon(alg, *w, f, dual) == flag_form(alg, *w, b))) xi_ups = false;
        }
        run.record("flag-form-equals-upsilon-of-flag-dual", xi_ups);

        if (yuz.ok) {
            std::vector<int> dims = aomoto_cohomology(alg, *w);
            bool vanish = true;
            for (int q = 0; q < r; ++q)
                if (dims[q] != 0) vanish = false;
            run.record("aomoto-vanishing-below-top", vanish);
            run.record("aomoto-top-dimension-counts-betanbc",
                       dims[r] == static_cast<int>(beta.size()));

            QMatrix image = cx.differentials[r - 1].to_dense();
            bool upsdelta = true;
            QMatrix delta = coboundary(f.complex, r - 2);
            for (std::size_t j = 0; j < delta.cols() && upsdelta; ++j) {
                RatVec image_cochain(delta.rows());
                for (std::size_t i = 0; i < delta.rows(); ++i) image_cochain[i] = delta(i, j);
                OSElement u = upsilon(alg, *w, f, image_cochain);
                if (!in_column_span(image, alg.coordinates(u))) upsdelta = false;
            }
            run.record("upsilon-of-coboundary-in-image", upsdelta);

            CohomologyBasis basis = betanbc_basis(a, *w);
            run.record("flag-form-basis-certificate", basis.certificate.ok);

            bool support_localized = true;
            for (std::size_t i = 0; i < basis.betanbc.size(); ++i) {
                auto x = lattice.flat_of(basis.betanbc[i]);
                for (const auto& [mon, c] : basis.flag_forms[i].terms)
                    if (lattice.flat_of(mon) != x) support_localized = false;
            }
            run.record("flag-form-supported-on-its-flat", support_localized);

            // {Xi(B) : B in nbc} is a basis of A^r under the gate.
            QMatrix xi_all(alg.dim(r), nbc.size());
            for (std::size_t j = 0; j < nbc.size(); ++j) {
                RatVec v = alg.coordinates(flag_form(alg, *w, nbc[j]));
                for (std::size_t i = 0; i < v.size(); ++i) xi_all(i, j) = v[i];
            }
            bool nbc_xi_basis = nbc.size() == static_cast<std::size_t>(alg.dim(r)) &&
                                determinant(xi_all) != 0;
            run.record("nbc-flag-forms-basis-of-top-degree", nbc_xi_basis);

            MonomialBasisCheck mono = monomial_basis_check(a, *w);
            bool consistent = true;
            if (!mono.sufficient_conditions.empty() && !mono.holds) consistent = false;
            run.record("monomial-criteria-consistent", consistent);
        }
    }

    VerifyOutcome outcome;
    outcome.ok = run.ok;
    outcome.report["ok"] = run.ok;
    outcome.report["checks"] = run.checks;
    outcome.report["rank"] = r;
    outcome.report["n"] = a.size();
    return outcome;
}

}  // namespace aomoto
