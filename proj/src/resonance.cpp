#include "aomoto/resonance.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace aomoto {

namespace {

std::size_t vectors_rank(const std::vector<RatVec>& vecs, const std::vector<int>& pick) {
    if (pick.empty()) return 0;
    QMatrix m(pick.size(), vecs[0].size());
    for (std::size_t i = 0; i < pick.size(); ++i)
        for (std::size_t j = 0; j < vecs[0].size(); ++j) m(i, j) = vecs[pick[i]][j];
    return rank(m);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

bool localization_connected(const std::vector<RatVec>& vecs) {
    int m = static_cast<int>(vecs.size());
    if (m <= 1) return true;  // singletons are dense by convention

    // Circuits of the linear matroid on the coefficient vectors, found level
    // by level; union-find over circuit membership decides connectivity.
    UnionFind uf(m);
    std::set<std::vector<int>> independent;
    independent.insert(std::vector<int>{});
    for (int k = 1; !independent.empty(); ++k) {
        std::set<std::vector<int>> next;
        for (const auto& t : independent) {
            int lo = t.empty() ? 0 : t.back() + 1;
            for (int j = lo; j < m; ++j) {
                std::vector<int> s = t;
                s.push_back(j);
                bool all_indep = true;
                for (int drop = 0; drop + 1 < k && all_indep; ++drop) {
                    std::vector<int> sub;
                    for (int q = 0; q < k; ++q)
                        if (q != drop) sub.push_back(s[q]);
                    all_indep = independent.count(sub) > 0;
                }
                if (!all_indep) continue;
                if (vectors_rank(vecs, s) == s.size())
                    next.insert(std::move(s));
                else
                    for (std::size_t q = 1; q < s.size(); ++q) uf.unite(s[0], s[q]);
            }
        }
        independent = std::move(next);
    }
    for (int i = 1; i < m; ++i)
        if (uf.find(i) != uf.find(0)) return false;
    return true;
}

namespace {

bool flat_is_dense(const Arrangement& a, const Flat& f) {
    std::vector<RatVec> vecs;
    for (int i : f.support) vecs.push_back(a.hyperplane(i).coeffs);
    return localization_connected(vecs);
}

}  // namespace

std::vector<int> dense_flats_affine(const Arrangement& a, const FlatLattice& lattice) {
    std::vector<int> out;
    for (const Flat& f : lattice.flats()) {
        if (f.codim == 0) continue;
        if (flat_is_dense(a, f)) out.push_back(f.id);
    }
    return out;
}

std::vector<InfinityElement> dense_at_infinity(const ProjectiveClosure& pc) {
    std::vector<InfinityElement> out;
    for (const Flat& f : pc.lattice.flats()) {
        if (f.codim == 0) continue;                       // P^l itself
        if (f.directions.empty()) continue;               // the origin: empty projective set
        if (!flat_is_dense(pc.cone, f)) continue;
        InfinityElement e;
        e.cone_flat_id = f.id;
        e.support = f.support;
        e.contains_infinity =
            std::binary_search(f.support.begin(), f.support.end(), pc.infinity_index);
        e.at_infinity = !cone_flat_to_affine_key(pc, f.id).has_value();
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

void sort_conditions(std::vector<WeightCondition>& cs) {
    std::sort(cs.begin(), cs.end(), [](const WeightCondition& a, const WeightCondition& b) {
        if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
        return a.support < b.support;
    });
}

}  // namespace

ResonanceCheck check_yuzvinsky(const Arrangement& a, const FlatLattice& lattice,
                               const WeightVector& w) {
    ResonanceCheck check;
    for (int id : dense_flats_affine(a, lattice)) {
        WeightCondition c;
        c.support = lattice.flat(id).support;
        c.value = 0;
        for (int i : c.support) c.value += w.of(i);
        c.violated = c.value == 0;
        if (c.violated) {
            check.ok = false;
            check.violations.push_back(c);
        }
        check.conditions.push_back(std::move(c));
    }
    sort_conditions(check.conditions);
    sort_conditions(check.violations);
    return check;
}

ResonanceCheck check_nonresonance(const ProjectiveClosure& pc, const WeightVector& w,
                                  bool paper_example_compat) {
    ResonanceCheck check;
    Rat linf = w.lambda_infinity();
    for (const InfinityElement& e : dense_at_infinity(pc)) {
        if (paper_example_compat && e.support == IndexSet{pc.infinity_index}) continue;
        WeightCondition c;
        c.support = e.support;
        c.value = 0;
        for (int i : e.support) c.value += (i == pc.infinity_index) ? linf : w.of(i);
        c.violated = is_nonnegative_integer(c.value);
        if (c.violated) {
            check.ok = false;
            check.violations.push_back(c);
        }
        check.conditions.push_back(std::move(c));
    }
    sort_conditions(check.conditions);
    sort_conditions(check.violations);
    return check;
}

}  // namespace aomoto
