#include "aomoto/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace aomoto {

bool has_nonempty_intersection(const Arrangement& a, const IndexSet& s) {
    return subset_rank(a, s).has_value();
}

bool is_independent(const Arrangement& a, const IndexSet& s) {
    auto r = subset_rank(a, s);
    return r.has_value() && *r == static_cast<int>(s.size());
}

bool is_base_set(const Arrangement& a, int rank, const IndexSet& s) {
    auto r = subset_rank(a, s);
    return r.has_value() && *r == rank;
}

std::vector<IndexSet> circuits(const Arrangement& a) {
    int n = a.size();
    // Level-by-level: a k-set all of whose (k-1)-subsets are independent is
    // either independent, a circuit, or has empty intersection (and then so
    // does every superset, so it is dropped).
    std::set<IndexSet> independent;
    independent.insert(IndexSet{});
    std::vector<IndexSet> result;
    for (int k = 1; !independent.empty(); ++k) {
        std::set<IndexSet> next;
        for (const IndexSet& t : independent) {
            int lo = t.empty() ? 1 : t.back() + 1;
            for (int j = lo; j <= n; ++j) {
                IndexSet s = t;
                s.push_back(j);
                bool all_indep = true;
                for (int drop = 0; drop + 1 < k && all_indep; ++drop) {
                    IndexSet sub;
                    for (int m = 0; m < k; ++m)
                        if (m != drop) sub.push_back(s[m]);
                    all_indep = independent.count(sub) > 0;
                }
                if (!all_indep) continue;
                auto r = subset_rank(a, s);
                if (!r) continue;
                if (*r == k)
                    next.insert(std::move(s));
                else
                    result.push_back(std::move(s));
            }
        }
        independent = std::move(next);
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<IndexSet> broken_circuits_of(const std::vector<IndexSet>& cs) {
    std::set<IndexSet> bcs;
    for (const IndexSet& c : cs) bcs.insert(IndexSet(c.begin() + 1, c.end()));
    return {bcs.begin(), bcs.end()};
}

std::vector<IndexSet> broken_circuits(const Arrangement& a) {
    return broken_circuits_of(circuits(a));
}

namespace {

bool contains_subset(const IndexSet& s, const IndexSet& sub) {
    return std::includes(s.begin(), s.end(), sub.begin(), sub.end());
}

void nbc_dfs(const Arrangement& a, const std::vector<IndexSet>& bcs, int p, IndexSet& cur,
             int next, std::vector<IndexSet>& out) {
    if (static_cast<int>(cur.size()) == p) {
        out.push_back(cur);
        return;
    }
    for (int j = next; j <= a.size(); ++j) {
        cur.push_back(j);
        bool ok = has_nonempty_intersection(a, cur);
        for (std::size_t b = 0; ok && b < bcs.size(); ++b)
            if (bcs[b].back() == j && contains_subset(cur, bcs[b])) ok = false;
        if (ok) nbc_dfs(a, bcs, p, cur, j + 1, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<IndexSet> nbc_sets(const Arrangement& a, int p) {
    if (p == 0) return {IndexSet{}};
    std::vector<IndexSet> bcs = broken_circuits(a);
    std::vector<IndexSet> out;
    IndexSet cur;
    nbc_dfs(a, bcs, p, cur, 1, out);
    return out;
}

std::vector<IndexSet> nbc_bases(const Arrangement& a) { return nbc_sets(a, rank(a)); }

std::vector<IndexSet> betanbc_direct(const Arrangement& a) {
    int r = rank(a);
    std::vector<IndexSet> out;
    for (const IndexSet& b : nbc_bases(a)) {
        bool all_exchange = true;
        for (std::size_t k = 0; k < b.size() && all_exchange; ++k) {
            bool found = false;
            for (int h2 = 1; h2 < b[k] && !found; ++h2) {
                if (std::binary_search(b.begin(), b.end(), h2)) continue;
                IndexSet swapped;
                for (std::size_t m = 0; m < b.size(); ++m)
                    if (m != k) swapped.push_back(b[m]);
                swapped.push_back(h2);
                std::sort(swapped.begin(), swapped.end());
                found = is_base_set(a, r, swapped);
            }
            all_exchange = found;
        }
        if (all_exchange) out.push_back(b);
    }
    return out;
}

std::vector<IndexSet> betanbc_recursive(const Arrangement& a) {
    if (a.hyperplanes.empty()) return {};
    int r = rank(a);
    if (r == 1) {
        std::vector<IndexSet> out;
        for (int i = 2; i <= a.size(); ++i) out.push_back({i});
        return out;
    }
    int n = a.size();
    if (is_separator(a, n)) return {};
    Triple t = triple(a, n);
    std::vector<IndexSet> out = betanbc_recursive(t.deleted);  // indices 1..n-1 match a
    for (const IndexSet& b2 : betanbc_recursive(t.restricted)) {
        IndexSet mapped;
        for (int i : b2) mapped.push_back(t.nu[i - 1]);
        mapped.push_back(n);
        std::sort(mapped.begin(), mapped.end());
        out.push_back(std::move(mapped));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat CharPoly::eval(const Rat& t) const {
    Rat acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + Rat(coeffs[k]);
    return acc;
}

CharPoly char_poly(const Arrangement& a) {
    FlatLattice lattice = build_lattice(a);
    const auto& flats = lattice.flats();
    std::vector<Int> mu(flats.size());
    for (std::size_t x = 0; x < flats.size(); ++x) {
        // Flats are sorted by codim, so all Y < X precede X.
        Int acc = x == 0 ? Int(1) : Int(0);
        for (std::size_t y = 0; y < x; ++y)
            if (lattice.leq(static_cast<int>(y), static_cast<int>(x))) acc -= mu[y];
        mu[x] = acc;
    }
    CharPoly chi;
    chi.coeffs.assign(a.dimension + 1, Int(0));
    for (std::size_t x = 0; x < flats.size(); ++x)
        chi.coeffs[a.dimension - flats[x].codim] += mu[x];
    return chi;
}

Int beta_count_check(const Arrangement& a) {
    int r = rank(a);
    Rat v = char_poly(a).eval(1);
    assert(v.get_den() == 1);
    Int result = v.get_num();
    if (r % 2 != 0) result = -result;
    return result;
}

UnmixedReport is_unmixed_order(const Arrangement& a) {
    FlatLattice lattice = build_lattice(a);
    std::vector<IndexSet> nbc = nbc_bases(a);
    std::vector<IndexSet> beta = betanbc_direct(a);
    std::set<IndexSet> beta_set(beta.begin(), beta.end());

    std::map<int, std::vector<IndexSet>> by_flat;
    for (const IndexSet& b : nbc) {
        auto id = lattice.flat_of(b);
        assert(id.has_value());
        by_flat[*id].push_back(b);
    }
    UnmixedReport report;
    for (int x : lattice.maximal_flats()) {
        UnmixedReport::Entry e;
        e.flat_support = lattice.flat(x).support;
        e.nbc_x = by_flat.count(x) ? by_flat[x] : std::vector<IndexSet>{};
        std::size_t inside = 0;
        for (const IndexSet& b : e.nbc_x)
            if (beta_set.count(b)) ++inside;
        if (inside == 0)
            e.cls = UnmixedReport::Classification::Disjoint;
        else if (inside == e.nbc_x.size())
            e.cls = UnmixedReport::Classification::Inside;
        else {
            e.cls = UnmixedReport::Classification::Mixed;
            report.unmixed = false;
        }
        report.per_flat.push_back(std::move(e));
    }
    return report;
}

namespace {

bool parallel(const Hyperplane& h, const Hyperplane& k) {
    // Proportional coefficient vectors, constants ignored.
    std::size_t n = h.coeffs.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (h.coeffs[i] * k.coeffs[j] != h.coeffs[j] * k.coeffs[i]) return false;
    return true;
}

}  // namespace

AdmissibleReport admissible_nu(const Arrangement& a) {
    AdmissibleReport report;
    int n = a.size();
    int nu = 2;
    while (nu <= n && parallel(a.hyperplane(1), a.hyperplane(nu))) ++nu;
    for (int i = nu + 1; i <= n; ++i)
        if (parallel(a.hyperplane(1), a.hyperplane(i))) return report;  // not admissible
    report.nu = nu;
    if (rank(a) == 2) {
        for (const IndexSet& b : nbc_bases(a))
            if (b[0] > 1 && b[1] != nu) report.predicted_betanbc.push_back(b);
    }
    return report;
}

std::vector<IndexSet> supersolvable_betanbc(const Arrangement& a,
                                            const std::vector<IndexSet>& blocks) {
    int n = a.size();
    int r = rank(a);
    if (static_cast<int>(blocks.size()) != r)
        throw std::invalid_argument("filtration must have exactly rank-many blocks");
    std::vector<int> flat_list;
    for (const IndexSet& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty block in filtration");
        flat_list.insert(flat_list.end(), b.begin(), b.end());
    }
    IndexSet sorted = flat_list;
    std::sort(sorted.begin(), sorted.end());
    IndexSet everything;
    for (int i = 1; i <= n; ++i) everything.push_back(i);
    if (sorted != everything) throw std::invalid_argument("blocks must partition the arrangement");
    for (std::size_t i = 0; i + 1 < flat_list.size(); ++i)
        if (flat_list[i] >= flat_list[i + 1])
            throw std::invalid_argument("linear order must list each block before the next");

    // rank(A_p) == p and the modular condition for every pair in A_p.
    IndexSet prefix;
    for (int p = 1; p <= r; ++p) {
        IndexSet prev = prefix;
        prefix.insert(prefix.end(), blocks[p - 1].begin(), blocks[p - 1].end());
        Arrangement ap;
        ap.dimension = a.dimension;
        for (int i : prefix) {
            Hyperplane h = a.hyperplane(i);
            h.index = static_cast<int>(ap.hyperplanes.size()) + 1;
            ap.hyperplanes.push_back(std::move(h));
        }
        if (rank(ap) != p) throw std::invalid_argument("filtration block " + std::to_string(p) +
                                                       " does not have rank " + std::to_string(p));
        for (std::size_t x = 0; x < prefix.size(); ++x) {
            for (std::size_t y = x + 1; y < prefix.size(); ++y) {
                IndexSet pair{prefix[x], prefix[y]};
                std::sort(pair.begin(), pair.end());
                auto pr = subset_rank(a, pair);
                if (!pr) continue;
                bool witnessed = false;
                for (int h2 : prev) {
                    IndexSet with{pair[0], pair[1], h2};
                    std::sort(with.begin(), with.end());
                    auto wr = subset_rank(a, with);
                    if (wr && *wr == *pr) {
                        witnessed = true;
                        break;
                    }
                }
                if (!witnessed)
                    throw std::invalid_argument("modularity fails at level " + std::to_string(p));
            }
        }
    }

    std::vector<IndexSet> out;
    IndexSet cur;
    auto rec = [&](auto&& self, std::size_t p) -> void {
        if (p == blocks.size()) {
            out.push_back(cur);
            return;
        }
        const IndexSet& blk = blocks[p];
        int mn = *std::min_element(blk.begin(), blk.end());
        for (int i : blk) {
            if (i == mn) continue;
            cur.push_back(i);
            self(self, p + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    for (IndexSet& b : out) std::sort(b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace aomoto
