#include "aomoto/complexes.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace aomoto {

bool SimplicialComplex::is_pure() const {
    if (simplices.empty()) return true;
    int d = dim();
    // Every simplex must be a face of some d-simplex.
    for (int q = 0; q < d; ++q) {
        for (const auto& s : simplices[q]) {
            bool covered = false;
            for (const auto& top : simplices[d])
                if (std::includes(top.begin(), top.end(), s.begin(), s.end())) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
    }
    return true;
}

bool SimplicialComplex::has_simplex(const std::vector<int>& s) const {
    if (s.empty()) return true;
    int d = static_cast<int>(s.size()) - 1;
    if (d >= static_cast<int>(simplices.size())) return false;
    return std::binary_search(simplices[d].begin(), simplices[d].end(), s);
}

SimplicialComplex SimplicialComplex::from_simplex_family(
    int vertex_count, const std::vector<std::vector<int>>& family) {
    SimplicialComplex k;
    k.vertex_count = vertex_count;
    std::set<std::vector<int>> closed;
    // Downward closure.
    std::vector<std::vector<int>> stack = family;
    while (!stack.empty()) {
        std::vector<int> s = std::move(stack.back());
        stack.pop_back();
        if (s.empty() || closed.count(s)) continue;
        closed.insert(s);
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> face;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            if (!face.empty() && !closed.count(face)) stack.push_back(std::move(face));
        }
    }
    for (const auto& s : closed) {
        int d = static_cast<int>(s.size()) - 1;
        if (d >= static_cast<int>(k.simplices.size())) k.simplices.resize(d + 1);
        k.simplices[d].push_back(s);
    }
    for (auto& level : k.simplices) std::sort(level.begin(), level.end());
    return k;
}

QMatrix coboundary(const SimplicialComplex& k, int q) {
    auto count = [&](int d) -> std::size_t {
        if (d == -1) return 1;
        if (d < 0 || d > k.dim()) return 0;
        return k.simplices[d].size();
    };
    QMatrix m(count(q + 1), count(q));
    if (q == -1) {
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, 0) = 1;
        return m;
    }
    if (q < -1 || q + 1 > k.dim()) return m;
    std::map<std::vector<int>, std::size_t> col_index;
    for (std::size_t j = 0; j < k.simplices[q].size(); ++j) col_index[k.simplices[q][j]] = j;
    for (std::size_t i = 0; i < k.simplices[q + 1].size(); ++i) {
        const auto& s = k.simplices[q + 1][i];
        for (std::size_t v = 0; v < s.size(); ++v) {
            std::vector<int> face;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != v) face.push_back(s[j]);
            auto it = col_index.find(face);
            assert(it != col_index.end());
            m(i, it->second) = (v % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

CohomologyResult reduced_cohomology(const SimplicialComplex& k, int q) {
    CohomologyResult res;
    if (q < 0 || q > k.dim()) return res;
    QMatrix up = coboundary(k, q);        // C^q -> C^{q+1}
    QMatrix down = coboundary(k, q - 1);  // C^{q-1} -> C^q
    std::size_t cq = k.simplices[q].size();
    std::size_t rk_up = rank(up);
    std::size_t rk_down = rank(down);
    res.dimension = static_cast<int>(cq - rk_up - rk_down);

    // Representatives: kernel vectors of delta_q extending the image basis.
    QMatrix ker = nullspace(up);
    QMatrix span(cq, 0);
    for (std::size_t j = 0; j < down.cols(); ++j) {
        RatVec col(cq);
        for (std::size_t i = 0; i < cq; ++i) col[i] = down(i, j);
        span.append_col(col);
    }
    std::size_t base_rank = rank(span);
    for (std::size_t j = 0; j < ker.cols() && res.representatives.size() <
                                                  static_cast<std::size_t>(res.dimension);
         ++j) {
        RatVec col(cq);
        for (std::size_t i = 0; i < cq; ++i) col[i] = ker(i, j);
        QMatrix trial = span;
        trial.append_col(col);
        if (rank(trial) > base_rank) {
            span = std::move(trial);
            ++base_rank;
            res.representatives.push_back(std::move(col));
        }
    }
    assert(res.representatives.size() == static_cast<std::size_t>(res.dimension));
    return res;
}

std::vector<int> reduced_betti_numbers(const SimplicialComplex& k) {
    std::vector<int> betti;
    for (int q = 0; q <= k.dim(); ++q) betti.push_back(reduced_cohomology(k, q).dimension);
    return betti;
}

BrokenCircuitComplex broken_circuit_complex(const Arrangement& a) {
    BrokenCircuitComplex bc;
    bc.facets = nbc_bases(a);
    // All nbc sets, not just the facets: purity is a theorem we verify, not
    // an assumption baked into the construction.
    std::vector<std::vector<int>> family;
    for (int p = 1; p <= rank(a); ++p)
        for (const IndexSet& s : nbc_sets(a, p)) {
            std::vector<int> verts;
            for (int i : s) verts.push_back(i - 1);
            family.push_back(std::move(verts));
        }
    bc.complex = SimplicialComplex::from_simplex_family(a.size(), family);
    bc.complex.vertex_labels.clear();
    for (int i = 1; i <= a.size(); ++i) bc.complex.vertex_labels.push_back(a.hyperplane(i).label);
    return bc;
}

FolkmanComplex folkman_complex(const FlatLattice& lattice) {
    FolkmanComplex f;
    // Vertex order: codim descending, then canonical flat key. A chain listed
    // in this order is exactly (X_1 > ... > X_p).
    std::vector<int> order;
    for (const Flat& fl : lattice.flats())
        if (fl.codim > 0) order.push_back(fl.id);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const Flat& fx = lattice.flat(x);
        const Flat& fy = lattice.flat(y);
        if (fx.codim != fy.codim) return fx.codim > fy.codim;
        return fx.key < fy.key;
    });
    for (std::size_t v = 0; v < order.size(); ++v) {
        f.vertex_flat.push_back(order[v]);
        f.flat_vertex[order[v]] = static_cast<int>(v);
    }

    // Chains = sets of pairwise comparable flats.
    int nv = static_cast<int>(order.size());
    std::vector<std::vector<bool>> comparable(nv, std::vector<bool>(nv, false));
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y)
            if (x != y)
                comparable[x][y] = lattice.leq(order[x], order[y]) || lattice.leq(order[y], order[x]);

    std::vector<std::vector<int>> family;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int next) -> void {
        if (!cur.empty()) family.push_back(cur);
        for (int v = next; v < nv; ++v) {
            bool ok = true;
            for (int u : cur)
                if (!comparable[u][v]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);

    f.complex = SimplicialComplex::from_simplex_family(nv, family);
    for (int v = 0; v < nv; ++v) {
        const Flat& fl = lattice.flat(order[v]);
        std::string label = "{";
        for (std::size_t i = 0; i < fl.support.size(); ++i)
            label += (i ? "," : "") + std::to_string(fl.support[i]);
        label += "}";
        f.complex.vertex_labels.push_back(label);
    }
    return f;
}

namespace {

// Proper faces of s (including the empty face) shared with an earlier facet.
bool shared_with_earlier(const std::vector<IndexSet>& facets, std::size_t k, const IndexSet& face) {
    for (std::size_t j = 0; j < k; ++j)
        if (std::includes(facets[j].begin(), facets[j].end(), face.begin(), face.end()))
            return true;
    return false;
}

}  // namespace

ShellingReport check_lex_shelling(const Arrangement& a) {
    ShellingReport report;
    std::vector<IndexSet> facets = nbc_bases(a);  // lexicographic order
    for (std::size_t k = 0; k < facets.size(); ++k) {
        const IndexSet& s = facets[k];
        if (k == 0) continue;  // condition vacuous for the first facet

        std::vector<IndexSet> wall;  // shared codim-1 faces of s
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            IndexSet face;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != drop) face.push_back(s[j]);
            if (shared_with_earlier(facets, k, face)) wall.push_back(std::move(face));
        }
        if (wall.empty()) {
            report.is_shelling = false;
            report.violating_facet = s;
            break;
        }
        // Every shared proper face must lie under some shared wall face.
        std::size_t subsets = std::size_t(1) << s.size();
        bool good = true;
        for (std::size_t mask = 0; mask + 1 < subsets && good; ++mask) {
            IndexSet face;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (mask & (std::size_t(1) << j)) face.push_back(s[j]);
            if (!shared_with_earlier(facets, k, face)) continue;
            bool covered = false;
            for (const IndexSet& w : wall)
                if (std::includes(w.begin(), w.end(), face.begin(), face.end())) {
                    covered = true;
                    break;
                }
            good = covered;
        }
        if (!good) {
            report.is_shelling = false;
            report.violating_facet = s;
            break;
        }
        if (wall.size() == s.size()) report.homology_facets.push_back(s);
    }
    return report;
}

Flag flag_of_base(const FlatLattice& lattice, const IndexSet& b) {
    int r = lattice.rank();
    if (static_cast<int>(b.size()) != r) throw std::invalid_argument("tuple size differs from rank");
    Flag flag;
    for (int p = 0; p < r; ++p) {
        IndexSet tail(b.begin() + p, b.end());
        auto id = lattice.flat_of(tail);
        if (!id) throw std::invalid_argument("tuple is not a base (empty intersection)");
        if (lattice.flat(*id).codim != r - p)
            throw std::invalid_argument("tuple is not a base (dependent)");
        flag.push_back(*id);
    }
    return flag;
}

PiMap pi_map(const FlatLattice& lattice, const BrokenCircuitComplex& bc,
             const FolkmanComplex& f) {
    PiMap pi;
    int nv = static_cast<int>(f.vertex_flat.size());
    for (int v = 0; v < nv; ++v) {
        const Flat& fl = lattice.flat(f.vertex_flat[v]);
        pi.vertex_map.push_back(fl.support.front() - 1);  // min(A_X) as BC vertex
    }
    // Simpliciality: images of chains are nbc sets.
    for (const auto& level : f.complex.simplices) {
        for (const auto& s : level) {
            std::set<int> image;
            for (int v : s) image.insert(pi.vertex_map[v]);
            std::vector<int> img(image.begin(), image.end());
            if (!bc.complex.has_simplex(img)) {
                pi.simplicial = false;
                return pi;
            }
        }
    }
    if (f.complex.dim() < 0) return pi;
    pi.f_top = f.complex.simplices[f.complex.dim()];
    pi.top_pullback = QMatrix(pi.f_top.size(), bc.facets.size());
    std::map<IndexSet, std::size_t> facet_index;
    for (std::size_t j = 0; j < bc.facets.size(); ++j) facet_index[bc.facets[j]] = j;
    for (std::size_t i = 0; i < pi.f_top.size(); ++i) {
        IndexSet image;
        bool degenerate = false;
        for (int v : pi.f_top[i]) {
            int h = pi.vertex_map[v] + 1;
            if (!image.empty() && image.back() == h) {
                degenerate = true;
                break;
            }
            // The F vertex order makes min-support images weakly ascending.
            assert(image.empty() || image.back() < h);
            image.push_back(h);
        }
        if (degenerate) continue;
        auto it = facet_index.find(image);
        if (it != facet_index.end()) pi.top_pullback(i, it->second) = 1;
    }
    return pi;
}

std::size_t flag_simplex_index(const FolkmanComplex& f, const FlatLattice& lattice,
                               const IndexSet& b) {
    Flag flag = flag_of_base(lattice, b);
    std::vector<int> verts;
    for (int id : flag) verts.push_back(f.flat_vertex.at(id));
    std::sort(verts.begin(), verts.end());
    const auto& top = f.complex.simplices[f.complex.dim()];
    auto it = std::lower_bound(top.begin(), top.end(), verts);
    assert(it != top.end() && *it == verts);
    return static_cast<std::size_t>(it - top.begin());
}

FlagBasisReport verify_flag_basis(const Arrangement& a) {
    FlagBasisReport report;
    FlatLattice lattice = build_lattice(a);
    FolkmanComplex f = folkman_complex(lattice);
    std::vector<IndexSet> beta = betanbc_direct(a);
    int r = lattice.rank();

    report.betanbc_count = beta.size();
    report.cohomology_dim = reduced_cohomology(f.complex, r - 1).dimension;
    if (static_cast<std::size_t>(report.cohomology_dim) != beta.size()) return report;

    // Top cochains are all cocycles; independence modulo coboundaries.
    QMatrix down = coboundary(f.complex, r - 2);
    std::size_t base_rank = rank(down);
    QMatrix augmented = down;
    for (const IndexSet& b : beta) {
        RatVec dual(f.complex.simplices[r - 1].size(), Rat(0));
        dual[flag_simplex_index(f, lattice, b)] = 1;
        augmented.append_col(dual);
    }
    report.ok = rank(augmented) == base_rank + beta.size();
    return report;
}

}  // namespace aomoto
