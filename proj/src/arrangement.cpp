#include "aomoto/arrangement.hpp"

#include <algorithm>
#include <cassert>

#include <json.hpp>

namespace aomoto {

namespace {

/// RREF analysis of an affine system. Rows are [A | b]; the solution set is
/// {x : A x = b}.
struct SystemInfo {
    bool consistent = false;
    int rank = 0;
    CanonicalForm key;
    RatVec point;
    std::vector<RatVec> directions;
};

SystemInfo analyze_system(const std::vector<RatVec>& rows, std::size_t width) {
    QMatrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == width);
        for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
    }
    std::vector<std::size_t> pivots = m.rref();

    SystemInfo info;
    info.key.cols = width;
    if (!pivots.empty() && pivots.back() == width - 1) return info;  // 0 = nonzero rhs
    info.consistent = true;
    info.rank = static_cast<int>(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        RatVec row(width);
        for (std::size_t j = 0; j < width; ++j) row[j] = m(i, j);
        info.key.rows.push_back(std::move(row));
    }
    std::size_t vars = width - 1;
    info.point.assign(vars, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) info.point[pivots[i]] = m(i, vars);
    std::vector<bool> is_pivot(vars, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < vars; ++f) {
        if (is_pivot[f]) continue;
        RatVec dir(vars);
        dir[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) dir[pivots[i]] = -m(i, f);
        info.directions.push_back(std::move(dir));
    }
    return info;
}

bool flat_on_hyperplane(const SystemInfo& info, const Hyperplane& h) {
    Rat v = h.constant;
    for (std::size_t j = 0; j < h.coeffs.size(); ++j) v += h.coeffs[j] * info.point[j];
    if (v != 0) return false;
    for (const RatVec& d : info.directions) {
        Rat s = 0;
        for (std::size_t j = 0; j < h.coeffs.size(); ++j) s += h.coeffs[j] * d[j];
        if (s != 0) return false;
    }
    return true;
}

RatVec normalized_form(const RatVec& coeffs, const Rat& constant) {
    RatVec full = coeffs;
    full.push_back(constant);
    for (const Rat& v : full) {
        if (v != 0) {
            Rat inv = 1 / v;
            for (Rat& w : full) w *= inv;
            break;
        }
    }
    return full;
}

}  // namespace

RatVec Arrangement::equation_row(int i) const {
    const Hyperplane& h = hyperplane(i);
    RatVec row = h.coeffs;
    row.push_back(-h.constant);
    return row;
}

Arrangement parse_arrangement(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("hyperplanes"))
        throw ParseError("arrangement file needs 'dimension' and 'hyperplanes'");
    Arrangement a;
    if (!doc["dimension"].is_number_integer() || doc["dimension"].get<int>() < 1)
        throw ParseError("'dimension' must be a positive integer");
    a.dimension = doc["dimension"].get<int>();
    if (!doc["hyperplanes"].is_array() || doc["hyperplanes"].empty())
        throw ParseError("'hyperplanes' must be a nonempty array");

    int idx = 0;
    for (const auto& hj : doc["hyperplanes"]) {
        ++idx;
        Hyperplane h;
        h.index = idx;
        h.label = hj.value("label", "H" + std::to_string(idx));
        if (!hj.contains("coeffs") || !hj["coeffs"].is_array())
            throw ParseError(h.label + ": missing 'coeffs'");
        for (const auto& c : hj["coeffs"]) {
            if (!c.is_string()) throw ParseError(h.label + ": coefficients must be rational strings");
            h.coeffs.push_back(parse_rat(c.get<std::string>()));
        }
        if (static_cast<int>(h.coeffs.size()) != a.dimension)
            throw ParseError(h.label + ": dimension mismatch (expected " +
                             std::to_string(a.dimension) + " coefficients)");
        if (std::all_of(h.coeffs.begin(), h.coeffs.end(), [](const Rat& r) { return r == 0; }))
            throw ParseError(h.label + ": zero coefficient vector");
        if (!hj.contains("constant") || !hj["constant"].is_string())
            throw ParseError(h.label + ": missing 'constant'");
        h.constant = parse_rat(hj["constant"].get<std::string>());
        a.hyperplanes.push_back(std::move(h));
    }
    for (int i = 1; i <= a.size(); ++i)
        for (int j = i + 1; j <= a.size(); ++j)
            if (normalized_form(a.hyperplane(i).coeffs, a.hyperplane(i).constant) ==
                normalized_form(a.hyperplane(j).coeffs, a.hyperplane(j).constant))
                throw ParseError("duplicate hyperplane: " + a.hyperplane(i).label + " and " +
                                 a.hyperplane(j).label + " have proportional forms");
    return a;
}

std::string arrangement_to_json(const Arrangement& a) {
    nlohmann::json doc;
    doc["dimension"] = a.dimension;
    doc["hyperplanes"] = nlohmann::json::array();
    for (const Hyperplane& h : a.hyperplanes) {
        nlohmann::json hj;
        hj["label"] = h.label;
        hj["coeffs"] = nlohmann::json::array();
        for (const Rat& c : h.coeffs) hj["coeffs"].push_back(rat_str(c));
        hj["constant"] = rat_str(h.constant);
        doc["hyperplanes"].push_back(hj);
    }
    return doc.dump();
}

bool FlatLattice::leq(int y, int x) const {
    const auto& sy = flats_[y].support;
    const auto& sx = flats_[x].support;
    return std::includes(sx.begin(), sx.end(), sy.begin(), sy.end());
}

std::vector<int> FlatLattice::flats_of_codim(int c) const {
    std::vector<int> out;
    for (const Flat& f : flats_)
        if (f.codim == c) out.push_back(f.id);
    return out;
}

std::optional<int> FlatLattice::find_key(const CanonicalForm& key) const {
    auto it = by_key_.find(key);
    if (it == by_key_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> FlatLattice::flat_of(const std::vector<int>& indices) const {
    std::vector<RatVec> rows;
    for (int i : indices) rows.push_back(equations_.at(i - 1));
    SystemInfo info = analyze_system(rows, width_);
    if (!info.consistent) return std::nullopt;
    return find_key(info.key);
}

FlatLattice build_lattice(const Arrangement& a) {
    std::size_t width = static_cast<std::size_t>(a.dimension) + 1;

    // Incremental construction: intersect the flats known so far with each new
    // hyperplane. Every nonempty H_I is reached through its largest index.
    std::map<CanonicalForm, SystemInfo> found;
    SystemInfo ambient = analyze_system({}, width);
    found.emplace(ambient.key, ambient);
    for (int i = 1; i <= a.size(); ++i) {
        std::vector<const SystemInfo*> snapshot;
        snapshot.reserve(found.size());
        for (const auto& [key, info] : found) snapshot.push_back(&info);
        for (const SystemInfo* base : snapshot) {
            std::vector<RatVec> rows = base->key.rows;
            rows.push_back(a.equation_row(i));
            SystemInfo info = analyze_system(rows, width);
            if (!info.consistent) continue;
            found.emplace(info.key, std::move(info));
        }
    }

    FlatLattice lattice;
    lattice.width_ = width;
    for (int i = 1; i <= a.size(); ++i) lattice.equations_.push_back(a.equation_row(i));
    std::vector<Flat> flats;
    for (const auto& [key, info] : found) {
        Flat f;
        f.codim = info.rank;
        f.point = info.point;
        f.directions = info.directions;
        f.key = key;
        for (int j = 1; j <= a.size(); ++j)
            if (flat_on_hyperplane(info, a.hyperplane(j))) f.support.push_back(j);
        flats.push_back(std::move(f));
    }
    std::sort(flats.begin(), flats.end(), [](const Flat& x, const Flat& y) {
        if (x.codim != y.codim) return x.codim < y.codim;
        return x.support < y.support;
    });
    for (std::size_t i = 0; i < flats.size(); ++i) {
        flats[i].id = static_cast<int>(i);
        lattice.by_key_.emplace(flats[i].key, flats[i].id);
        lattice.rank_ = std::max(lattice.rank_, flats[i].codim);
    }
    lattice.flats_ = std::move(flats);
    return lattice;
}

int rank(const Arrangement& a) {
    if (a.hyperplanes.empty()) return 0;
    return build_lattice(a).rank();
}

std::optional<int> subset_rank(const Arrangement& a, const std::vector<int>& indices) {
    std::vector<RatVec> rows;
    for (int i : indices) rows.push_back(a.equation_row(i));
    SystemInfo info = analyze_system(rows, static_cast<std::size_t>(a.dimension) + 1);
    if (!info.consistent) return std::nullopt;
    return info.rank;
}

std::vector<int> localization(const FlatLattice& lattice, int flat_id) {
    return lattice.flat(flat_id).support;
}

bool is_separator(const Arrangement& a, int h) {
    Arrangement rest;
    rest.dimension = a.dimension;
    for (const Hyperplane& hp : a.hyperplanes)
        if (hp.index != h) rest.hyperplanes.push_back(hp);
    for (std::size_t i = 0; i < rest.hyperplanes.size(); ++i)
        rest.hyperplanes[i].index = static_cast<int>(i) + 1;
    return rank(rest) < rank(a);
}

Triple triple(const Arrangement& a, int h) {
    std::size_t width = static_cast<std::size_t>(a.dimension) + 1;
    Triple t;
    t.deleted.dimension = a.dimension;
    for (const Hyperplane& hp : a.hyperplanes) {
        if (hp.index == h) continue;
        Hyperplane copy = hp;
        copy.index = static_cast<int>(t.deleted.hyperplanes.size()) + 1;
        t.deleted.hyperplanes.push_back(std::move(copy));
        t.deleted_to_original.push_back(hp.index);
    }

    // Parametrize H as x = p0 + D t and restrict every other hyperplane.
    SystemInfo hinfo = analyze_system({a.equation_row(h)}, width);
    assert(hinfo.consistent);
    const RatVec& p0 = hinfo.point;
    const std::vector<RatVec>& dirs = hinfo.directions;

    struct Restricted {
        RatVec coeffs;
        Rat constant;
        int nu;
    };
    std::map<RatVec, Restricted> seen;  // keyed by normalized form
    for (const Hyperplane& k : a.hyperplanes) {
        if (k.index == h) continue;
        RatVec c(dirs.size(), Rat(0));
        for (std::size_t d = 0; d < dirs.size(); ++d)
            for (std::size_t j = 0; j < k.coeffs.size(); ++j) c[d] += k.coeffs[j] * dirs[d][j];
        Rat c0 = k.constant;
        for (std::size_t j = 0; j < k.coeffs.size(); ++j) c0 += k.coeffs[j] * p0[j];
        if (std::all_of(c.begin(), c.end(), [](const Rat& r) { return r == 0; })) {
            assert(c0 != 0);  // K would otherwise equal H
            continue;         // parallel inside H, empty restriction
        }
        RatVec norm = normalized_form(c, c0);
        if (seen.count(norm)) continue;

        // nu = smallest hyperplane of A - {H} containing K cap H.
        SystemInfo flat = analyze_system({a.equation_row(h), a.equation_row(k.index)}, width);
        int nu = 0;
        for (int j = 1; j <= a.size(); ++j) {
            if (j == h) continue;
            if (flat_on_hyperplane(flat, a.hyperplane(j))) {
                nu = j;
                break;
            }
        }
        assert(nu != 0);
        seen.emplace(std::move(norm), Restricted{std::move(c), std::move(c0), nu});
    }

    std::vector<Restricted> ordered;
    for (auto& [key, r] : seen) ordered.push_back(std::move(r));
    std::sort(ordered.begin(), ordered.end(),
              [](const Restricted& x, const Restricted& y) { return x.nu < y.nu; });

    t.restricted.dimension = std::max(a.dimension - 1, 0);
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        assert(i == 0 || ordered[i - 1].nu < ordered[i].nu);  // nu is injective
        Hyperplane hp;
        hp.index = static_cast<int>(i) + 1;
        hp.coeffs = std::move(ordered[i].coeffs);
        hp.constant = std::move(ordered[i].constant);
        hp.label = a.hyperplane(ordered[i].nu).label + "&" + a.hyperplane(h).label;
        t.restricted.hyperplanes.push_back(std::move(hp));
        t.nu.push_back(ordered[i].nu);
    }
    return t;
}

ProjectiveClosure projective_closure(const Arrangement& a) {
    ProjectiveClosure pc;
    pc.cone.dimension = a.dimension + 1;
    for (const Hyperplane& h : a.hyperplanes) {
        Hyperplane c;
        c.index = h.index;
        c.coeffs = h.coeffs;
        c.coeffs.push_back(h.constant);
        c.constant = 0;
        c.label = h.label;
        pc.cone.hyperplanes.push_back(std::move(c));
    }
    Hyperplane inf;
    inf.index = a.size() + 1;
    inf.coeffs.assign(a.dimension + 1, Rat(0));
    inf.coeffs.back() = 1;
    inf.constant = 0;
    inf.label = "Hinf";
    pc.cone.hyperplanes.push_back(std::move(inf));
    pc.infinity_index = a.size() + 1;
    pc.lattice = build_lattice(pc.cone);
    return pc;
}

std::optional<CanonicalForm> cone_flat_to_affine_key(const ProjectiveClosure& pc,
                                                     int cone_flat_id) {
    const Flat& f = pc.lattice.flat(cone_flat_id);
    std::size_t cone_vars = pc.cone.dimension;  // l + 1
    std::vector<RatVec> rows;
    for (const RatVec& row : f.key.rows) {
        // Homogeneous row [a_1 .. a_l a_z | 0] restricted to the chart z = 1.
        RatVec affine(row.begin(), row.begin() + (cone_vars - 1));
        affine.push_back(-row[cone_vars - 1]);
        rows.push_back(std::move(affine));
    }
    SystemInfo info = analyze_system(rows, cone_vars);
    if (!info.consistent) return std::nullopt;  // the flat lies at infinity
    return info.key;
}

}  // namespace aomoto
