#include "aomoto/osalgebra.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include <json.hpp>

namespace aomoto {

void OSElement::add_term(const IndexSet& monomial, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms.emplace(monomial, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

OSElement& OSElement::operator+=(const OSElement& other) {
    assert(terms.empty() || other.terms.empty() || degree == other.degree);
    if (terms.empty()) degree = other.degree;
    for (const auto& [mon, c] : other.terms) add_term(mon, c);
    return *this;
}

OSElement& OSElement::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [mon, c] : terms) c *= scalar;
    return *this;
}

Rat WeightVector::lambda_infinity() const {
    Rat s = 0;
    for (const Rat& l : lambda) s += l;
    return -s;
}

WeightVector parse_weights(const std::string& text, int n) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON weights: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("weights file must be a JSON array of rational strings");
    WeightVector w;
    for (const auto& v : doc) {
        if (!v.is_string()) throw ParseError("weights must be rational strings");
        w.lambda.push_back(parse_rat(v.get<std::string>()));
    }
    if (w.size() != n)
        throw ParseError("weights length " + std::to_string(w.size()) +
                         " does not match arrangement size " + std::to_string(n));
    return w;
}

namespace {

// Sorts the word in place, returns the transposition sign, or 0 on repeats.
int sort_with_parity(std::vector<int>& word) {
    int sign = 1;
    for (std::size_t i = 1; i < word.size(); ++i) {
        for (std::size_t j = i; j > 0 && word[j] < word[j - 1]; --j) {
            std::swap(word[j], word[j - 1]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < word.size(); ++i)
        if (word[i] == word[i - 1]) return 0;
    return sign;
}

}  // namespace

OSAlgebra::OSAlgebra(Arrangement a)
    : arrangement_(std::move(a)), lattice_(build_lattice(arrangement_)) {
    std::vector<IndexSet> cs = circuits(arrangement_);
    for (const IndexSet& c : cs) {
        IndexSet bc(c.begin() + 1, c.end());
        auto [it, inserted] = bc_completion_.emplace(bc, c.front());
        if (!inserted) it->second = std::min(it->second, c.front());
    }
    for (const auto& [bc, c0] : bc_completion_) broken_circuits_.push_back(bc);
    int r = lattice_.rank();
    for (int p = 0; p <= r; ++p) {
        bases_.push_back(nbc_sets(arrangement_, p));
        index_.emplace_back();
        for (std::size_t i = 0; i < bases_[p].size(); ++i) index_[p][bases_[p][i]] = i;
    }
}

int OSAlgebra::dim(int p) const {
    if (p < 0 || p >= static_cast<int>(bases_.size())) return 0;
    return static_cast<int>(bases_[p].size());
}

std::size_t OSAlgebra::basis_index(int p, const IndexSet& monomial) const {
    return index_.at(p).at(monomial);
}

void OSAlgebra::reduce_sorted(const IndexSet& t, const Rat& coeff, OSElement& out) const {
    auto r = subset_rank(arrangement_, t);
    if (!r || *r < static_cast<int>(t.size())) return;  // empty intersection or dependent

    // Lexicographically smallest broken circuit contained in t, if any.
    const IndexSet* bc = nullptr;
    for (const IndexSet& cand : broken_circuits_) {
        if (cand.size() > t.size()) continue;
        if (std::includes(t.begin(), t.end(), cand.begin(), cand.end())) {
            bc = &cand;
            break;
        }
    }
    if (!bc) {
        out.add_term(t, coeff);
        return;
    }

    int c0 = bc_completion_.at(*bc);
    IndexSet rest;
    for (int i : t)
        if (!std::binary_search(bc->begin(), bc->end(), i)) rest.push_back(i);

    // e_t = eps * e_rest ^ e_bc with eps the sign sorting (rest, bc) into t.
    std::vector<int> concat = rest;
    concat.insert(concat.end(), bc->begin(), bc->end());
    int eps = sort_with_parity(concat);
    assert(eps != 0 && concat == t);

    // Circuit relation: e_bc = sum_k (-1)^{k-1} e_{(c0 cup bc) minus bc_k}.
    for (std::size_t k = 0; k < bc->size(); ++k) {
        std::vector<int> word = rest;
        word.push_back(c0);
        for (std::size_t m = 0; m < bc->size(); ++m)
            if (m != k) word.push_back((*bc)[m]);
        int sign = sort_with_parity(word);
        if (sign == 0) continue;
        Rat c = coeff * eps * sign;
        if (k % 2 == 1) c = -c;
        reduce_sorted(word, c, out);  // word is strictly lex-smaller than t
    }
}

OSElement OSAlgebra::reduce_monomial(const std::vector<int>& word) const {
    for (int i : word)
        if (i < 1 || i > arrangement_.size())
            throw std::out_of_range("hyperplane index out of range: " + std::to_string(i));
    OSElement out;
    out.degree = static_cast<int>(word.size());
    std::vector<int> sorted = word;
    int sign = sort_with_parity(sorted);
    if (sign == 0) return out;
    reduce_sorted(sorted, Rat(sign), out);
    return out;
}

OSElement OSAlgebra::multiply(const OSElement& a, const OSElement& b) const {
    OSElement out;
    out.degree = a.degree + b.degree;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            std::vector<int> word = ma;
            word.insert(word.end(), mb.begin(), mb.end());
            int sign = sort_with_parity(word);
            if (sign == 0) continue;
            reduce_sorted(word, ca * cb * sign, out);
        }
    }
    return out;
}

RatVec OSAlgebra::coordinates(const OSElement& e) const {
    RatVec v(dim(e.degree), Rat(0));
    for (const auto& [mon, c] : e.terms) v[basis_index(e.degree, mon)] = c;
    return v;
}

OSElement omega_lambda(const OSAlgebra& alg, const WeightVector& w) {
    OSElement e;
    e.degree = 1;
    for (int i = 1; i <= alg.arrangement().size(); ++i) e.add_term({i}, w.of(i));
    return e;
}

OSElement omega_lambda_flat(const OSAlgebra& alg, const WeightVector& w, int flat_id) {
    OSElement e;
    e.degree = 1;
    for (int i : alg.lattice().flat(flat_id).support) e.add_term({i}, w.of(i));
    return e;
}

AomotoComplex aomoto_complex(const OSAlgebra& alg, const WeightVector& w) {
    if (w.size() != alg.arrangement().size())
        throw std::invalid_argument("weight vector length does not match arrangement");
    AomotoComplex cx;
    int r = alg.rank();
    for (int p = 0; p <= r; ++p) cx.bases.push_back(alg.basis(p));
    OSElement wl = omega_lambda(alg, w);
    for (int p = 0; p < r; ++p) {
        SparseMatrix d;
        d.rows = alg.dim(p + 1);
        d.cols = alg.dim(p);
        for (std::size_t col = 0; col < cx.bases[p].size(); ++col) {
            OSElement mono;
            mono.degree = p;
            mono.add_term(cx.bases[p][col], 1);
            OSElement image = alg.multiply(wl, mono);
            for (const auto& [mon, c] : image.terms) d.add(alg.basis_index(p + 1, mon), col, c);
        }
        cx.differentials.push_back(std::move(d));
    }
    return cx;
}

std::vector<int> aomoto_cohomology(const OSAlgebra& alg, const WeightVector& w) {
    AomotoComplex cx = aomoto_complex(alg, w);
    int r = alg.rank();
    std::vector<std::size_t> ranks(r, 0);
    for (int p = 0; p < r; ++p) ranks[p] = rank(cx.differentials[p]);
    std::vector<int> dims;
    for (int q = 0; q <= r; ++q) {
        std::size_t up = q < r ? ranks[q] : 0;
        std::size_t down = q > 0 ? ranks[q - 1] : 0;
        dims.push_back(alg.dim(q) - static_cast<int>(up) - static_cast<int>(down));
    }
    return dims;
}

OSElement upsilon(const OSAlgebra& alg, const WeightVector& w, const FolkmanComplex& f,
                  const RatVec& top_cochain) {
    int r = alg.rank();
    const auto& top = f.complex.simplices.at(r - 1);
    assert(top_cochain.size() == top.size());
    OSElement out;
    out.degree = r;
    for (std::size_t i = 0; i < top.size(); ++i) {
        if (top_cochain[i] == 0) continue;
        OSElement prod;
        prod.degree = 0;
        prod.add_term({}, 1);
        for (int v : top[i])  // vertex order is codim-descending: X_1, ..., X_r
            prod = alg.multiply(prod, omega_lambda_flat(alg, w, f.vertex_flat[v]));
        prod *= top_cochain[i];
        out += prod;
    }
    return out;
}

OSElement flag_form(const OSAlgebra& alg, const WeightVector& w, const IndexSet& base) {
    Flag flag = flag_of_base(alg.lattice(), base);
    OSElement prod;
    prod.degree = 0;
    prod.add_term({}, 1);
    for (int id : flag) prod = alg.multiply(prod, omega_lambda_flat(alg, w, id));
    return prod;
}

OSElement flag_form_unreduced(const OSAlgebra& alg, const WeightVector& w, const IndexSet& base) {
    Flag flag = flag_of_base(alg.lattice(), base);
    // Exterior-algebra expansion only: signs and repeats, no circuit relations.
    std::map<IndexSet, Rat> acc;
    acc[{}] = 1;
    for (int id : flag) {
        std::map<IndexSet, Rat> next;
        for (const auto& [mon, c] : acc) {
            for (int i : alg.lattice().flat(id).support) {
                std::vector<int> word = mon;
                word.push_back(i);
                int sign = sort_with_parity(word);
                if (sign == 0) continue;
                Rat v = c * w.of(i) * sign;
                auto [it, inserted] = next.emplace(word, v);
                if (!inserted) {
                    it->second += v;
                    if (it->second == 0) next.erase(it);
                }
            }
        }
        acc = std::move(next);
    }
    OSElement out;
    out.degree = static_cast<int>(flag.size());
    for (auto& [mon, c] : acc) out.terms.emplace(mon, std::move(c));
    return out;
}

}  // namespace aomoto
