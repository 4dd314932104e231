#ifndef AOMOTO_RANDOM_GEN_HPP
#define AOMOTO_RANDOM_GEN_HPP

#include <random>
#include <stdexcept>

#include "aomoto/resonance.hpp"

namespace aomoto {

/// Random arrangement with small rational coefficients, rejection-sampled so
/// no two hyperplanes are proportional. Deterministic for a fixed seed.
inline Arrangement random_arrangement(std::mt19937_64& rng, int dimension, int n) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    Arrangement a;
    a.dimension = dimension;
    auto normalized = [](const Hyperplane& h) {
        RatVec full = h.coeffs;
        full.push_back(h.constant);
        for (const Rat& v : full)
            if (v != 0) {
                Rat inv = 1 / v;
                for (Rat& w : full) w *= inv;
                break;
            }
        return full;
    };
    int guard = 0;
    while (a.size() < n) {
        if (++guard > 100000) throw std::runtime_error("random_arrangement failed to fill");
        Hyperplane h;
        h.index = a.size() + 1;
        h.label = "H" + std::to_string(h.index);
        bool zero = true;
        for (int j = 0; j < dimension; ++j) {
            Rat c(num(rng), den(rng));
            c.canonicalize();
            if (c != 0) zero = false;
            h.coeffs.push_back(c);
        }
        if (zero) continue;
        Rat k(num(rng), den(rng));
        k.canonicalize();
        h.constant = k;
        bool dup = false;
        RatVec key = normalized(h);
        for (const Hyperplane& other : a.hyperplanes)
            if (normalized(other) == key) dup = true;
        if (dup) continue;
        a.hyperplanes.push_back(std::move(h));
    }
    return a;
}

/// Weights passing check_yuzvinsky: mixed-sign candidates first, falling back
/// to all-negative weights (every affine dense-flat sum is then negative,
/// hence nonzero).
inline WeightVector random_yuzvinsky_weights(std::mt19937_64& rng, const Arrangement& a,
                                             const FlatLattice& lattice, int tries = 50) {
    std::uniform_int_distribution<int> num(-7, 7);
    std::uniform_int_distribution<int> den(2, 9);
    for (int t = 0; t < tries; ++t) {
        WeightVector w;
        for (int i = 0; i < a.size(); ++i) {
            Rat l(num(rng), den(rng));
            l.canonicalize();
            w.lambda.push_back(l);
        }
        if (check_yuzvinsky(a, lattice, w).ok) return w;
    }
    WeightVector w;
    std::uniform_int_distribution<int> pos(1, 7);
    for (int i = 0; i < a.size(); ++i) {
        Rat l(-pos(rng), den(rng));
        l.canonicalize();
        w.lambda.push_back(l);
    }
    return w;
}

}  // namespace aomoto

#endif
