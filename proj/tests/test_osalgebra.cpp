#include <doctest.h>

#include <array>
#include <random>
#include <thread>

#include "aomoto/osalgebra.hpp"
#include "aomoto/random_gen.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace aomoto;
using namespace aomoto::test;

namespace {

WeightVector square_diag_weights() {
    return WeightVector{{Rat(1, 2), Rat(1, 3), Rat(1, 5), Rat(1, 7), Rat(1, 11)}};
}

OSElement make(int degree, std::map<IndexSet, Rat> terms) {
    OSElement e;
    e.degree = degree;
    for (auto& [m, c] : terms)
        if (c != 0) e.terms.emplace(m, c);
    return e;
}

}  // namespace

TEST_SUITE("osalgebra") {

TEST_CASE("weights parse and lambda_infinity") {
    WeightVector w = parse_weights(R"(["1/2","1/3","1/5","1/7","1/11"])", 5);
    CHECK(w.of(1) == Rat(1, 2));
    CHECK(w.lambda_infinity() == -(Rat(1, 2) + Rat(1, 3) + Rat(1, 5) + Rat(1, 7) + Rat(1, 11)));
    CHECK_THROWS_AS(parse_weights(R"(["1/2"])", 5), ParseError);
    CHECK_THROWS_AS(parse_weights(R"({"a": 1})", 1), ParseError);
    CHECK_THROWS_AS(parse_weights(R"(["1/0"])", 1), ParseError);
}

TEST_CASE("normal form on the square-diagonal example") {
    OSAlgebra alg(square_diag());

    // omega_4 omega_5 rewrites through the circuit {2,4,5}.
    CHECK(alg.reduce_monomial({4, 5}) == make(2, {{{2, 5}, 1}, {{2, 4}, -1}}));
    // Empty intersection kills the monomial.
    CHECK(alg.reduce_monomial({3, 4}).is_zero());
    CHECK(alg.reduce_monomial({1, 2}).is_zero());
    // Transposition sign.
    CHECK(alg.reduce_monomial({5, 2}) == make(2, {{{2, 5}, -1}}));
    // Repeats vanish.
    CHECK(alg.reduce_monomial({5, 5}).is_zero());
    // Dependent sets vanish.
    CHECK(alg.reduce_monomial({2, 4, 5}).is_zero());
    CHECK(alg.reduce_monomial({1, 3, 5}).is_zero());
    // nbc monomials are fixed.
    CHECK(alg.reduce_monomial({2, 4}) == make(2, {{{2, 4}, 1}}));

    CHECK_THROWS_AS(alg.reduce_monomial({6}), std::out_of_range);
    CHECK_THROWS_AS(alg.reduce_monomial({0}), std::out_of_range);
}

TEST_CASE("multiplication") {
    OSAlgebra alg(square_diag());
    OSElement w2 = alg.reduce_monomial({2});
    OSElement w4 = alg.reduce_monomial({4});
    OSElement w5 = alg.reduce_monomial({5});
    CHECK(alg.multiply(w2, w4) == make(2, {{{2, 4}, 1}}));
    CHECK(alg.multiply(w5, w5).is_zero());
    OSElement sum = w2 + w4;
    CHECK(alg.multiply(sum, w5) == make(2, {{{2, 5}, 2}, {{2, 4}, -1}}));
}

TEST_CASE("multiply is graded-commutative and associative") {
    OSAlgebra alg(square_diag());
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> pick(1, 5);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int t = 0; t < 30; ++t) {
        OSElement x = alg.reduce_monomial({pick(rng)});
        x *= Rat(num(rng));
        x += alg.reduce_monomial({pick(rng)});
        OSElement y = alg.reduce_monomial({pick(rng)});
        y += alg.reduce_monomial({pick(rng)});
        OSElement z = alg.reduce_monomial({pick(rng)});

        // degree-1 elements anticommute
        OSElement xy = alg.multiply(x, y);
        OSElement yx = alg.multiply(y, x);
        yx *= Rat(-1);
        CHECK(xy == yx);

        CHECK(alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z)));
    }
}

TEST_CASE("dimensions match nbc counts and the quotient oracle") {
    for (const Arrangement& a :
         {square_diag(), normal2(), general_position(), points3(), supersolvable_fixture(),
          admissible_mixed(), general_position_infinity()}) {
        OSAlgebra alg(a);
        std::vector<int> dims;
        for (int p = 0; p <= alg.rank(); ++p) {
            dims.push_back(alg.dim(p));
            CHECK(alg.dim(p) == static_cast<int>(nbc_sets(a, p).size()));
        }
        CHECK(dims == oracle::quotient_os_dims(a));
    }
    OSAlgebra alg(square_diag());
    CHECK(alg.dim(0) == 1);
    CHECK(alg.dim(1) == 5);
    CHECK(alg.dim(2) == 6);
}

TEST_CASE("normal form agrees with the quotient-space oracle") {
    for (const Arrangement& a :
         {square_diag(), normal2(), general_position(), points3(), supersolvable_fixture(),
          admissible_mixed(), general_position_infinity()}) {
        OSAlgebra alg(a);
        for (int p = 1; p <= alg.rank(); ++p) CHECK(oracle::quotient_normal_form_consistent(alg, p));
    }
    std::mt19937_64 rng(303);
    for (int t = 0; t < 6; ++t) {
        Arrangement a = random_arrangement(rng, 2, 4 + t % 3);
        OSAlgebra alg(a);
        for (int p = 1; p <= alg.rank(); ++p) CHECK(oracle::quotient_normal_form_consistent(alg, p));
    }
}

TEST_CASE("omega_lambda at flats of the square-diagonal example") {
    Arrangement a = square_diag();
    OSAlgebra alg(a);
    WeightVector w = square_diag_weights();
    auto point = alg.lattice().flat_of({2, 4, 5});
    REQUIRE(point.has_value());
    CHECK(omega_lambda_flat(alg, w, *point) ==
          make(1, {{{2}, w.of(2)}, {{4}, w.of(4)}, {{5}, w.of(5)}}));
    CHECK(omega_lambda_flat(alg, w, alg.lattice().ambient_id()).is_zero());
    auto h4 = alg.lattice().flat_of({4});
    REQUIRE(h4.has_value());
    CHECK(omega_lambda_flat(alg, w, *h4) == make(1, {{{4}, w.of(4)}}));
}

TEST_CASE("aomoto cohomology of the square-diagonal example") {
    Arrangement a = square_diag();
    OSAlgebra alg(a);
    CHECK(aomoto_cohomology(alg, square_diag_weights()) == std::vector<int>{0, 0, 2});

    // Integer weights that still satisfy the Yuzvinsky condition.
    WeightVector ok{{1, 1, 1, 1, -3}};
    CHECK(aomoto_cohomology(alg, ok) == std::vector<int>{0, 0, 2});

    // Resonant weights: lambda({2,4,5}) = 0; dimensions reported as computed,
    // cross-checked against the independent nullspace-rank oracle.
    WeightVector bad{{1, 1, 1, 1, -2}};
    std::vector<int> dims = aomoto_cohomology(alg, bad);
    AomotoComplex cx = aomoto_complex(alg, bad);
    std::vector<std::size_t> oracle_ranks;
    for (const SparseMatrix& d : cx.differentials)
        oracle_ranks.push_back(oracle::nullspace_rank(d.to_dense()));
    CHECK(dims[0] == 1 - static_cast<int>(oracle_ranks[0]));
    CHECK(dims[1] == 5 - static_cast<int>(oracle_ranks[0] + oracle_ranks[1]));
    CHECK(dims[2] == 6 - static_cast<int>(oracle_ranks[1]));
    CHECK(dims[0] == 0);  // omega_lambda != 0
}

TEST_CASE("aomoto cohomology of N2") {
    OSAlgebra alg(normal2());
    CHECK(aomoto_cohomology(alg, WeightVector{{1, 1}}) == std::vector<int>{0, 0, 0});
}

TEST_CASE("aomoto differential squares to zero on random weights") {
    for (const Arrangement& a :
         {square_diag(), normal2(), general_position(), points3(), supersolvable_fixture(),
          admissible_mixed(), general_position_infinity()}) {
        OSAlgebra alg(a);
        std::mt19937_64 rng(42);
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 7);
        for (int t = 0; t < 100; ++t) {
            WeightVector w;
            for (int i = 0; i < a.size(); ++i) {
                Rat l(num(rng), den(rng));
                l.canonicalize();
                w.lambda.push_back(l);
            }
            AomotoComplex cx = aomoto_complex(alg, w);
            for (std::size_t p = 0; p + 1 < cx.differentials.size(); ++p) {
                QMatrix m1 = cx.differentials[p].to_dense();
                QMatrix m2 = cx.differentials[p + 1].to_dense();
                for (std::size_t i = 0; i < m2.rows(); ++i)
                    for (std::size_t j = 0; j < m1.cols(); ++j) {
                        Rat s = 0;
                        for (std::size_t k = 0; k < m2.cols(); ++k) s += m2(i, k) * m1(k, j);
                        CHECK(s == 0);
                    }
            }
        }
    }
}

TEST_CASE("flag forms of the square-diagonal example") {
    Arrangement a = square_diag();
    OSAlgebra alg(a);
    WeightVector w = square_diag_weights();
    Rat l2 = w.of(2), l4 = w.of(4), l5 = w.of(5);

    // Unreduced expansions exactly as printed in the source material.
    CHECK(flag_form_unreduced(alg, w, {2, 4}) ==
          make(2, {{{2, 4}, l2 * l4}, {{4, 5}, -l4 * l5}}));
    CHECK(flag_form_unreduced(alg, w, {2, 5}) ==
          make(2, {{{2, 5}, l2 * l5}, {{4, 5}, l4 * l5}}));

    // nbc normal forms after rewriting omega_45 = omega_25 - omega_24.
    CHECK(flag_form(alg, w, {2, 4}) ==
          make(2, {{{2, 4}, l2 * l4 + l4 * l5}, {{2, 5}, -l4 * l5}}));
    CHECK(flag_form(alg, w, {2, 5}) ==
          make(2, {{{2, 4}, -l4 * l5}, {{2, 5}, l2 * l5 + l4 * l5}}));
}

TEST_CASE("flag forms are monomial for general position and normal arrangements") {
    {
        OSAlgebra alg(general_position());
        WeightVector w{{Rat(1, 2), Rat(1, 3), Rat(1, 5)}};
        for (const IndexSet& b : nbc_bases(general_position())) {
            OSElement expect = make(2, {{b, w.of(b[0]) * w.of(b[1])}});
            CHECK(flag_form(alg, w, b) == expect);
            CHECK(flag_form_unreduced(alg, w, b) == expect);
        }
    }
    {
        OSAlgebra alg(normal2());
        WeightVector w{{Rat(2, 3), Rat(-1, 5)}};
        CHECK(flag_form(alg, w, {1, 2}) == make(2, {{{1, 2}, w.of(1) * w.of(2)}}));
    }
}

TEST_CASE("upsilon realizes flag forms and is linear") {
    Arrangement a = square_diag();
    OSAlgebra alg(a);
    FlatLattice lattice = build_lattice(a);
    FolkmanComplex f = folkman_complex(lattice);
    WeightVector w = square_diag_weights();

    std::size_t top = f.complex.simplices[1].size();
    for (const IndexSet& b : nbc_bases(a)) {
        RatVec dual(top, Rat(0));
        dual[flag_simplex_index(f, lattice, b)] = 1;
        CHECK(upsilon(alg, w, f, dual) == flag_form(alg, w, b));
    }

    // A combination: 3 xi((2,4))* - xi((2,5))*.
    RatVec combo(top, Rat(0));
    combo[flag_simplex_index(f, lattice, {2, 4})] = 3;
    combo[flag_simplex_index(f, lattice, {2, 5})] = -1;
    OSElement expect = flag_form(alg, w, {2, 4});
    expect *= Rat(3);
    OSElement minus = flag_form(alg, w, {2, 5});
    minus *= Rat(-1);
    expect += minus;
    CHECK(upsilon(alg, w, f, combo) == expect);
}

TEST_CASE("upsilon of coboundaries lands in the image of omega_lambda") {
    Arrangement a = square_diag();
    OSAlgebra alg(a);
    FlatLattice lattice = build_lattice(a);
    FolkmanComplex f = folkman_complex(lattice);
    WeightVector w = square_diag_weights();
    int r = alg.rank();

    QMatrix image = aomoto_complex(alg, w).differentials[r - 1].to_dense();
    QMatrix delta = coboundary(f.complex, r - 2);
    for (std::size_t j = 0; j < delta.cols(); ++j) {
        RatVec cochain(delta.rows());
        for (std::size_t i = 0; i < delta.rows(); ++i) cochain[i] = delta(i, j);
        OSElement u = upsilon(alg, w, f, cochain);
        CHECK(in_column_span(image, alg.coordinates(u)));
    }
}

TEST_CASE("shared algebra is safe to use from multiple threads") {
    Arrangement a = square_diag();
    OSAlgebra alg(a);
    WeightVector w = square_diag_weights();
    std::vector<int> expected = aomoto_cohomology(alg, w);
    OSElement expected_xi = flag_form(alg, w, {2, 4});

    std::vector<std::thread> workers;
    std::array<bool, 4> agree{};
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            bool ok = true;
            for (int rep = 0; rep < 10; ++rep) {
                ok = ok && aomoto_cohomology(alg, w) == expected;
                ok = ok && flag_form(alg, w, {2, 4}) == expected_xi;
                ok = ok && !alg.reduce_monomial({4, 5}).is_zero();
            }
            agree[t] = ok;
        });
    }
    for (std::thread& th : workers) th.join();
    for (bool ok : agree) CHECK(ok);
}

TEST_CASE("nbc flag forms are a basis of the top degree under the gate") {
    std::mt19937_64 rng(2718);
    for (const Arrangement& a :
         {square_diag(), general_position(), points3(), supersolvable_fixture()}) {
        OSAlgebra alg(a);
        FlatLattice lattice = build_lattice(a);
        WeightVector w = random_yuzvinsky_weights(rng, a, lattice);
        REQUIRE(check_yuzvinsky(a, lattice, w).ok);
        std::vector<IndexSet> nbc = nbc_bases(a);
        int r = alg.rank();
        REQUIRE(static_cast<int>(nbc.size()) == alg.dim(r));
        QMatrix m(alg.dim(r), nbc.size());
        for (std::size_t j = 0; j < nbc.size(); ++j) {
            RatVec v = alg.coordinates(flag_form(alg, w, nbc[j]));
            for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = v[i];
        }
        CHECK(determinant(m) != 0);
    }
}

}
