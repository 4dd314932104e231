#include <doctest.h>

#include <random>
#include <set>

#include "aomoto/random_gen.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace aomoto;
using namespace aomoto::test;

TEST_SUITE("arrangement") {

TEST_CASE("parse the square-diagonal example file") {
    Arrangement a = square_diag();
    CHECK(a.dimension == 2);
    CHECK(a.size() == 5);
    CHECK(a.hyperplane(1).label == "H1");
    CHECK(a.hyperplane(5).coeffs == RatVec{1, -1});
    CHECK(a.hyperplane(2).constant == -1);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_arrangement("{"), ParseError);
    CHECK_THROWS_AS(parse_arrangement(R"({"dimension": 1, "hyperplanes": []})"), ParseError);
    // zero coefficient vector
    CHECK_THROWS_AS(parse_arrangement(
                        R"({"dimension": 2, "hyperplanes": [{"coeffs": ["0","0"], "constant": "1"}]})"),
                    ParseError);
    // malformed rational
    CHECK_THROWS_AS(parse_arrangement(
                        R"({"dimension": 1, "hyperplanes": [{"coeffs": ["1/0"], "constant": "0"}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_arrangement(
                        R"({"dimension": 1, "hyperplanes": [{"coeffs": ["x"], "constant": "0"}]})"),
                    ParseError);
    // dimension mismatch
    CHECK_THROWS_AS(parse_arrangement(
                        R"({"dimension": 2, "hyperplanes": [{"coeffs": ["1"], "constant": "0"}]})"),
                    ParseError);
    // proportional forms: x+1 = 0 and 2x+2 = 0
    CHECK_THROWS_AS(parse_arrangement(R"({"dimension": 1, "hyperplanes": [
        {"coeffs": ["1"], "constant": "1"}, {"coeffs": ["2"], "constant": "2"}]})"),
                    ParseError);
    // single hyperplane x = 0 in dimension 1 is fine
    Arrangement one =
        parse_arrangement(R"({"dimension": 1, "hyperplanes": [{"coeffs": ["1"], "constant": "0"}]})");
    CHECK(rank(one) == 1);
}

TEST_CASE("lattice of the square-diagonal example") {
    Arrangement a = square_diag();
    FlatLattice lattice = build_lattice(a);
    CHECK(lattice.rank() == 2);

    std::vector<IndexSet> points;
    int lines = 0;
    for (const Flat& f : lattice.flats()) {
        if (f.codim == 1) ++lines;
        if (f.codim == 2) points.push_back(f.support);
    }
    CHECK(lines == 5);
    CHECK(points == std::vector<IndexSet>{{1, 3, 5}, {1, 4}, {2, 3}, {2, 4, 5}});

    // Parallel pair (3,4) never meets.
    CHECK_FALSE(lattice.flat_of({3, 4}).has_value());
    CHECK(lattice.flat_of({}).has_value());  // ambient space
}

TEST_CASE("lattice matches the 2^n brute-force oracle") {
    for (const Arrangement& a : {square_diag(), normal2(), general_position(), points3(),
                                 supersolvable_fixture(), admissible_mixed(),
                                 general_position_infinity()}) {
        CHECK(oracle::summarize(build_lattice(a)).flats == oracle::brute_force_lattice(a).flats);
    }
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 12; ++t) {
        Arrangement a = random_arrangement(rng, 1 + t % 3, 3 + t % 5);
        CHECK(oracle::summarize(build_lattice(a)).flats == oracle::brute_force_lattice(a).flats);
    }
}

TEST_CASE("rank") {
    CHECK(rank(square_diag()) == 2);
    CHECK(rank(points3()) == 1);
    // three parallel planes in dimension 3: rank 1, non-essential
    Arrangement planes = parse_arrangement(R"({"dimension": 3, "hyperplanes": [
        {"coeffs": ["1","0","0"], "constant": "0"},
        {"coeffs": ["1","0","0"], "constant": "1"},
        {"coeffs": ["1","0","0"], "constant": "2"}]})");
    CHECK(rank(planes) == 1);
}

TEST_CASE("localization") {
    Arrangement a = square_diag();
    FlatLattice lattice = build_lattice(a);
    auto point = lattice.flat_of({2, 4});
    REQUIRE(point.has_value());
    CHECK(localization(lattice, *point) == IndexSet{2, 4, 5});
    CHECK(localization(lattice, lattice.ambient_id()).empty());
    auto h3 = lattice.flat_of({3});
    REQUIRE(h3.has_value());
    CHECK(localization(lattice, *h3) == IndexSet{3});
}

TEST_CASE("triple on the square-diagonal example") {
    Arrangement a = square_diag();
    Triple t = triple(a, 5);
    CHECK(t.deleted.size() == 4);
    CHECK(t.deleted_to_original == std::vector<int>{1, 2, 3, 4});
    CHECK(t.restricted.size() == 2);
    CHECK(t.restricted.dimension == 1);
    CHECK(t.nu == std::vector<int>{1, 2});  // min{1,3,5} and min{2,4,5}

    Triple t1 = triple(a, 1);
    CHECK(t1.restricted.size() == 2);
    CHECK(t1.nu == std::vector<int>{3, 4});

    Triple tn = triple(normal2(), 2);
    CHECK(tn.restricted.size() == 1);
    CHECK(tn.nu == std::vector<int>{1});

    // A hyperplane that meets nothing: restriction is empty.
    Triple tp = triple(points3(), 2);
    CHECK(tp.restricted.size() == 0);
}

TEST_CASE("triple counts codim-2 flats on H and nu is monotone") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 10; ++t) {
        Arrangement a = random_arrangement(rng, 2, 4 + t % 4);
        FlatLattice lattice = build_lattice(a);
        for (int h = 1; h <= a.size(); ++h) {
            Triple tr = triple(a, h);
            int on_h = 0;
            for (const Flat& f : lattice.flats())
                if (f.codim == 2 && std::binary_search(f.support.begin(), f.support.end(), h))
                    ++on_h;
            CHECK(tr.restricted.size() == on_h);
            for (std::size_t i = 1; i < tr.nu.size(); ++i) CHECK(tr.nu[i - 1] < tr.nu[i]);
        }
    }
}

TEST_CASE("separators") {
    CHECK(is_separator(normal2(), 1));
    CHECK(is_separator(normal2(), 2));
    CHECK_FALSE(is_separator(square_diag(), 5));
    CHECK_FALSE(is_separator(points3(), 2));
}

TEST_CASE("projective closure of the square-diagonal example") {
    Arrangement a = square_diag();
    ProjectiveClosure pc = projective_closure(a);
    CHECK(pc.cone.dimension == 3);
    CHECK(pc.cone.size() == 6);
    CHECK(pc.infinity_index == 6);
    for (const Hyperplane& h : pc.cone.hyperplanes) CHECK(h.constant == 0);

    // The vertical direction: a cone line contained in cH1, cH2, cHinf.
    bool found_line = false;
    for (const Flat& f : pc.lattice.flats())
        if (f.support == IndexSet{1, 2, 6} && f.directions.size() == 1) found_line = true;
    CHECK(found_line);

    // Affine flats are recovered bijectively on the chart z = 1.
    FlatLattice affine = build_lattice(a);
    std::set<CanonicalForm> recovered;
    for (const Flat& f : pc.lattice.flats()) {
        auto key = cone_flat_to_affine_key(pc, f.id);
        if (key) {
            CHECK(affine.find_key(*key).has_value());
            recovered.insert(*key);
        }
    }
    CHECK(recovered.size() == affine.flats().size());
}

TEST_CASE("projective closure of N2 and GP") {
    ProjectiveClosure pn = projective_closure(normal2());
    // At infinity H1 and H2 hit Hinf in two distinct points.
    std::vector<IndexSet> at_inf;
    for (const Flat& f : pn.lattice.flats())
        if (f.codim == 2 && !cone_flat_to_affine_key(pn, f.id).has_value())
            at_inf.push_back(f.support);
    CHECK(at_inf == std::vector<IndexSet>{{1, 3}, {2, 3}});

    ProjectiveClosure pg = projective_closure(general_position());
    for (const Flat& f : pg.lattice.flats()) {
        if (f.codim == 2 && !cone_flat_to_affine_key(pg, f.id).has_value())
            CHECK(f.support.size() == 2);  // all at-infinity points are double
    }
}

TEST_CASE("flat invariants on random arrangements") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 8; ++t) {
        Arrangement a = random_arrangement(rng, 1 + t % 3, 3 + t % 4);
        FlatLattice lattice = build_lattice(a);
        for (const Flat& f : lattice.flats()) {
            CHECK(f.support.size() >= static_cast<std::size_t>(f.codim));
            bool indep = is_independent(a, f.support);
            CHECK(indep == (static_cast<int>(f.support.size()) == f.codim));
            // The witness satisfies every supporting hyperplane.
            for (int i : f.support) {
                Rat v = a.hyperplane(i).constant;
                for (std::size_t j = 0; j < f.point.size(); ++j)
                    v += a.hyperplane(i).coeffs[j] * f.point[j];
                CHECK(v == 0);
            }
        }
        for (int x : lattice.maximal_flats()) CHECK(lattice.flat(x).codim == lattice.rank());
    }
}

}
