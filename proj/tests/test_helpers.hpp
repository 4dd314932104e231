#ifndef AOMOTO_TEST_HELPERS_HPP
#define AOMOTO_TEST_HELPERS_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "aomoto/arrangement.hpp"

#ifndef AOMOTO_FIXTURE_DIR
#error "AOMOTO_FIXTURE_DIR must be defined by the build"
#endif

namespace aomoto::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(AOMOTO_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Arrangement load_fixture(const std::string& name) {
    return parse_arrangement(read_file(fixture_path(name)));
}

// Two vertical and two horizontal lines plus the diagonal: Q = (x+1)(x-1)(y+1)(y-1)(x-y).
inline Arrangement square_diag() { return load_fixture("square_diag.json"); }
// Two coordinate lines through the origin.
inline Arrangement normal2() { return load_fixture("normal2.json"); }
// Triangle: x = 0, y = 0, x + y = 1.
inline Arrangement general_position() { return load_fixture("general_position.json"); }
// Three points on a line.
inline Arrangement points3() { return load_fixture("points3.json"); }
// Supersolvable: x, x-1, y, y-x, y-x+1 with blocks {1,2} and {3,4,5}.
inline Arrangement supersolvable_fixture() { return load_fixture("supersolvable.json"); }
// Rank-2 admissible order with a mixed triple point {2,3,4}.
inline Arrangement admissible_mixed() { return load_fixture("admissible_mixed.json"); }
// No two parallels, one triple point at the origin.
inline Arrangement general_position_infinity() {
    return load_fixture("general_position_infinity.json");
}

}  // namespace aomoto::test

#endif
