#ifndef AOMOTO_RATIONAL_HPP
#define AOMOTO_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace aomoto {

// Exact rational scalar used everywhere. No floating point anywhere in the library.
using Rat = mpq_class;
using Int = mpz_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a computation contradicts a theorem it is required to satisfy
// (certificate rank deficiency, transition-matrix sample disagreement, ...).
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p" or "p/q" with optional sign. Rejects q == 0 and anything else.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t pos = 0;
    auto digits = [&](std::size_t start) {
        std::size_t i = start;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t d0 = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == d0) throw ParseError("malformed rational: '" + s + "'");
        return i;
    };
    pos = digits(0);
    if (pos != s.size()) {
        if (s[pos] != '/') throw ParseError("malformed rational: '" + s + "'");
        std::size_t den0 = pos + 1;
        std::size_t end = digits(den0);
        if (end != s.size()) throw ParseError("malformed rational: '" + s + "'");
        if (s.find_first_not_of('0', den0) == std::string::npos)
            throw ParseError("zero denominator: '" + s + "'");
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw ParseError("malformed rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_den() == 1;
}

inline bool is_nonnegative_integer(const Rat& r) { return is_integer(r) && r >= 0; }

using RatVec = std::vector<Rat>;

}  // namespace aomoto

#endif
