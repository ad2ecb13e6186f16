// fixtures.hpp -- the worked examples used across the test suites, built
// in-memory through the regular parser.
#pragma once

#include <string>

#include "lbt/io.hpp"
#include "lbt/pls.hpp"

namespace fixtures {

inline lbt::Bitrade from_text(const std::string& text) {
    return *lbt::parse_document(text, "<fixture>").bitrade;
}

// the 2x2 symbol swap, the smallest bitrade
inline lbt::Bitrade intercalate() {
    return from_text("rows=2 cols=2 syms=2\n0 1\n1 0\n---\n1 0\n0 1\n");
}

// 3x4 / 8 entries per side, rows a,b,c; cols d,e,f; syms g,h,i,j
inline lbt::Bitrade example1() {
    return from_text(
        "a d g\na e h\na f i\nb d h\nb e i\nb f j\nc d j\nc f g\n---\n"
        "a d h\na e i\na f g\nb d j\nb e h\nb f i\nc d g\nc f j\n");
}

// the 5x5 pair with stabilizers of different orders
inline lbt::Bitrade example2() {
    return from_text(
        "rows=5 cols=5 syms=5\n"
        "0 1 2 3 -\n1 4 3 - 2\n2 3 1 - -\n3 - - 0 -\n- 2 - - 4\n---\n"
        "2 3 1 0 -\n3 1 2 - 4\n1 2 3 - -\n0 - - 3 -\n- 4 - - 2\n");
}

// the cyclic 3x3 table against its shifted copy
inline lbt::Bitrade cyclic3_pair() {
    return from_text(
        "rows=3 cols=3 syms=3\n0 1 2\n1 2 0\n2 0 1\n---\n1 2 0\n2 0 1\n0 1 2\n");
}

// two full 5x5 squares; the circ side is the cyclic table
inline lbt::Bitrade remark_trade() {
    return from_text(
        "rows=5 cols=5 syms=5\n"
        "0 1 2 3 4\n1 2 3 4 0\n2 3 4 0 1\n3 4 0 1 2\n4 0 1 2 3\n---\n"
        "4 0 1 2 3\n0 3 2 1 4\n1 4 0 3 2\n2 1 3 4 0\n3 2 4 0 1\n");
}

// a disjoint union of two intercalates: separated but not primary
inline lbt::Bitrade twin_intercalates() {
    return from_text(
        "rows=4 cols=4 syms=4\n"
        "0 1 - -\n1 0 - -\n- - 2 3\n- - 3 2\n---\n"
        "1 0 - -\n0 1 - -\n- - 3 2\n- - 2 3\n");
}

// a 6-entry coset construction over the order-6 nonabelian group
inline lbt::Bitrade s3_triad() {
    return from_text(
        "rows=3 cols=3 syms=2\n0 1 -\n- 0 1\n1 - 0\n---\n1 0 -\n- 1 0\n0 - 1\n");
}

} // namespace fixtures
