#include <sstream>

#include "doctest.h"
#include "lqn/geometry.hpp"
#include "lqn/io.hpp"

using namespace lqn;

namespace {
const std::vector<unsigned long> kPrimePowersTo13 = {2, 3, 4, 5, 7, 8, 9, 11, 13};
}

TEST_SUITE_BEGIN("geometry");

TEST_CASE("slope labels") {
    Field f5 = Field::make(5);
    CHECK(slope_label(f5, {0, 0, 0}, {0, 1, 1}) == Atom::a(1));
    CHECK(slope_label(f5, {0, 2, 3}, {0, 2, 4}) == Atom::a(5));  // vertical pairs get a_q
    CHECK(slope_label(f5, {0, 1, 1}, {0, 0, 0}) == Atom::a(1));  // symmetric
    CHECK(slope_label(f5, {0, 0, 1}, {0, 3, 1}) == Atom::a(0));
    CHECK_THROWS_AS(slope_label(f5, {0, 2, 2}, {0, 2, 2}), SamePoint);

    // (0,0) and (x, x*x) lie on the line of slope x in GF(4).
    Field f4 = Field::make(4);
    FieldElem x = 2;
    CHECK(slope_label(f4, {0, 0, 0}, {0, x, f4.mul(x, x)}) == Atom::a(2));
}

TEST_CASE("point indexing is copy*q^2 + a*q + b") {
    LabelMatrix m(3, 1, true);
    CHECK(m.index_of({0, 0, 0}) == 0);
    CHECK(m.index_of({0, 2, 1}) == 7);
    CHECK(m.index_of({1, 0, 0}) == 9);
    for (unsigned v = 0; v < m.vertex_count(); ++v) CHECK(m.index_of(m.point_at(v)) == v);
}

TEST_CASE("lyndon matrix basics") {
    LabelMatrix m = build_lyndon(2);
    AtomStructure s = AtomStructure::build(2, 0);
    CHECK(m.vertex_count() == 4);
    CHECK(m.label(m.index_of({0, 0, 0}), m.index_of({0, 1, 0})) == s.a_idx(0));
    // each vertex has exactly one neighbor of each a-color
    for (unsigned v = 0; v < 4; ++v)
        for (unsigned i = 0; i <= 2; ++i) CHECK(m.neighbors(v, s.a_idx(i)).count() == 1);

    CHECK_THROWS_AS(build_lyndon(6), NotAPrimePower);
    CHECK_THROWS_AS(build_lyndon(1), NotAPrimePower);
    CHECK_THROWS_AS(build_lyndon(0), NotAPrimePower);
}

TEST_CASE("every vertex sees q-1 points of each slope class") {
    for (unsigned long q : kPrimePowersTo13) {
        CAPTURE(q);
        LabelMatrix m = build_lyndon(q);
        AtomStructure s = AtomStructure::build(static_cast<unsigned>(q), 0);
        for (unsigned v = 0; v < m.vertex_count(); ++v)
            for (unsigned i = 0; i <= q; ++i)
                CHECK(m.neighbors(v, s.a_idx(i)).count() == q - 1);
    }
}

TEST_CASE("doubled matrix structure") {
    LabelMatrix m = build_doubled(2);
    AtomStructure s = AtomStructure::build(2, 1);
    unsigned cross = 0, a_edges = 0;
    for (unsigned u = 0; u < m.vertex_count(); ++u)
        for (unsigned v = u + 1; v < m.vertex_count(); ++v) {
            if (m.copy_of(u) != m.copy_of(v)) {
                CHECK(m.label(u, v) == s.t_idx(1));
                ++cross;
            } else {
                CHECK(s.is_a_atom(m.label(u, v)));
                ++a_edges;
            }
        }
    CHECK(cross == 16);    // q^4 unordered cross pairs
    CHECK(a_edges == 12);  // 2 C(4,2)

    for (unsigned long q : {2ul, 3ul, 5ul, 7ul}) {
        LabelMatrix d = build_doubled(q);
        AtomStructure sq = AtomStructure::build(static_cast<unsigned>(q), 1);
        for (unsigned v = 0; v < d.vertex_count(); ++v)
            CHECK(d.neighbors(v, sq.t_idx(1)).count() == q * q);
    }
}

TEST_CASE("mirror copy is isomorphic to the primary") {
    LabelMatrix m = build_doubled(5);
    const unsigned sq = 25;
    for (unsigned u = 0; u < sq; ++u)
        for (unsigned v = u + 1; v < sq; ++v) CHECK(m.label(u, v) == m.label(u + sq, v + sq));
}

TEST_CASE("slopes are translation invariant") {
    Field f = Field::make(7);
    for (FieldElem c : {1u, 3u})
        for (FieldElem d : {2u, 6u})
            for (FieldElem a1 = 0; a1 < 7; ++a1)
                for (FieldElem b1 = 0; b1 < 7; ++b1)
                    for (FieldElem a2 = 0; a2 < 7; ++a2)
                        for (FieldElem b2 = 0; b2 < 7; ++b2) {
                            Point p1{0, a1, b1}, p2{0, a2, b2};
                            if (p1 == p2) continue;
                            Point q1{0, f.add(a1, c), f.add(b1, d)};
                            Point q2{0, f.add(a2, c), f.add(b2, d)};
                            CHECK(slope_label(f, p1, p2) == slope_label(f, q1, q2));
                        }
}

TEST_CASE("file round trip is lossless") {
    for (const LabelMatrix& m : {build_lyndon(3), build_doubled(3)}) {
        std::stringstream buf;
        save_matrix(m, buf);
        LabelMatrix back = load_matrix(buf);
        CHECK(back.q() == m.q());
        CHECK(back.n() == m.n());
        CHECK(back.vertex_count() == m.vertex_count());
        CHECK(back.same_labels(m));
    }
}

TEST_CASE("loader reports malformed input with line numbers") {
    auto expect_parse_error = [](const std::string& text, unsigned long line) {
        std::stringstream buf(text);
        try {
            load_matrix(buf);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_parse_error("", 1);
    expect_parse_error("LQN v2 q=2 n=0 V=4\n", 1);
    expect_parse_error("LQN v1 q=2 n=0 V=5\n", 1);  // V not q^2 or 2q^2
    expect_parse_error("LQN v1 q=2 n=0 V=4\n1' a0 a1 a2\n", 3);  // truncated
    std::string good = "LQN v1 q=2 n=0 V=4\n";
    // wrong token on data line 2 (file line 3)
    expect_parse_error(good + "1' a0 a1 a2\na0 1' bogus a1\n", 3);
    // too many tokens
    expect_parse_error(good + "1' a0 a1 a2 a0\n", 2);
    // t atom out of range for n=0
    expect_parse_error(good + "1' a0 a1 t1\n", 2);
}

TEST_CASE("save writes the documented header") {
    LabelMatrix m = build_doubled(2);
    std::stringstream buf;
    save_matrix(m, buf);
    std::string first;
    std::getline(buf, first);
    CHECK(first == "LQN v1 q=2 n=1 V=8");
}

TEST_SUITE_END();
