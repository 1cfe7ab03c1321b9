#include <algorithm>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "lqn/atoms.hpp"

using namespace lqn;

namespace {

// Set-of-atoms form of comp(x,y) for readable comparisons.
std::set<std::string> comp_names(const AtomStructure& s, AtomIdx x, AtomIdx y) {
    std::set<std::string> out;
    for (AtomIdx z : s.comp_set(x, y)) out.insert(s.atom_name(z));
    return out;
}

// Relational associativity of the atom structure: union over w in x;y of
// w;z equals union over v in y;z of x;v.
bool comp_associative(const AtomStructure& s) {
    const unsigned A = s.atom_count();
    for (AtomIdx x = 0; x < A; ++x)
        for (AtomIdx y = 0; y < A; ++y)
            for (AtomIdx z = 0; z < A; ++z) {
                std::set<AtomIdx> left, right;
                for (AtomIdx w : s.comp_set(x, y))
                    for (AtomIdx r : s.comp_set(w, z)) left.insert(r);
                for (AtomIdx v : s.comp_set(y, z))
                    for (AtomIdx r : s.comp_set(x, v)) right.insert(r);
                if (left != right) return false;
            }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("atoms");

TEST_CASE("composition table matches the defining rules") {
    AtomStructure s20 = AtomStructure::build(2, 0);
    CHECK(comp_names(s20, s20.a_idx(0), s20.a_idx(1)) == std::set<std::string>{"a2"});
    CHECK(comp_names(s20, s20.a_idx(0), s20.a_idx(0)) == std::set<std::string>{"1'", "a0"});

    AtomStructure s32 = AtomStructure::build(3, 2);
    CHECK(comp_names(s32, s32.t_idx(1), s32.t_idx(2)) ==
          std::set<std::string>{"a0", "a1", "a2", "a3"});
    CHECK(comp_names(s32, s32.t_idx(1), s32.t_idx(1)) ==
          std::set<std::string>{"1'", "a0", "a1", "a2", "a3"});
    CHECK(comp_names(s32, s32.a_idx(1), s32.t_idx(2)) == std::set<std::string>{"t1", "t2"});

    // identity law for every atom
    for (AtomIdx x = 0; x < s32.atom_count(); ++x) {
        CHECK(s32.comp_set(AtomStructure::kIdentityIdx, x) == std::vector<AtomIdx>{x});
        CHECK(s32.comp_set(x, AtomStructure::kIdentityIdx) == std::vector<AtomIdx>{x});
    }
}

TEST_CASE("membership queries") {
    AtomStructure s = AtomStructure::build(3, 1);
    CHECK(s.contains(Atom::a(0), Atom::t(1), Atom::t(1)));
    CHECK_FALSE(s.contains(Atom::t(1), Atom::t(1), Atom::t(1)));
    CHECK(s.contains(Atom::a(0), Atom::a(0), Atom::identity()));
}

TEST_CASE("atom count and identity membership") {
    for (unsigned q : {1u, 2u, 5u, 8u})
        for (unsigned n : {0u, 1u, 3u}) {
            AtomStructure s = AtomStructure::build(q, n);
            CHECK(s.atom_count() == q + n + 2);
            for (AtomIdx x = 0; x < s.atom_count(); ++x)
                for (AtomIdx y = 0; y < s.atom_count(); ++y)
                    CHECK(s.contains(x, y, AtomStructure::kIdentityIdx) == (x == y));
        }
}

TEST_CASE("mandatory witness pairs") {
    AtomStructure s22 = AtomStructure::build(2, 2);
    auto pairs_a0 = s22.mandatory_witness_pairs(Atom::a(0));
    for (unsigned i = 1; i <= 2; ++i)
        for (unsigned j = 1; j <= 2; ++j) {
            bool found = std::count(pairs_a0.begin(), pairs_a0.end(),
                                    std::make_pair(Atom::t(i), Atom::t(j))) == 1;
            CHECK(found);
        }
    auto pairs_t1 = s22.mandatory_witness_pairs(Atom::t(1));
    for (unsigned k = 0; k <= 2; ++k)
        for (unsigned j = 1; j <= 2; ++j) {
            CHECK(std::count(pairs_t1.begin(), pairs_t1.end(),
                             std::make_pair(Atom::a(k), Atom::t(j))) == 1);
            CHECK(std::count(pairs_t1.begin(), pairs_t1.end(),
                             std::make_pair(Atom::t(j), Atom::a(k))) == 1);
        }

    AtomStructure s20 = AtomStructure::build(2, 0);
    auto pairs = s20.mandatory_witness_pairs(Atom::a(0));
    std::set<std::pair<std::string, std::string>> got;
    for (auto [d, e] : pairs)
        got.emplace(s20.atom_name(s20.index_of(d)), s20.atom_name(s20.index_of(e)));
    std::set<std::pair<std::string, std::string>> want = {
        {"a1", "a2"}, {"a2", "a1"}, {"a0", "1'"}, {"1'", "a0"}, {"a0", "a0"}};
    CHECK(got == want);
}

TEST_CASE("Peircean triangle symmetry holds exhaustively") {
    for (unsigned q = 1; q <= 8; ++q)
        for (unsigned n = 0; n <= 4; ++n) {
            AtomStructure s = AtomStructure::build(q, n);
            const unsigned A = s.atom_count();
            for (AtomIdx x = 0; x < A; ++x)
                for (AtomIdx y = 0; y < A; ++y)
                    for (AtomIdx z = 0; z < A; ++z) {
                        bool a = s.contains(x, y, z);
                        bool b = s.contains(x, z, y);
                        bool c = s.contains(z, y, x);
                        CHECK(a == b);
                        CHECK(b == c);
                    }
        }
}

TEST_CASE("L(q,0) is the a-restriction of L(q,n)") {
    AtomStructure s0 = AtomStructure::build(3, 0);
    AtomStructure s3 = AtomStructure::build(3, 3);
    for (AtomIdx x = 0; x < s0.atom_count(); ++x)
        for (AtomIdx y = 0; y < s0.atom_count(); ++y)
            for (AtomIdx z = 0; z < s0.atom_count(); ++z)
                CHECK(s0.contains(x, y, z) == s3.contains(x, y, z));
}

TEST_CASE("composition is associative once q >= 3") {
    // q <= 2 is genuinely non-associative: for q = 1, a_0;a_1 is empty; for
    // q = 2, (a_0;a_1);a_2 = 1'+a_2 while a_0;(a_1;a_2) = 1'+a_0. The table
    // only defines a relation algebra from q = 3 on.
    CHECK_FALSE(comp_associative(AtomStructure::build(1, 0)));
    CHECK_FALSE(comp_associative(AtomStructure::build(2, 0)));
    CHECK_FALSE(comp_associative(AtomStructure::build(2, 3)));
    for (auto [q, n] : std::vector<std::pair<unsigned, unsigned>>{
             {3, 2}, {4, 4}, {5, 3}, {6, 4}, {8, 0}, {7, 3}, {3, 0}, {4, 0}})
        CHECK(comp_associative(AtomStructure::build(q, n)));
}

TEST_CASE("json export") {
    AtomStructure s = AtomStructure::build(2, 1);
    auto j = nlohmann::json::parse(s.comp_json());
    CHECK(j["q"] == 2);
    CHECK(j["n"] == 1);
    CHECK(j["comp"]["a0,a1"] == nlohmann::json::array({"a2"}));
    CHECK(j["comp"]["t1,t1"] == nlohmann::json::array({"1'", "a0", "a1", "a2"}));
    CHECK(j["comp"].size() == 5u * 5u);
}

TEST_CASE("atom name round trip") {
    AtomStructure s = AtomStructure::build(5, 2);
    for (AtomIdx i = 0; i < s.atom_count(); ++i) CHECK(s.parse_atom(s.atom_name(i)) == i);
    CHECK(s.parse_atom("a6") == s.atom_count());
    CHECK(s.parse_atom("t3") == s.atom_count());
    CHECK(s.parse_atom("t0") == s.atom_count());
    CHECK(s.parse_atom("x1") == s.atom_count());
    CHECK(s.parse_atom("a01") == s.atom_count());
}

TEST_SUITE_END();
