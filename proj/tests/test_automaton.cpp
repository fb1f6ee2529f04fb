#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "csc/automaton.hpp"
#include "csc/bundled.hpp"

using namespace csc;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// The two-state automaton where s swaps the letters and e fixes them; its
// group is cyclic of order two.
Automaton tiny_swap() {
    return parse_automaton(
        "name: tiny_swap\nalphabet: 0 1\nstates: e s\n"
        "e 0 -> 0 e\ne 1 -> 1 e\ns 0 -> 1 s\ns 1 -> 0 s\n");
}

// The binary adding machine (odometer): invertible but not bireversible.
Automaton odometer() {
    return parse_automaton(
        "name: odometer\nalphabet: 0 1\nstates: e q\n"
        "e 0 -> 0 e\ne 1 -> 1 e\nq 0 -> 1 e\nq 1 -> 0 q\n");
}

// Verifies that an isomorphism actually carries arrows to arrows.
void check_isomorphism(const Automaton& a, const Automaton& b, const Isomorphism& iso) {
    auto map_state = [&](Sym s) {
        Sym img = iso.state_map[static_cast<size_t>(s.base)];
        return s.sign > 0 ? img : img.inverse();
    };
    auto map_letter = [&](Sym x) {
        Sym img = iso.letter_map[static_cast<size_t>(x.base)];
        return x.sign > 0 ? img : img.inverse();
    };
    for (size_t i = 0; i < a.n_states(); ++i) {
        for (size_t j = 0; j < a.n_letters(); ++j) {
            Sym s = a.states[i], x = a.letters[j];
            auto [y, t] = a.step(s, x);
            auto [y2, t2] = b.step(map_state(s), map_letter(x));
            REQUIRE(y2 == map_letter(y));
            REQUIRE(t2 == map_state(t));
        }
    }
}

}  // namespace

TEST_CASE("builder validates the transition table") {
    AutomatonBuilder b;
    b.name = "t";
    b.add_state("p", +1);
    b.add_letter("x", +1);
    b.add_letter("y", +1);

    SECTION("a missing arrow is rejected") {
        b.add_arrow(Sym(0, 1, Kind::State), Sym(0, 1, Kind::Letter), Sym(0, 1, Kind::Letter),
                    Sym(0, 1, Kind::State));
        try {
            b.finish();
            FAIL("expected MissingTransition");
        } catch (const Error& e) {
            REQUIRE(e.code() == "MissingTransition");
        }
    }
    SECTION("a duplicated arrow is rejected") {
        for (int k = 0; k < 2; ++k)
            b.add_arrow(Sym(0, 1, Kind::State), Sym(0, 1, Kind::Letter), Sym(0, 1, Kind::Letter),
                        Sym(0, 1, Kind::State));
        b.add_arrow(Sym(0, 1, Kind::State), Sym(1, 1, Kind::Letter), Sym(1, 1, Kind::Letter),
                    Sym(0, 1, Kind::State));
        try {
            b.finish();
            FAIL("expected DuplicateTransition");
        } catch (const Error& e) {
            REQUIRE(e.code() == "DuplicateTransition");
        }
    }
    SECTION("arrows over undeclared symbols are rejected") {
        try {
            b.add_arrow(Sym(3, 1, Kind::State), Sym(0, 1, Kind::Letter), Sym(0, 1, Kind::Letter),
                        Sym(0, 1, Kind::State));
            b.finish();
            FAIL("expected UnknownSymbol");
        } catch (const Error& e) {
            REQUIRE(e.code() == "UnknownSymbol");
        }
    }
}

TEST_CASE("parsing the bundled automaton matches hand-read arrows") {
    Automaton a = bundled_automaton("aleshin");
    REQUIRE(a.name == "aleshin");
    REQUIRE(a.n_states() == 3);
    REQUIRE(a.n_letters() == 2);
    REQUIRE_FALSE(a.is_signed);

    Sym sa = a.parse_sym("a", Kind::State), sb = a.parse_sym("b", Kind::State),
        sc = a.parse_sym("c", Kind::State);
    Sym l0 = a.parse_sym("0", Kind::Letter), l1 = a.parse_sym("1", Kind::Letter);

    REQUIRE(a.step(sa, l0) == std::make_pair(l0, sb));
    REQUIRE(a.step(sb, l1) == std::make_pair(l0, sc));
    REQUIRE(a.step(sc, l1) == std::make_pair(l0, sa));
    try {
        a.step(sa, Sym(5, 1, Kind::Letter));
        FAIL("expected UnknownSymbol");
    } catch (const Error& e) {
        REQUIRE(e.code() == "UnknownSymbol");
    }
}

TEST_CASE("serialize then parse reproduces the automaton") {
    for (const char* name : {"aleshin", "bellaterra", "lamplighter", "wise"}) {
        Automaton a = bundled_automaton(name);
        REQUIRE(parse_automaton(serialize_automaton(a)) == a);
    }
}

TEST_CASE("bundled texts agree with the data directory") {
    for (const auto& entry : bundled_entries()) {
        REQUIRE(entry.text == slurp(std::string(CSC_DATA_DIR) + "/" + entry.file));
    }
}

TEST_CASE("word parsing and formatting round-trip through the automaton") {
    Automaton a = bundled_automaton("aleshin");
    Word w = a.parse_word("a b^-1 c", Kind::State);
    REQUIRE(w.size() == 3);
    REQUIRE(a.format_word(w) == "a b^-1 c");
    REQUIRE(a.format_word({}) == "-");
    Word m = a.parse_mixed_word("a 0 b^-1");
    REQUIRE(m[1].kind == Kind::Letter);
    try {
        a.parse_word("a z", Kind::State);
        FAIL("expected UnknownSymbol");
    } catch (const Error& e) {
        REQUIRE(e.code() == "UnknownSymbol");
    }
}

TEST_CASE("dual is an involution and swaps the two sizes") {
    for (const char* name : {"aleshin", "lamplighter", "delta_d"}) {
        Automaton a = bundled_automaton(name);
        Automaton d = dual(a);
        REQUIRE(d.n_states() == a.n_letters());
        REQUIRE(d.n_letters() == a.n_states());
        REQUIRE(dual(d) == a);
    }
    // Spot-check one dual arrow: a --(0|0)--> b becomes 0^-1 --(a^-1|b^-1)--> 0^-1.
    Automaton d = dual(bundled_automaton("aleshin"));
    Sym s0i = d.parse_sym("0^-1", Kind::State);
    Sym lai = d.parse_sym("a^-1", Kind::Letter), lbi = d.parse_sym("b^-1", Kind::Letter);
    REQUIRE(d.step(s0i, lai) == std::make_pair(lbi, s0i));
}

TEST_CASE("inverse automaton reverses the letter action") {
    Automaton a = bundled_automaton("aleshin");
    Automaton ia = inverse_automaton(a);
    REQUIRE(inverse_automaton(ia) == a);
    // a --(0|0)--> b in A gives a^-1 --(0|0)--> b^-1 in iA.
    Sym sai = ia.parse_sym("a^-1", Kind::State), sbi = ia.parse_sym("b^-1", Kind::State);
    Sym l0 = ia.parse_sym("0", Kind::Letter);
    REQUIRE(ia.step(sai, l0) == std::make_pair(l0, sbi));

    Automaton no_inverse = parse_automaton(
        "name: fold\nalphabet: 0 1\nstates: p\np 0 -> 0 p\np 1 -> 0 p\n");
    try {
        inverse_automaton(no_inverse);
        FAIL("expected NotInvertible");
    } catch (const Error& e) {
        REQUIRE(e.code() == "NotInvertible");
    }
}

TEST_CASE("derived family lists eight members with the fixed tag order") {
    auto fam = derived_family(bundled_automaton("bellaterra"));
    REQUIRE(fam.size() == 8);
    std::vector<std::string> tags;
    for (const auto& m : fam) tags.push_back(m.tag);
    REQUIRE(tags == std::vector<std::string>{"A", "dA", "iA", "idA", "diA", "didA", "idiA", "ididA"});
    for (const auto& m : fam) {
        INFO(m.tag);
        REQUIRE(m.automaton.has_value());
        REQUIRE(m.error_code.empty());
    }

    // The odometer's dual is not invertible, so part of the family is absent.
    auto ofam = derived_family(odometer());
    bool some_missing = false;
    for (const auto& m : ofam) some_missing = some_missing || !m.automaton.has_value();
    REQUIRE(some_missing);
}

TEST_CASE("link graph of a bireversible automaton is complete bipartite") {
    LinkGraph g = link_graph(bundled_automaton("aleshin"));
    REQUIRE(g.left.size() == 6);    // three states and their inverses
    REQUIRE(g.right.size() == 4);   // two letters and theirs
    REQUIRE(g.edge_count() == 24);
    REQUIRE(g.complete_bipartite_simple());

    LinkGraph og = link_graph(odometer());
    REQUIRE_FALSE(og.complete_bipartite_simple());
}

TEST_CASE("bireversibility verdicts") {
    REQUIRE(is_bireversible(bundled_automaton("aleshin")));
    REQUIRE(is_bireversible(tiny_swap()));
    REQUIRE_FALSE(is_bireversible(odometer()));
}

TEST_CASE("signed closure doubles both sides and is signed") {
    Automaton c = pm_closure(bundled_automaton("aleshin"));
    REQUIRE(c.is_signed);
    REQUIRE(c.n_states() == 6);
    REQUIRE(c.n_letters() == 4);
    // The closure of a signed automaton is itself.
    Automaton d = bundled_automaton("delta_d");
    REQUIRE(d.is_signed);
    REQUIRE(pm_closure(d) == d);
    try {
        pm_closure(odometer());
        FAIL("expected NotBireversible");
    } catch (const Error& e) {
        REQUIRE(e.code() == "NotBireversible");
    }
}

TEST_CASE("isomorphism search finds valid maps and rejects impossible ones") {
    Automaton a = bundled_automaton("aleshin");

    auto self_iso = find_isomorphism(a, a);
    REQUIRE(self_iso.has_value());
    check_isomorphism(a, a, *self_iso);

    auto with_inverse = find_isomorphism(a, inverse_automaton(a));
    REQUIRE(with_inverse.has_value());
    check_isomorphism(a, inverse_automaton(a), *with_inverse);

    REQUIRE_FALSE(find_isomorphism(a, bundled_automaton("bellaterra")).has_value());
    REQUIRE_FALSE(find_isomorphism(a, bundled_automaton("lamplighter")).has_value());

    // fix_alphabet restricts the candidate letter maps to the identity.
    auto fixed = find_isomorphism(a, a, true);
    REQUIRE(fixed.has_value());
    for (size_t i = 0; i < fixed->letter_map.size(); ++i) {
        REQUIRE(fixed->letter_map[i] == a.letters[i]);
    }
}

TEST_CASE("minimization merges equivalent states") {
    Automaton two_ids = parse_automaton(
        "name: twin\nalphabet: 0 1\nstates: e f s\n"
        "e 0 -> 0 e\ne 1 -> 1 e\nf 0 -> 0 f\nf 1 -> 1 f\n"
        "s 0 -> 1 s\ns 1 -> 0 s\n");
    MinimizeResult m = minimize(two_ids);
    REQUIRE(m.automaton.n_states() == 2);
    REQUIRE(m.merge_map.size() == 3);
    // e and f collapse to the same representative; s stays apart.
    Sym re, rf, rs;
    for (const auto& [from, to] : m.merge_map) {
        if (from == two_ids.parse_sym("e", Kind::State)) re = to;
        if (from == two_ids.parse_sym("f", Kind::State)) rf = to;
        if (from == two_ids.parse_sym("s", Kind::State)) rs = to;
    }
    REQUIRE(re == rf);
    REQUIRE(re != rs);

    MinimizeResult already = minimize(bundled_automaton("aleshin"));
    REQUIRE(already.automaton.n_states() == 3);
}

TEST_CASE("union glues disjoint automata over one alphabet") {
    Automaton a = bundled_automaton("aleshin");
    Automaton b = rename_states(bundled_automaton("bellaterra"), "2");
    Automaton u = union_automata(a, b);
    REQUIRE(u.n_states() == 6);
    REQUIRE(u.n_letters() == 2);
    auto comps = connected_components(u);
    REQUIRE(comps.size() == 2);
    REQUIRE(comps[0].size() + comps[1].size() == 6);

    try {
        union_automata(a, bundled_automaton("bellaterra"));
        FAIL("expected NameCollision");
    } catch (const Error& e) {
        REQUIRE(e.code() == "NameCollision");
    }
    try {
        union_automata(a, bundled_automaton("lamplighter"));
        FAIL("expected AlphabetMismatch");
    } catch (const Error& e) {
        REQUIRE(e.code() == "AlphabetMismatch");
    }
}

TEST_CASE("dot renderings mention every state") {
    Automaton a = bundled_automaton("aleshin");
    std::string dot = automaton_to_dot(a);
    for (const char* s : {"a", "b", "c"}) REQUIRE(dot.find(s) != std::string::npos);
    REQUIRE(link_graph_to_dot(a).find("--") != std::string::npos);
}

TEST_CASE("unknown bundled names are rejected") {
    try {
        bundled_automaton("nope");
        FAIL("expected UnknownBundled");
    } catch (const Error& e) {
        REQUIRE(e.code() == "UnknownBundled");
    }
    REQUIRE(bundled_entry("table1").kind == "presentation");
}
