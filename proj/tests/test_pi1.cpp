#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "csc/bundled.hpp"
#include "csc/pi1.hpp"

using namespace csc;

namespace {

// Deterministic mixed words over the signed closure's symbols.
Word random_mixed(const Action& act, std::mt19937& rng, int max_len) {
    auto states = act.state_generators();
    auto letters = act.letter_symbols();
    std::uniform_int_distribution<int> len(0, max_len);
    int n = len(rng);
    Word w;
    for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<size_t> pick(0, states.size() + letters.size() - 1);
        size_t k = pick(rng);
        w.push_back(k < states.size() ? states[k] : letters[k - states.size()]);
    }
    return w;
}

}  // namespace

TEST_CASE("presentations have one relator per arrow and pass the two-coordinate check") {
    Automaton a = bundled_automaton("aleshin");
    Presentation p = presentation(a);
    REQUIRE(p.generators == std::vector<std::string>{"a", "b", "c", "0", "1"});
    REQUIRE(p.relators.size() == 6);
    for (const auto& r : p.relators) REQUIRE(r.size() == 4);
    REQUIRE(abelianization_check(a));
    REQUIRE(abelianization_check(p, 3));

    // A signed automaton presents by squares: sixteen arrows, four squares.
    Automaton d = bundled_automaton("delta_d");
    Presentation q = presentation(d);
    REQUIRE(q.generators == std::vector<std::string>{"a", "b", "x", "y"});
    REQUIRE(q.relators.size() == 4);
    REQUIRE(abelianization_check(d));

    auto rwords = relator_words(a);
    REQUIRE(rwords.size() == 6);
    Action act(a);
    Pi1 pi(act);
    for (const Word& r : rwords) REQUIRE(pi.is_trivial(r));
}

TEST_CASE("normal forms factor group elements in both orientations") {
    Automaton a = bundled_automaton("delta_s");
    Action act(a);
    Pi1 pi(act);

    Word mixed = a.parse_mixed_word("x a");
    NormalForm left = pi.normal_form(mixed, Orientation::Left);
    REQUIRE(a.format_word(left.state_part) == "b");
    REQUIRE(a.format_word(left.letter_part) == "x^-1");
    REQUIRE(left.orientation == Orientation::Left);

    // Left forms put states first; right forms letters first.
    NormalForm right = pi.normal_form(mixed, Orientation::Right);
    Word lw = left.as_word(), rw = right.as_word();
    REQUIRE(pi.is_trivial(concat(lw, inverse(rw))));
    REQUIRE(pi.is_trivial(concat(mixed, inverse(lw))));
}

TEST_CASE("normal form properties on seeded random words") {
    std::mt19937 rng(12345);
    for (const char* name : {"aleshin", "delta_s"}) {
        Automaton a = bundled_automaton(name);
        Action act(a);
        Pi1 pi(act);
        for (int trial = 0; trial < 60; ++trial) {
            Word w = random_mixed(act, rng, 12);
            NormalForm nf = pi.normal_form(w, Orientation::Left);
            INFO(name << " word " << a.format_word(w));

            // parts stay on their own sides
            for (Sym s : nf.state_part) REQUIRE(s.kind == Kind::State);
            for (Sym x : nf.letter_part) REQUIRE(x.kind == Kind::Letter);

            // the form represents the same element
            REQUIRE(pi.is_trivial(concat(w, inverse(nf.as_word()))));

            // idempotence
            NormalForm again = pi.normal_form(nf.as_word(), Orientation::Left);
            REQUIRE(again.state_part == nf.state_part);
            REQUIRE(again.letter_part == nf.letter_part);

            // triviality agrees with the empty form
            REQUIRE(pi.is_trivial(w) == (nf.state_part.empty() && nf.letter_part.empty()));
        }
    }
}

TEST_CASE("right normal form of g followed by v is the action and the section") {
    Automaton a = bundled_automaton("bellaterra");
    Action act(a);
    Pi1 pi(act);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Word g, v;
        std::uniform_int_distribution<int> len(1, 6);
        auto states = act.state_generators();
        auto letters = act.letter_symbols();
        for (int i = len(rng); i > 0; --i) {
            std::uniform_int_distribution<size_t> pick(0, states.size() - 1);
            push_reduced(g, states[pick(rng)]);
        }
        for (int i = len(rng); i > 0; --i) {
            std::uniform_int_distribution<size_t> pick(0, letters.size() - 1);
            push_reduced(v, letters[pick(rng)]);
        }
        NormalForm nf = pi.normal_form(concat(g, v), Orientation::Right);
        REQUIRE(nf.letter_part == act.act(g, v));
        REQUIRE(nf.state_part == act.section(g, v));
    }
}

TEST_CASE("commutation tables expose the anti-torus") {
    Automaton a = bundled_automaton("delta_s");
    Action act(a);
    Pi1 pi(act);
    CommuteReport rep = pi.commutes(a.parse_word("a", Kind::State), a.parse_word("x", Kind::Letter), 3, 3);
    REQUIRE(rep.commuting.size() == 3);
    for (const auto& row : rep.commuting)
        for (bool cell : row) REQUIRE_FALSE(cell);
    REQUIRE(rep.anti_torus_up_to_bounds());
    REQUIRE_FALSE(rep.any_commuting);
}

TEST_CASE("periodic tilings commute and the hexagonal cycle is found") {
    for (const char* name : {"aleshin", "bellaterra", "lamplighter", "delta_d", "delta_s"}) {
        Automaton a = bundled_automaton(name);
        Action act(a);
        Pi1 pi(act);
        PeriodicPair pp = pi.periodic_tiling();
        INFO(name);
        REQUIRE_FALSE(pp.w.empty());
        REQUIRE_FALSE(pp.u.empty());
        Word comm = concat(concat(pp.w, pp.u), concat(inverse(pp.w), inverse(pp.u)));
        REQUIRE(pi.is_trivial(comm));
    }
    Automaton al = bundled_automaton("aleshin");
    Action act(al);
    PeriodicPair pp = Pi1(act).periodic_tiling();
    REQUIRE(pp.cycle_length == 6);
    REQUIRE(al.format_word(pp.w) == "c c b a b a");
    REQUIRE(al.format_word(pp.u) == "0 0 1 1 0 1");
}

TEST_CASE("rectangles tile with the action along the bottom and the section on the right") {
    Automaton a = bundled_automaton("aleshin");
    Action act(a);
    Pi1 pi(act);
    Word left = a.parse_word("a b", Kind::State);
    Word top = a.parse_word("0 1 1", Kind::Letter);
    Rectangle r = pi.tile_rectangle(left, top);
    REQUIRE(r.rows.size() == 2);
    REQUIRE(r.rows[0].size() == 3);
    REQUIRE(r.bottom_word() == act.act(left, top));
    REQUIRE(r.right_word() == act.section(left, top));
    REQUIRE_FALSE(render_rectangle(a, r).empty());
}

TEST_CASE("tilesets cover the arrows") {
    Automaton a = bundled_automaton("aleshin");
    REQUIRE(tileset(a, false).size() == 6);    // one tile per arrow
    REQUIRE(tileset(a, true).size() == 24);    // signed closure arrows
    Automaton d = bundled_automaton("delta_d");
    REQUIRE(tileset(d, true).size() == 16);
    REQUIRE_FALSE(render_tiles(a, tileset(a, false)).empty());
}

TEST_CASE("complex files parse to the same signed automaton they serialize to") {
    const BundledEntry& entry = bundled_entry("delta_d");
    Automaton via_text = parse_complex(entry.text);
    REQUIRE(via_text == bundled_automaton("delta_d"));
    REQUIRE(via_text.is_signed);
    REQUIRE(parse_complex(serialize_complex(via_text)) == via_text);

    // A square list that misses corners is rejected.
    try {
        parse_complex("name: broken\nsquares:\na x y b\n");
        FAIL("expected a corner coverage error");
    } catch (const Error& e) {
        REQUIRE_FALSE(e.code().empty());
    }
}
