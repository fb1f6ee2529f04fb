#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "csc/action.hpp"
#include "csc/bundled.hpp"

using namespace csc;

namespace {

Automaton tiny_swap() {
    return parse_automaton(
        "name: tiny_swap\nalphabet: 0 1\nstates: e s\n"
        "e 0 -> 0 e\ne 1 -> 1 e\ns 0 -> 1 s\ns 1 -> 0 s\n");
}

}  // namespace

TEST_CASE("single-symbol action agrees with the transition table") {
    Automaton a = bundled_automaton("aleshin");
    Action act(a);
    for (Sym s : a.states) {
        for (Sym x : a.letters) {
            auto [y, t] = a.step(s, x);
            REQUIRE(act.act({s}, {x}) == Word{y});
            REQUIRE(act.section({s}, {x}) == Word{t});
        }
    }
}

TEST_CASE("the action is a homomorphism and sections compose") {
    Automaton a = bundled_automaton("bellaterra");
    Action act(a);
    Word g = a.parse_word("a b^-1", Kind::State);
    Word h = a.parse_word("c a", Kind::State);
    std::vector<Word> inputs = {
        a.parse_word("0", Kind::Letter),
        a.parse_word("0 1", Kind::Letter),
        a.parse_word("1 0^-1 1 1", Kind::Letter),
        a.parse_word("0^-1 1 0 1^-1 0", Kind::Letter),
    };
    for (const Word& v : inputs) {
        // (gh)(v) = g(h(v))
        REQUIRE(act.act(concat(g, h), v) == act.act(g, act.act(h, v)));
        // (gh)|_v = g|_{h(v)} h|_v
        REQUIRE(act.section(concat(g, h), v) ==
                concat(act.section(g, act.act(h, v)), act.section(h, v)));
        // inverses undo the action
        REQUIRE(act.act(inverse(g), act.act(g, v)) == v);
        // length preservation
        REQUIRE(act.act(g, v).size() == v.size());
    }
}

TEST_CASE("word problem separates the generators of an order-two group") {
    Action act(tiny_swap());
    Automaton a = act.base();
    Word e = a.parse_word("e", Kind::State);
    Word s = a.parse_word("s", Kind::State);
    REQUIRE(act.is_trivial(e));
    REQUIRE(act.is_trivial({}));
    REQUIRE_FALSE(act.is_trivial(s));
    REQUIRE(act.is_trivial(concat(s, s)));
    REQUIRE(act.is_trivial(concat(s, inverse(s))));

    OrderResult r = act.element_order(s, 10);
    REQUIRE(r.exact);
    REQUIRE(r.value == 2);
}

TEST_CASE("element orders in the bundled groups") {
    Automaton d = bundled_automaton("delta_d");
    Action act(d);
    OrderResult oa = act.element_order(d.parse_word("a", Kind::State), 10);
    REQUIRE(oa.exact);
    REQUIRE(oa.value == 3);

    Automaton al = bundled_automaton("aleshin");
    Action aact(al);
    OrderResult free_gen = aact.element_order(al.parse_word("a", Kind::State), 8);
    REQUIRE_FALSE(free_gen.exact);
    REQUIRE(free_gen.value == 8);
}

TEST_CASE("orbits are BFS-ordered and respect the cap") {
    Automaton d = bundled_automaton("delta_s");
    Action act(d);
    Word seed = d.parse_word("x x", Kind::Letter);
    Word a = d.parse_word("a", Kind::State);

    auto orb = act.orbit(seed, {a});
    REQUIRE(orb.size() > 4);       // a-powers move x^2 beyond a 4-cycle
    REQUIRE(orb.front() == seed);  // seed first
    std::set<std::string> all;
    for (const Word& w : orb) {
        REQUIRE(w.size() == 2);    // length is preserved
        all.insert(word_key(w));
    }
    REQUIRE(all.size() == orb.size());  // no duplicates

    REQUIRE(act.orbit(seed, {}).size() == 1);  // no generators: just the seed

    try {
        act.orbit(seed, {a}, 2);
        FAIL("expected OrbitCapExceeded");
    } catch (const Error& e) {
        REQUIRE(e.code() == "OrbitCapExceeded");
    }
}

TEST_CASE("word generators enumerate in shortlex order without repeats") {
    Action act(Action(bundled_automaton("aleshin")));
    auto len2 = act.reduced_letter_words(2);
    REQUIRE(len2.size() == 12);  // 4 signed letters, 3 non-cancelling successors
    for (size_t i = 1; i < len2.size(); ++i) REQUIRE(shortlex_less(len2[i - 1], len2[i]));
    auto pos2 = act.positive_letter_words(2);
    REQUIRE(pos2.size() == 4);
    auto st2 = act.reduced_state_words(2);
    REQUIRE(st2.size() == 30);  // 6 signed states, 5 non-cancelling successors
    REQUIRE(act.positive_state_words(1).size() == 3);
    REQUIRE(act.state_generators().size() == 6);
    REQUIRE(act.letter_symbols().size() == 4);
}

TEST_CASE("level transitivity for the bundled complex automaton") {
    Action act(Action(bundled_automaton("delta_d")));
    auto lt = act.level_transitive(3);
    REQUIRE(lt.size() == 4);
    REQUIRE(lt[0]);  // empty level is trivially transitive
    for (int n = 1; n <= 3; ++n) {
        INFO(n);
        REQUIRE(lt[n]);
    }
}

TEST_CASE("level-one stabilizer generators fix every single letter") {
    Action act(Action(bundled_automaton("delta_d")));
    auto gens = act.level_one_stabilizer_generators();
    REQUIRE_FALSE(gens.empty());
    for (const Word& g : gens)
        for (Sym x : act.letter_symbols())
            REQUIRE(act.act(g, {x}) == Word{x});
}

TEST_CASE("replication certificate for the self-dual complex") {
    Action act(Action(bundled_automaton("delta_s")));
    auto cert = act.replication_certificate();
    REQUIRE(cert.has_value());
    REQUIRE(cert->k == 3);
    REQUIRE(cert->sigma_sign == +1);
    REQUIRE(cert->m == 3);
    REQUIRE(cert->tau_sign == -1);
    REQUIRE(act.base().format_sym(cert->pumped_state) == "a");
    REQUIRE(act.base().format_word(cert->base_word) == "x x");
    REQUIRE(cert->base_orbit == 12);
    REQUIRE(cert->base_orbit % cert->m == 0);
}

TEST_CASE("group order verdicts across the corpus") {
    Verdict fin = Action(tiny_swap()).group_order();
    REQUIRE(fin.type == Verdict::Type::Finite);
    REQUIRE(fin.count == 2);
    REQUIRE(fin.elements.size() == 2);
    REQUIRE(fin.elements[0].empty());  // identity is the shortlex-least element

    Verdict cert = Action(bundled_automaton("delta_s")).group_order();
    REQUIRE(cert.type == Verdict::Type::InfiniteCertified);
    REQUIRE(cert.certificate.has_value());

    Verdict lower = Action(bundled_automaton("lamplighter")).group_order({2000, 12}, {});
    REQUIRE(lower.type == Verdict::Type::LowerBound);
    REQUIRE(lower.count >= 2000);
}

TEST_CASE("the action requires bireversibility") {
    Automaton odo = parse_automaton(
        "name: odometer\nalphabet: 0 1\nstates: e q\n"
        "e 0 -> 0 e\ne 1 -> 1 e\nq 0 -> 1 e\nq 1 -> 0 q\n");
    try {
        Action act(odo);
        FAIL("expected NotBireversible");
    } catch (const Error& e) {
        REQUIRE(e.code() == "NotBireversible");
    }
}
