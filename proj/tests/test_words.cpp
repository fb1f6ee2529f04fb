#include <catch2/catch_amalgamated.hpp>

#include "csc/words.hpp"

using namespace csc;

namespace {

Sym st(int base, int sign = +1) { return Sym(base, sign, Kind::State); }
Sym lt(int base, int sign = +1) { return Sym(base, sign, Kind::Letter); }

}  // namespace

TEST_CASE("symbol codes round-trip and order positives first") {
    for (int base = 0; base < 4; ++base) {
        for (int sign : {+1, -1}) {
            Sym s(base, sign, Kind::State);
            REQUIRE(Sym::from_code(s.code(), Kind::State) == s);
        }
    }
    REQUIRE(st(0).code() == 0);
    REQUIRE(st(0, -1).code() == 1);
    REQUIRE(st(2).code() == 4);
    REQUIRE(st(0) < st(0, -1));
    REQUIRE(st(0, -1) < st(1));
    REQUIRE(st(1) < lt(0));  // states sort before letters
    REQUIRE(st(1).inverse() == st(1, -1));
    REQUIRE(st(1).inverse().inverse() == st(1));
}

TEST_CASE("push_reduced cancels only adjacent inverses") {
    Word w;
    push_reduced(w, st(0));
    push_reduced(w, st(1));
    push_reduced(w, st(1, -1));
    REQUIRE(w == Word{st(0)});
    push_reduced(w, st(0, -1));
    REQUIRE(w.empty());

    // A same-base same-sign pair must not cancel.
    push_reduced(w, st(0));
    push_reduced(w, st(0));
    REQUIRE(w.size() == 2);
}

TEST_CASE("reduce handles nested cancellation and mixed kinds") {
    // s0 s1 s1^-1 s0^-1 s2  ->  s2
    Word raw = {st(0), st(1), st(1, -1), st(0, -1), st(2)};
    REQUIRE(reduce(raw) == Word{st(2)});
    REQUIRE(is_reduced(reduce(raw)));
    REQUIRE_FALSE(is_reduced(raw));

    // A state and a letter with the same base never cancel.
    Word mixed = {st(0), lt(0, -1)};
    REQUIRE(reduce(mixed) == mixed);
}

TEST_CASE("inverse, concat and power satisfy the group laws") {
    Word g = {st(0), st(1, -1), st(0)};
    Word h = {st(0, -1), st(2)};

    REQUIRE(reduce(concat(g, inverse(g))).empty());
    REQUIRE(inverse(inverse(g)) == g);
    REQUIRE(concat(g, h) == reduce(Word{st(0), st(1, -1), st(2)}));

    REQUIRE(power(g, 0).empty());
    REQUIRE(power(g, 1) == g);
    REQUIRE(power(g, -1) == inverse(g));
    REQUIRE(power(h, 3) == concat(h, concat(h, h)));
    REQUIRE(reduce(concat(power(g, 2), power(g, -2))).empty());
}

TEST_CASE("shortlex orders by length first, then position by position") {
    Word e;
    Word a = {st(0)};
    Word ai = {st(0, -1)};
    Word b = {st(1)};
    Word aa = {st(0), st(0)};

    REQUIRE(shortlex_less(e, a));
    REQUIRE(shortlex_less(a, ai));  // positive before its inverse
    REQUIRE(shortlex_less(ai, b));
    REQUIRE(shortlex_less(b, aa));  // shorter always first
    REQUIRE_FALSE(shortlex_less(a, a));
    REQUIRE_FALSE(shortlex_less(aa, b));
}

TEST_CASE("word_key distinguishes distinct short words") {
    std::vector<Word> words = {
        {}, {st(0)}, {st(0, -1)}, {st(1)}, {lt(0)}, {st(0), st(1)}, {st(1), st(0)},
    };
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j)
            REQUIRE(word_key(words[i]) != word_key(words[j]));
    REQUIRE(word_key(words[5]) == word_key(Word{st(0), st(1)}));
}

TEST_CASE("split_ident strips a trailing inverse marker") {
    REQUIRE(split_ident("a") == std::make_pair(std::string("a"), +1));
    REQUIRE(split_ident("a^-1") == std::make_pair(std::string("a"), -1));
    REQUIRE(split_ident("x1^-1") == std::make_pair(std::string("x1"), -1));
    REQUIRE(split_ident("0") == std::make_pair(std::string("0"), +1));
}

TEST_CASE("errors carry a stable machine code") {
    Error e("MissingTransition", "state a has no arrow for letter x");
    REQUIRE(e.code() == "MissingTransition");
    REQUIRE(std::string(e.what()).find("no arrow") != std::string::npos);
}
