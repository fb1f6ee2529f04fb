// Signed symbols and freely reduced words: the elements of the free groups
// on states and on letters that everything else is built from.
#ifndef CSC_WORDS_HPP
#define CSC_WORDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace csc {

// Machine-readable failure: `code` is a stable identifier (e.g.
// "MissingTransition"), `what()` the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

enum class Kind : uint8_t { State, Letter };

// A signed symbol: index of a base name, a sign, and whether it is a state
// or a letter.  `a^-1` is {base of "a", -1, State}.
struct Sym {
    int16_t base = 0;
    int8_t sign = +1;
    Kind kind = Kind::State;

    Sym() = default;
    Sym(int b, int s, Kind k) : base(static_cast<int16_t>(b)), sign(static_cast<int8_t>(s)), kind(k) {}

    Sym inverse() const { return Sym(base, -sign, kind); }
    bool positive() const { return sign > 0; }

    // Dense index used by transition tables: positives at even slots.
    int code() const { return base * 2 + (sign < 0 ? 1 : 0); }
    static Sym from_code(int code, Kind k) { return Sym(code / 2, (code % 2) ? -1 : +1, k); }

    friend bool operator==(const Sym& a, const Sym& b) {
        return a.base == b.base && a.sign == b.sign && a.kind == b.kind;
    }
    friend bool operator!=(const Sym& a, const Sym& b) { return !(a == b); }
    friend bool operator<(const Sym& a, const Sym& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.base != b.base) return a.base < b.base;
        return a.sign > b.sign;  // positive before negative
    }
};

using Word = std::vector<Sym>;  // freely reduced by construction via push_reduced

// Appends `s` to `w`, cancelling against the last symbol when inverse.
void push_reduced(Word& w, Sym s);

// Free reduction of an arbitrary symbol sequence.
Word reduce(const Word& w);

bool is_reduced(const Word& w);

Word inverse(const Word& w);

// w1 then w2, freely reduced.
Word concat(const Word& w1, const Word& w2);

// n-th power (n may be negative), freely reduced.
Word power(const Word& w, int n);

// Length-then-lexicographic comparison (the canonical word order used for
// representatives and deterministic tie-breaks).
bool shortlex_less(const Word& a, const Word& b);

// A compact hashable key for memo tables.
std::string word_key(const Word& w);

// Splits an identifier with optional trailing `^-1` into (base name, sign).
std::pair<std::string, int> split_ident(const std::string& ident);

}  // namespace csc

#endif
