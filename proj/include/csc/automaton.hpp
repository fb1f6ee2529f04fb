// Complete deterministic letter-to-letter transducers over signed state and
// letter sets, together with the operation calculus on them: dual, inverse,
// the eight derived automata, link graphs, bireversibility, the signed
// closure, isomorphism search, minimization, union, components.
#ifndef CSC_AUTOMATON_HPP
#define CSC_AUTOMATON_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csc/words.hpp"

namespace csc {

class Automaton {
public:
    std::string name;
    std::vector<std::string> state_bases;   // interned base names, declaration order
    std::vector<std::string> letter_bases;
    std::vector<Sym> states;                // declared state symbols (may carry signs)
    std::vector<Sym> letters;
    // True when both the state set and the alphabet are closed under formal
    // inverse (and the transition table satisfies the inverse-closure law).
    bool is_signed = false;

    size_t n_states() const { return states.size(); }
    size_t n_letters() const { return letters.size(); }

    // Declared position of a symbol, or -1 when it is not in the automaton.
    int state_index(Sym s) const;
    int letter_index(Sym x) const;
    bool has_state(Sym s) const { return state_index(s) >= 0; }
    bool has_letter(Sym x) const { return letter_index(x) >= 0; }

    // The unique arrow s --(x|out)--> dst.  Throws UnknownSymbol for symbols
    // outside the declared sets.
    std::pair<Sym, Sym> step(Sym s, Sym x) const;
    // (out, dst) stored at declared positions (i, j).
    std::pair<Sym, Sym> arrow_at(int i, int j) const { return {out_[idx(i, j)], dst_[idx(i, j)]}; }

    // -- symbol and word text I/O (names live in the automaton) ------------
    std::string format_sym(Sym s) const;
    std::string format_word(const Word& w) const;  // space-separated; "-" for empty
    Sym parse_sym(const std::string& ident, Kind kind) const;
    // Whitespace-separated identifiers; kind resolved per token when
    // `mixed`, otherwise all tokens must be of the given kind.
    Word parse_word(const std::string& text, Kind kind) const;
    Word parse_mixed_word(const std::string& text) const;  // result not kind-uniform

    friend bool operator==(const Automaton& a, const Automaton& b);

private:
    friend class AutomatonBuilder;
    std::vector<Sym> out_, dst_;            // dense table, row-major (state, letter)
    std::vector<int> state_pos_, letter_pos_;  // code -> declared position
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * letters.size() + j; }
};

// Incremental construction with full validation in finish():
// UnknownSymbol, DuplicateTransition, MissingTransition, BadInverseClosure.
class AutomatonBuilder {
public:
    std::string name;
    void add_state(const std::string& base, int sign);
    void add_letter(const std::string& base, int sign);
    void add_state_sym(const std::vector<std::string>& bases, Sym s);
    void add_letter_sym(const std::vector<std::string>& bases, Sym s);
    void add_arrow(Sym src, Sym in, Sym out, Sym dst);
    Automaton finish();

    const std::vector<std::string>& state_bases() const { return state_bases_; }
    const std::vector<std::string>& letter_bases() const { return letter_bases_; }

private:
    std::vector<std::string> state_bases_, letter_bases_;
    std::vector<Sym> states_, letters_;
    std::vector<std::array<Sym, 4>> arrows_;
    int intern(std::vector<std::string>& table, const std::string& base);
};

// ---- file format ----------------------------------------------------------
// name: <ident> / alphabet: <ident>... / states: <ident>... / one arrow per
// line "<state> <letter> -> <letter> <state>"; '#' starts a comment; idents
// may end in ^-1.
Automaton parse_automaton(const std::string& text);
// Reproduces the parse input up to comment stripping; arrows sorted by
// (state index, letter index).
std::string serialize_automaton(const Automaton& a);
std::string automaton_to_dot(const Automaton& a);

// ---- derived automata -----------------------------------------------------
Automaton dual(const Automaton& a);
Automaton inverse_automaton(const Automaton& a);  // NotInvertible

struct DerivedMember {
    std::string tag;                    // "A", "dA", "iA", "idA", "diA", "didA", "idiA", "ididA"
    std::optional<Automaton> automaton; // absent when the member is not well-defined
    std::string error_code;             // set when absent
};
// The eight automata obtained from A by composing dual and inverse.
std::vector<DerivedMember> derived_family(const Automaton& a);

// ---- link graph and bireversibility ----------------------------------------
struct LinkGraph {
    std::vector<Sym> left;   // states and their inverses
    std::vector<Sym> right;  // letters and their inverses
    // multiplicity[(left code, right code)]
    std::map<std::pair<int, int>, int> multiplicity;
    bool complete_bipartite_simple() const;
    int edge_count() const;
};
LinkGraph link_graph(const Automaton& a);
std::string link_graph_to_dot(const Automaton& a);

// Both the link-graph check and the eight-automata check are computed; they
// must agree (InternalDisagreement otherwise — the equivalence is exact).
bool is_bireversible(const Automaton& a);

// Signed closure: the automaton on all signed states over all signed
// letters whose positive part is A.  NotBireversible when A is not.
Automaton pm_closure(const Automaton& a);

// ---- isomorphism, minimization, union, components --------------------------
struct Isomorphism {
    // image of each state base's positive symbol / each letter base's
    // positive symbol (sign-equivariant extension is implied)
    std::vector<Sym> state_map;
    std::vector<Sym> letter_map;
};
// Exhaustive search, deterministic: the lexicographically first bijection
// pair in candidate order.  With fix_alphabet the letter map is the
// identity (alphabets must coincide).
std::optional<Isomorphism> find_isomorphism(const Automaton& a, const Automaton& b,
                                            bool fix_alphabet = false);

struct MinimizeResult {
    Automaton automaton;
    std::vector<std::pair<Sym, Sym>> merge_map;  // declared state -> representative
};
MinimizeResult minimize(const Automaton& a);

Automaton union_automata(const Automaton& a, const Automaton& b);  // AlphabetMismatch, NameCollision
Automaton rename_states(const Automaton& a, const std::string& suffix);
std::vector<std::vector<Sym>> connected_components(const Automaton& a);

}  // namespace csc

#endif
