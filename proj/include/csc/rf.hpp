// Residual-finiteness analysis: the letter-stabilizer partition of the
// state set, the dual exponent, candidate endomorphisms of the fundamental
// group (three constructions), generic morphism verification with
// fixed-subgroup evidence, subautomaton embeddings, the P_m pair sets, and
// the assembled non-residual-finiteness report.
#ifndef CSC_RF_HPP
#define CSC_RF_HPP

#include "csc/pi1.hpp"

namespace csc {

// States sorted by how they act on the two letters: plus fixes both
// positive letters, minus fixes both inverse letters, rest fixes neither.
struct StabilizerPartition {
    std::vector<Sym> plus;
    std::vector<Sym> minus;
    std::vector<Sym> rest;
};
StabilizerPartition stabilizer_partition(const Automaton& a);  // NotBinary, DichotomyViolation

// Least n >= 1 such that the second-letter-inverse-first-letter word, and
// its inverse, act trivially on every single signed state under the dual
// action (the order of the induced permutation).
int dual_exponent(const Automaton& a);  // NotBinary

// Images of the positive generators; extension to inverses is
// sign-equivariant.
struct GeneratorMap {
    std::vector<Word> state_images;   // indexed by state base
    std::vector<Word> letter_images;  // indexed by letter base
    Word apply(const Word& w) const;  // substitute and reduce
    bool fixes_states() const;
    bool fixes_letters() const;
    bool is_identity() const { return fixes_states() && fixes_letters(); }
};
std::string format_generator_map(const Automaton& a, const GeneratorMap& map);

// An equal-length assignment of state words that replays the transition
// table with letters fixed.
struct Embedding {
    int length = 0;
    std::vector<Word> images;  // per declared state index
};
// First nontrivial assignment in (length, lexicographic) order, searching
// reduced state words of length <= depth; nullopt when none exists.
std::optional<Embedding> subautomaton_embedding(const Automaton& a, int depth);

// The candidate endomorphism: a depth-1 subautomaton embedding when one
// exists; else the binary-alphabet letter map x -> x(y^-1 x)^n with
// n = dual_exponent; else, for signed automata on two state bases, the
// state map s -> s^(1+k) with k the least common trivializing power; else,
// when every component has two states, the per-component mirror of the
// binary construction.  NotApplicable otherwise.
GeneratorMap build_endomorphism(const Automaton& a);

struct MorphismReport {
    bool relators_ok = false;
    std::string failing_relator;      // formatted, when !relators_ok
    size_t samples = 0;               // fixed-subgroup evidence corpus size
    size_t moved = 0;                 // samples expected (and verified) moved
    size_t lengthened = 0;            // moved samples whose image is strictly longer
    bool evidence_ok = false;
    bool ok() const { return relators_ok && evidence_ok; }
};
// Checks every relator image is trivial in the fundamental group, then
// samples `samples` seeded random words: words inside the fixed side must
// be fixed, words outside must move.  Maps fixing neither side skip the
// sampling (evidence passes vacuously).
MorphismReport verify_morphism(const Automaton& a, const GeneratorMap& map,
                               size_t samples = 1000, unsigned seed = 0);

struct PmWitness {
    Word g;
    Word u;
};
struct PmSet {
    int m = 1;
    int max_g_len = 8;
    int max_u_len = 8;
    // ordered distinct letter pairs (x, y) with one witness each:
    // act(g^m, u·x) = u·y
    std::vector<std::pair<std::pair<Sym, Sym>, PmWitness>> pairs;
    bool contains(Sym x, Sym y) const;
};
PmSet compute_Pm(const Automaton& a, int m, int max_g_len = 8, int max_u_len = 8);

struct NrfReport {
    std::string automaton_name;
    std::string verdict;        // "NonResiduallyFinite" | "Inconclusive"
    std::string infiniteness;   // "certified" | "cited" | "finite" | "unestablished"
    std::string endomorphism;   // formatted map, or "none"
    bool morphism_verified = false;
    bool evidence_ok = false;
    size_t evidence_samples = 0;
    std::vector<std::string> witnesses;  // formatted witness elements
    bool disjunctive_witnesses = false;  // witnesses form an either-or set
    std::string reason;                  // failing premise, when Inconclusive
    std::vector<std::string> chain;      // verified argument steps
};
NrfReport nrf_report(const Automaton& a);
// Flat key-value block, stable field order, deterministic.
std::string serialize_report(const NrfReport& r);

}  // namespace csc

#endif
