// Exhaustive searches: all bireversible transition tables of a given size
// up to a chosen symmetry policy, and all one-vertex complexes on two state
// bases and two letter bases, each class tagged with a group-order verdict.
#ifndef CSC_ENUMERATE_HPP
#define CSC_ENUMERATE_HPP

#include "csc/action.hpp"

namespace csc {

// Which tables are identified: relabelings only; also the input/output
// exchange (the inverse table); also the arrow reversal and its inverse.
// Each level contains the previous one, so class counts can only shrink.
enum class SymmetryPolicy { Iso, IsoInverse, IsoInverseDual };

SymmetryPolicy parse_policy(const std::string& name);  // iso|inverse|dual
std::string policy_name(SymmetryPolicy p);

struct EnumeratedClass {
    Automaton rep;           // rebuilt from the canonical table
    long long table_count = 0;  // raw bireversible tables in the class
    Verdict verdict;
};

struct EnumerationResult {
    int n_states = 0;
    int n_letters = 0;
    SymmetryPolicy policy = SymmetryPolicy::Iso;
    long long tables_scanned = 0;
    long long bireversible_tables = 0;
    std::vector<EnumeratedClass> classes;  // canonical-key order
};

// Scans every (n_letters * n_states)^(n_states * n_letters) table; throws
// SizeTooLarge when that exceeds the built-in budget.
EnumerationResult enumerate_automata(int n_states, int n_letters, SymmetryPolicy policy,
                                     const GroupOrderCaps& caps = {50000, 20});

struct Vh4Class {
    std::vector<std::array<Sym, 4>> squares;  // canonical squares (left, top, bottom, right)
    Automaton rep;                            // the signed automaton of the complex
    std::string key;                          // canonical serialization
    Verdict verdict;
};

// All complete complexes on state bases {a, b} and letter bases {x, y}
// (every signed corner covered exactly once), up to sign-preserving base
// relabelings, sign flips, and the state/letter swap.
std::vector<Vh4Class> enumerate_vh4(const GroupOrderCaps& caps = {20000, 20});

// Canonical key of an existing signed automaton on two state and two
// letter bases, for membership tests against enumerate_vh4 classes.
std::string vh4_canonical_key(const Automaton& a);

}  // namespace csc

#endif
