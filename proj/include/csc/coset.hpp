// Coset enumeration over finite presentations: a deterministic Todd-Coxeter
// in the deduction-driven (Felsch) style, quotient-order resolution, and the
// presentation file format.
#ifndef CSC_COSET_HPP
#define CSC_COSET_HPP

#include "csc/pi1.hpp"

namespace csc {

// Result of a coset enumeration.  When Closed, `table` is compacted to the
// live cosets (slot 2g is generator g, slot 2g+1 its inverse) and has been
// validated: every column is a permutation, inverse slots agree, every
// relator traces each coset back to itself, and each subgroup generator
// fixes coset 0.  When Capped, the enumeration exceeded the row budget and
// `n_cosets` reports the live rows at that point (not a certified bound).
struct CosetTable {
    enum class Status { Closed, Capped };
    Status status = Status::Capped;
    size_t n_generators = 0;
    size_t n_cosets = 0;
    std::vector<std::vector<int>> table;
};

// Enumerates the cosets of the subgroup generated by p.subgroup.  Every new
// edge is pushed through all relator cycles it touches (deductions), relator
// cycles two edges short of closing are queued and re-checked as preferred
// definitions, and remaining holes are filled row by row; coincidences merge
// immediately (smaller index survives).  The outcome is deterministic.
// `cap` bounds the number of rows ever allocated.
CosetTable todd_coxeter(const Presentation& p, size_t cap = 1000000);

struct QuotientOrder {
    bool exact = false;
    long long value = 0;  // group order when exact, else live rows at the cap
};
// Order of the group presented by p.relators plus `extra`.  Tries direct
// enumeration over the trivial subgroup first; when that exceeds `cap`, it
// enumerates the cosets of subgroups generated by subsets of the generators,
// rewrites the presentation to the subgroup via its Schreier graph, and
// recurses (order = index times subgroup order).  One-generator groups, and
// groups some single generator of which reaches every coset, are cyclic, so
// their order is read off the abelianization instead of an enumeration.
QuotientOrder quotient_order(const Presentation& p,
                             const std::vector<Presentation::GWord>& extra,
                             size_t cap = 1000000);

// File format: `generators: <name>...`, then `relators:` followed by one
// word per line (`^-1` marks an inverse), then an optional `subgroup:`
// section in the same shape.  `#` starts a comment.
Presentation parse_presentation(const std::string& text);
std::string serialize_presentation(const Presentation& p);

}  // namespace csc

#endif
