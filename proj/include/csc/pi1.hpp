// The square-complex side of an automaton: the fundamental-group
// presentation, exact-factorization normal forms and the word problem,
// commutation scanning (anti-torus evidence), Wang tilesets, periodic and
// rectangle tilings, and the two-coordinate abelianization check.
#ifndef CSC_PI1_HPP
#define CSC_PI1_HPP

#include "csc/action.hpp"

namespace csc {

enum class Orientation { Left, Right };

// Unique factorization of a group element: Left means state_part followed
// by letter_part, Right means letter_part followed by state_part.  Two
// forms of the same orientation are equal iff their parts are equal.
struct NormalForm {
    Orientation orientation = Orientation::Left;
    Word state_part;
    Word letter_part;
    Word as_word() const;
};

// A unit square: the square of arrow s --(x|y)--> t has left edge s, top
// edge x, bottom edge y and right edge t.
struct Tile {
    Sym left;
    Sym top;
    Sym bottom;
    Sym right;
};

// A finite presentation over named generators.  Relators and subgroup
// generators are words of (generator index, exponent sign) pairs.
struct Presentation {
    using GWord = std::vector<std::pair<int, int>>;
    std::vector<std::string> generators;
    std::vector<GWord> relators;
    std::vector<GWord> subgroup;

    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.generators == b.generators && a.relators == b.relators && a.subgroup == b.subgroup;
    }
};

// Commutation table: entry (n-1, m-1) is true iff p^n q^m p^-n q^-m is
// trivial in the fundamental group.
struct CommuteReport {
    Word p, q;
    std::vector<std::vector<bool>> commuting;
    bool any_commuting = false;
    bool anti_torus_up_to_bounds() const { return !any_commuting; }
};

// A commuting pair (w over states, u over letters): the rows of a
// |w| x |u| torus tiling.
struct PeriodicPair {
    Word w;
    Word u;
    size_t cycle_length = 0;
};

// A tiled |left| x |top| rectangle.  Row 0 is the top row and corresponds
// to the LAST symbol of `left` (the rightmost state acts first), so the
// left side read bottom-to-top spells `left` left-to-right.
struct Rectangle {
    Word left, top;
    std::vector<std::vector<Tile>> rows;
    Word bottom_word() const;  // bottom edge, left to right
    Word right_word() const;   // right edge, bottom to top
};

// Fundamental-group computations for one automaton, sharing the Action's
// transition tables.  The Action must outlive the Pi1.
class Pi1 {
public:
    explicit Pi1(const Action& action) : act_(action) {}
    const Action& action() const { return act_; }

    // Scans the word once, exchanging symbols across squares; accepts
    // arbitrary interleavings and non-reduced input.
    NormalForm normal_form(const Word& mixed, Orientation o) const;

    // Trivial in the fundamental group iff the normal form is empty.
    bool is_trivial(const Word& mixed) const;

    CommuteReport commutes(const Word& p, const Word& q, int n_max, int m_max) const;

    // Follows the functional graph (s,x) -> (t,y) over the declared
    // state/letter pairs from the least pair; the reached cycle yields a
    // commuting pair, verified internally.
    PeriodicPair periodic_tiling() const;

    Rectangle tile_rectangle(const Word& left, const Word& top) const;  // sides reduced

private:
    const Action& act_;
    Sym check_sym(Sym s) const;
};

// Generators are the declared states then the alphabet; one relator
// s·x·t^-1·y^-1 per arrow.  Signed automata present with positive-base
// generators and one relator per square (four table arrows each).
Presentation presentation(const Automaton& a);

// The same relators as symbol words over the automaton itself.
std::vector<Word> relator_words(const Automaton& a);

// Checks that every relator dies under states -> (1,0), letters -> (0,1);
// returned as a computed certificate.  The presentation overload takes the
// number of leading state generators.
bool abelianization_check(const Automaton& a);
bool abelianization_check(const Presentation& p, size_t n_state_generators);

// One tile per arrow of pm_closure(a) when `signed_tiles`, else per arrow
// of a itself (the directed square set).
std::vector<Tile> tileset(const Automaton& a, bool signed_tiles);
std::string render_tiles(const Automaton& a, const std::vector<Tile>& tiles);
std::string render_rectangle(const Automaton& a, const Rectangle& r);

// Non-directed complex file format: `squares:` then one `<left> <top>
// <bottom> <right>` line per square; `^-1` marks a reversed edge.  The
// loader builds the signed automaton whose arrows are the four corner
// readings of each square and validates that every (state, letter) pair
// occurs in exactly one corner.
Automaton parse_complex(const std::string& text);
std::string serialize_complex(const Automaton& a);

}  // namespace csc

#endif
