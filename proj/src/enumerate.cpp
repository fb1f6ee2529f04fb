#include "csc/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace csc {

SymmetryPolicy parse_policy(const std::string& name) {
    if (name == "iso") return SymmetryPolicy::Iso;
    if (name == "inverse") return SymmetryPolicy::IsoInverse;
    if (name == "dual") return SymmetryPolicy::IsoInverseDual;
    throw Error("BadArgument", "unknown symmetry policy '" + name + "' (iso|inverse|dual)");
}

std::string policy_name(SymmetryPolicy p) {
    switch (p) {
        case SymmetryPolicy::Iso: return "iso";
        case SymmetryPolicy::IsoInverse: return "inverse";
        case SymmetryPolicy::IsoInverseDual: return "dual";
    }
    return "iso";
}

namespace {

// Flat table: cell i*m+j holds {output letter, target state}.
using Table = std::vector<std::array<int, 2>>;

std::string default_state_name(int i) { return std::string(1, static_cast<char>('a' + i)); }
std::string default_letter_name(int j) { return std::string(1, static_cast<char>('0' + j)); }

Automaton table_automaton(const Table& tab, int n, int m) {
    AutomatonBuilder b;
    b.name = "enum";
    for (int i = 0; i < n; ++i) b.add_state(default_state_name(i), +1);
    for (int j = 0; j < m; ++j) b.add_letter(default_letter_name(j), +1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            auto [y, t] = tab[i * m + j];
            b.add_arrow(Sym(i, +1, Kind::State), Sym(j, +1, Kind::Letter),
                        Sym(y, +1, Kind::Letter), Sym(t, +1, Kind::State));
        }
    return b.finish();
}

// The inverse, reversed, and reversed-inverse tables (well-defined for
// bireversible inputs).
Table inv_table(const Table& tab, int n, int m) {
    Table out(n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            auto [y, t] = tab[i * m + j];
            out[i * m + y] = {j, t};
        }
    return out;
}

Table rev_table(const Table& tab, int n, int m) {
    Table out(n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            auto [y, t] = tab[i * m + j];
            out[t * m + j] = {y, i};
        }
    return out;
}

std::string relabeled_key(const Table& tab, int n, int m, const std::vector<int>& sp,
                          const std::vector<int>& lp, const std::vector<int>& sp_inv,
                          const std::vector<int>& lp_inv) {
    std::string key;
    key.reserve(2 * static_cast<size_t>(n) * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            auto [y, t] = tab[sp_inv[i] * m + lp_inv[j]];
            key.push_back(static_cast<char>('A' + lp[y]));
            key.push_back(static_cast<char>('A' + sp[t]));
        }
    return key;
}

std::string canonical_table_key(const Table& tab, int n, int m, SymmetryPolicy policy) {
    std::vector<Table> forms{tab};
    if (policy != SymmetryPolicy::Iso) forms.push_back(inv_table(tab, n, m));
    if (policy == SymmetryPolicy::IsoInverseDual) {
        Table rev = rev_table(tab, n, m);
        forms.push_back(rev);
        forms.push_back(inv_table(rev, n, m));
    }
    std::string best;
    std::vector<int> sp(n), lp(m);
    for (const Table& f : forms) {
        std::iota(sp.begin(), sp.end(), 0);
        do {
            std::vector<int> sp_inv(n);
            for (int i = 0; i < n; ++i) sp_inv[sp[i]] = i;
            std::iota(lp.begin(), lp.end(), 0);
            do {
                std::vector<int> lp_inv(m);
                for (int j = 0; j < m; ++j) lp_inv[lp[j]] = j;
                std::string key = relabeled_key(f, n, m, sp, lp, sp_inv, lp_inv);
                if (best.empty() || key < best) best = key;
            } while (std::next_permutation(lp.begin(), lp.end()));
        } while (std::next_permutation(sp.begin(), sp.end()));
    }
    return best;
}

Table key_to_table(const std::string& key, int n, int m) {
    Table tab(n * m);
    for (int c = 0; c < n * m; ++c)
        tab[c] = {key[2 * c] - 'A', key[2 * c + 1] - 'A'};
    return tab;
}

}  // namespace

EnumerationResult enumerate_automata(int n_states, int n_letters, SymmetryPolicy policy,
                                     const GroupOrderCaps& caps) {
    if (n_states < 1 || n_letters < 1)
        throw Error("BadArgument", "need at least one state and one letter");
    int n = n_states, m = n_letters;
    double log_total = static_cast<double>(n) * m * std::log(static_cast<double>(m) * n);
    if (log_total > std::log(2e7))
        throw Error("SizeTooLarge",
                    "the table space for " + std::to_string(n) + " states over " +
                        std::to_string(m) + " letters exceeds the scan budget");

    EnumerationResult result;
    result.n_states = n;
    result.n_letters = m;
    result.policy = policy;

    int cells = n * m;
    int choices = m * n;  // output letter * target state
    std::vector<int> odo(cells, 0);
    Table tab(cells);
    std::map<std::string, long long> class_count;

    bool done = false;
    while (!done) {
        ++result.tables_scanned;
        for (int c = 0; c < cells; ++c) tab[c] = {odo[c] % m, odo[c] / m};
        Automaton a = table_automaton(tab, n, m);
        bool ok = false;
        try {
            ok = is_bireversible(a);
        } catch (const Error&) {
            ok = false;
        }
        if (ok) {
            ++result.bireversible_tables;
            ++class_count[canonical_table_key(tab, n, m, policy)];
        }
        int c = 0;
        while (c < cells && ++odo[c] == choices) odo[c++] = 0;
        if (c == cells) done = true;
    }

    for (const auto& [key, count] : class_count) {
        EnumeratedClass cls;
        cls.rep = table_automaton(key_to_table(key, n, m), n, m);
        cls.table_count = count;
        Action act(cls.rep);
        cls.verdict = act.group_order(caps);
        result.classes.push_back(std::move(cls));
    }
    return result;
}

// ---------------------------------------------------------------------------
// One-vertex complexes on two state bases and two letter bases

namespace {

using Square = std::array<Sym, 4>;  // (left s, top x, bottom y, right t)

std::array<Square, 4> family_of(const Square& q) {
    auto [s, x, y, t] = q;
    return {Square{s, x, y, t}, Square{s.inverse(), y, x, t.inverse()},
            Square{t, x.inverse(), y.inverse(), s},
            Square{t.inverse(), y.inverse(), x.inverse(), s.inverse()}};
}

int corner_of(const Square& q) { return q[0].code() * 4 + q[1].code(); }

bool square_less(const Square& a, const Square& b) {
    for (int k = 0; k < 4; ++k) {
        if (a[k].code() != b[k].code()) return a[k].code() < b[k].code();
    }
    return false;
}

Square family_least(const Square& q) {
    auto fam = family_of(q);
    Square best = fam[0];
    for (const Square& f : fam)
        if (square_less(f, best)) best = f;
    return best;
}

std::string squares_key(std::vector<Square> squares) {
    for (Square& q : squares) q = family_least(q);
    std::sort(squares.begin(), squares.end(), square_less);
    std::string key;
    for (const Square& q : squares) {
        for (int k = 0; k < 4; ++k) key.push_back(static_cast<char>('a' + q[k].code()));
        key.push_back('.');
    }
    return key;
}

// All 128 symmetries: per-base sign flips and the base swap on each side,
// plus the optional side swap (left/right edges exchanged with top/bottom).
std::string complex_canonical_key(const std::vector<Square>& squares) {
    std::string best;
    for (int swap_sides = 0; swap_sides < 2; ++swap_sides) {
        std::vector<Square> base(squares);
        if (swap_sides) {
            for (Square& q : base) {
                auto [s, x, y, t] = q;
                q = {Sym(x.base, -x.sign, Kind::State), Sym(s.base, -s.sign, Kind::Letter),
                     Sym(t.base, -t.sign, Kind::Letter), Sym(y.base, -y.sign, Kind::State)};
            }
        }
        for (int s_swap = 0; s_swap < 2; ++s_swap)
            for (int s_flip_a = 0; s_flip_a < 2; ++s_flip_a)
                for (int s_flip_b = 0; s_flip_b < 2; ++s_flip_b)
                    for (int l_swap = 0; l_swap < 2; ++l_swap)
                        for (int l_flip_x = 0; l_flip_x < 2; ++l_flip_x)
                            for (int l_flip_y = 0; l_flip_y < 2; ++l_flip_y) {
                                auto map_sym = [&](Sym v) {
                                    bool is_state = v.kind == Kind::State;
                                    int b = v.base;
                                    int sg = v.sign;
                                    if (is_state ? s_swap : l_swap) b = 1 - b;
                                    int flip = is_state ? (b == 0 ? s_flip_a : s_flip_b)
                                                        : (b == 0 ? l_flip_x : l_flip_y);
                                    if (flip) sg = -sg;
                                    return Sym(b, sg, v.kind);
                                };
                                std::vector<Square> mapped(base);
                                for (Square& q : mapped)
                                    q = {map_sym(q[0]), map_sym(q[1]), map_sym(q[2]),
                                         map_sym(q[3])};
                                std::string key = squares_key(mapped);
                                if (best.empty() || key < best) best = key;
                            }
    }
    return best;
}

std::vector<Square> key_to_squares(const std::string& key) {
    std::vector<Square> squares;
    for (size_t p = 0; p + 4 < key.size() + 1; p += 5) {
        Square q;
        for (int k = 0; k < 4; ++k) {
            int code = key[p + k] - 'a';
            Kind kind = (k == 0 || k == 3) ? Kind::State : Kind::Letter;
            q[k] = Sym::from_code(code, kind);
        }
        squares.push_back(q);
    }
    return squares;
}

Automaton squares_automaton(const std::vector<Square>& squares, const std::string& name) {
    AutomatonBuilder b;
    b.name = name;
    const char* snames[2] = {"a", "b"};
    const char* lnames[2] = {"x", "y"};
    for (int i = 0; i < 2; ++i) b.add_state(snames[i], +1);
    for (int i = 0; i < 2; ++i) b.add_state(snames[i], -1);
    for (int i = 0; i < 2; ++i) b.add_letter(lnames[i], +1);
    for (int i = 0; i < 2; ++i) b.add_letter(lnames[i], -1);
    for (const Square& q : squares)
        for (const Square& f : family_of(q)) b.add_arrow(f[0], f[1], f[2], f[3]);
    return b.finish();
}

// Representative squares of an existing signed automaton, table order.
std::vector<Square> automaton_squares(const Automaton& a) {
    std::vector<Square> squares;
    std::set<int> covered;
    for (size_t i = 0; i < a.n_states(); ++i)
        for (size_t j = 0; j < a.n_letters(); ++j) {
            Sym s = a.states[i], x = a.letters[j];
            auto [y, t] = a.arrow_at(static_cast<int>(i), static_cast<int>(j));
            Square q{s, x, y, t};
            if (covered.count(corner_of(q))) continue;
            for (const Square& f : family_of(q)) covered.insert(corner_of(f));
            squares.push_back(q);
        }
    return squares;
}

}  // namespace

std::string vh4_canonical_key(const Automaton& a) {
    if (!a.is_signed || a.state_bases.size() != 2 || a.letter_bases.size() != 2 ||
        a.n_states() != 4 || a.n_letters() != 4)
        throw Error("BadArgument",
                    "expected a signed automaton on two state bases and two letter bases");
    return complex_canonical_key(automaton_squares(a));
}

std::vector<Vh4Class> enumerate_vh4(const GroupOrderCaps& caps) {
    // Signed symbol universes in code order.
    std::vector<Sym> state_syms, letter_syms;
    for (int c = 0; c < 4; ++c) {
        state_syms.push_back(Sym::from_code(c, Kind::State));
        letter_syms.push_back(Sym::from_code(c, Kind::Letter));
    }

    std::map<std::string, std::vector<Square>> seen;
    std::vector<Square> chosen;

    std::function<void(unsigned)> dfs = [&](unsigned covered) {
        if (covered == 0xFFFFu) {
            std::string key = complex_canonical_key(chosen);
            if (!seen.count(key)) seen.emplace(key, chosen);
            return;
        }
        int anchor = 0;
        while (covered & (1u << anchor)) ++anchor;
        Sym s = Sym::from_code(anchor / 4, Kind::State);
        Sym x = Sym::from_code(anchor % 4, Kind::Letter);
        for (Sym y : letter_syms)
            for (Sym t : state_syms) {
                Square q{s, x, y, t};
                auto fam = family_of(q);
                unsigned mask = 0;
                bool ok = true;
                for (const Square& f : fam) {
                    unsigned bit = 1u << corner_of(f);
                    if ((mask & bit) || (covered & bit)) {
                        ok = false;
                        break;
                    }
                    mask |= bit;
                }
                if (!ok) continue;
                chosen.push_back(q);
                dfs(covered | mask);
                chosen.pop_back();
            }
    };
    dfs(0);

    std::vector<Vh4Class> classes;
    for (const auto& [key, _] : seen) {
        Vh4Class cls;
        cls.key = key;
        cls.squares = key_to_squares(key);
        cls.rep = squares_automaton(cls.squares, "vh4");
        Action act(cls.rep);
        cls.verdict = act.group_order(caps);
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace csc
