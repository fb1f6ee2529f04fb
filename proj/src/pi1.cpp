#include "csc/pi1.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace csc {

Word NormalForm::as_word() const {
    Word w = orientation == Orientation::Left ? state_part : letter_part;
    const Word& second = orientation == Orientation::Left ? letter_part : state_part;
    w.insert(w.end(), second.begin(), second.end());
    return w;
}

Sym Pi1::check_sym(Sym s) const {
    const Automaton& c = act_.closed();
    size_t n_bases = s.kind == Kind::State ? c.state_bases.size() : c.letter_bases.size();
    if (s.base < 0 || s.base >= static_cast<int>(n_bases))
        throw Error("UnknownSymbol", "symbol outside the automaton " + c.name);
    return s;
}

NormalForm Pi1::normal_form(const Word& mixed, Orientation o) const {
    NormalForm nf;
    nf.orientation = o;
    const int nlc = act_.nlc_;
    if (o == Orientation::Left) {
        Word& g = nf.state_part;
        Word& v = nf.letter_part;
        for (Sym z : mixed) {
            check_sym(z);
            if (z.kind == Kind::Letter) {
                push_reduced(v, z);
                continue;
            }
            // Move the state left across the whole letter part: each square
            // relation rewrites y·t into s·x, keeping |v| fixed.
            int carry = z.code();
            for (size_t i = v.size(); i-- > 0;) {
                size_t cell = static_cast<size_t>(carry) * nlc + v[i].code();
                v[i] = Sym::from_code(act_.rev_in_[cell], Kind::Letter);
                carry = act_.rev_src_[cell];
            }
            push_reduced(g, Sym::from_code(carry, Kind::State));
        }
    } else {
        Word& v = nf.letter_part;
        Word& h = nf.state_part;
        for (Sym z : mixed) {
            check_sym(z);
            if (z.kind == Kind::State) {
                push_reduced(h, z);
                continue;
            }
            // Mirror image: move the letter left across the state part,
            // rewriting s·x into y·t.
            int carry = z.code();
            for (size_t i = h.size(); i-- > 0;) {
                size_t cell = static_cast<size_t>(h[i].code()) * nlc + carry;
                h[i] = Sym::from_code(act_.fwd_dst_[cell], Kind::State);
                carry = act_.fwd_out_[cell];
            }
            push_reduced(v, Sym::from_code(carry, Kind::Letter));
        }
    }
    return nf;
}

bool Pi1::is_trivial(const Word& mixed) const {
    NormalForm nf = normal_form(mixed, Orientation::Left);
    return nf.state_part.empty() && nf.letter_part.empty();
}

CommuteReport Pi1::commutes(const Word& p, const Word& q, int n_max, int m_max) const {
    CommuteReport report;
    report.p = p;
    report.q = q;
    report.commuting.assign(n_max, std::vector<bool>(m_max, false));
    for (int n = 1; n <= n_max; ++n) {
        Word pn = power(p, n);
        for (int m = 1; m <= m_max; ++m) {
            Word qm = power(q, m);
            Word comm = concat(concat(pn, qm), concat(inverse(pn), inverse(qm)));
            bool c = is_trivial(comm);
            report.commuting[n - 1][m - 1] = c;
            if (c) report.any_commuting = true;
        }
    }
    return report;
}

PeriodicPair Pi1::periodic_tiling() const {
    const Automaton& a = act_.base();
    // Successor map on declared (state, letter) index pairs.
    auto next = [&a](std::pair<int, int> p) {
        auto [y, t] = a.arrow_at(p.first, p.second);
        return std::pair<int, int>(a.state_index(t), a.letter_index(y));
    };
    std::map<std::pair<int, int>, size_t> visited_at;
    std::vector<std::pair<int, int>> path;
    std::pair<int, int> cur{0, 0};
    while (!visited_at.count(cur)) {
        visited_at[cur] = path.size();
        path.push_back(cur);
        cur = next(cur);
    }
    size_t start = visited_at[cur];

    PeriodicPair pair;
    pair.cycle_length = path.size() - start;
    for (size_t i = start; i < path.size(); ++i) {
        pair.w.insert(pair.w.begin(), a.states[path[i].first]);  // w = s_n ... s_1
        pair.u.push_back(a.letters[path[i].second]);             // u = x_1 ... x_n
    }
    Word comm = concat(concat(pair.w, pair.u), concat(inverse(pair.w), inverse(pair.u)));
    if (!is_trivial(comm))
        throw Error("InternalError", "periodic pair failed the commutator check on " + a.name);
    return pair;
}

Rectangle Pi1::tile_rectangle(const Word& left, const Word& top) const {
    if (!is_reduced(left) || !is_reduced(top))
        throw Error("NotReduced", "rectangle sides must be freely reduced");
    Rectangle r;
    r.left = left;
    r.top = top;
    const Automaton& c = act_.closed();
    Word current = top;
    for (size_t i = left.size(); i-- > 0;) {
        Sym cur = check_sym(left[i]);
        std::vector<Tile> row;
        row.reserve(current.size());
        for (Sym& z : current) {
            auto [y, t] = c.step(cur, check_sym(z));
            row.push_back(Tile{cur, z, y, t});
            cur = t;
            z = y;
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

Word Rectangle::bottom_word() const {
    if (left.empty()) return top;
    if (top.empty()) return {};
    Word w;
    for (const Tile& t : rows.back()) w.push_back(t.bottom);
    return w;
}

Word Rectangle::right_word() const {
    if (top.empty()) return left;
    if (left.empty()) return {};
    Word w;
    for (size_t i = rows.size(); i-- > 0;) w.push_back(rows[i].back().right);
    return w;
}

namespace {

// The four table arrows spanning one square of a signed automaton: the
// arrow itself, its inverse reading, and the two reversed readings.
std::vector<std::array<Sym, 4>> square_family(Sym s, Sym x, Sym y, Sym t) {
    return {{s, x, y, t},
            {s.inverse(), y, x, t.inverse()},
            {t, x.inverse(), y.inverse(), s},
            {t.inverse(), y.inverse(), x.inverse(), s.inverse()}};
}

// Canonical arrow of each square of a signed automaton, in table order of
// the least member.
std::vector<std::array<Sym, 4>> square_representatives(const Automaton& a) {
    std::vector<std::array<Sym, 4>> reps;
    std::set<std::pair<int, int>> covered;
    for (size_t i = 0; i < a.n_states(); ++i) {
        for (size_t j = 0; j < a.n_letters(); ++j) {
            if (covered.count({static_cast<int>(i), static_cast<int>(j)})) continue;
            Sym s = a.states[i], x = a.letters[j];
            auto [y, t] = a.arrow_at(static_cast<int>(i), static_cast<int>(j));
            reps.push_back({s, x, y, t});
            for (const auto& m : square_family(s, x, y, t))
                covered.insert({a.state_index(m[0]), a.letter_index(m[1])});
        }
    }
    return reps;
}

}  // namespace

Presentation presentation(const Automaton& a) {
    Presentation p;
    if (!a.is_signed) {
        for (Sym s : a.states) p.generators.push_back(a.format_sym(s));
        for (Sym x : a.letters) p.generators.push_back(a.format_sym(x));
        int ns = static_cast<int>(a.n_states());
        for (size_t i = 0; i < a.n_states(); ++i) {
            for (size_t j = 0; j < a.n_letters(); ++j) {
                auto [y, t] = a.arrow_at(static_cast<int>(i), static_cast<int>(j));
                Presentation::GWord r{{static_cast<int>(i), +1},
                                      {ns + static_cast<int>(j), +1},
                                      {a.state_index(t), -1},
                                      {ns + a.letter_index(y), -1}};
                p.relators.push_back(std::move(r));
            }
        }
        return p;
    }
    // Signed automaton: positive-base generators, one relator per square
    // with inverse symbols folded into exponents.
    p.generators = a.state_bases;
    p.generators.insert(p.generators.end(), a.letter_bases.begin(), a.letter_bases.end());
    int ns = static_cast<int>(a.state_bases.size());
    for (const auto& rep : square_representatives(a)) {
        auto [s, x, y, t] = rep;
        Presentation::GWord r{{s.base, s.sign},
                              {ns + x.base, x.sign},
                              {t.base, -t.sign},
                              {ns + y.base, -y.sign}};
        p.relators.push_back(std::move(r));
    }
    return p;
}

std::vector<Word> relator_words(const Automaton& a) {
    std::vector<Word> words;
    if (!a.is_signed) {
        for (size_t i = 0; i < a.n_states(); ++i) {
            for (size_t j = 0; j < a.n_letters(); ++j) {
                auto [y, t] = a.arrow_at(static_cast<int>(i), static_cast<int>(j));
                words.push_back({a.states[i], a.letters[j], t.inverse(), y.inverse()});
            }
        }
        return words;
    }
    for (const auto& rep : square_representatives(a)) {
        auto [s, x, y, t] = rep;
        words.push_back({s, x, t.inverse(), y.inverse()});
    }
    return words;
}

bool abelianization_check(const Presentation& p, size_t n_state_generators) {
    for (const auto& r : p.relators) {
        int states = 0, letters = 0;
        for (auto [gen, sign] : r) {
            if (gen < static_cast<int>(n_state_generators))
                states += sign;
            else
                letters += sign;
        }
        if (states != 0 || letters != 0) return false;
    }
    return true;
}

bool abelianization_check(const Automaton& a) {
    size_t ns = a.is_signed ? a.state_bases.size() : a.n_states();
    return abelianization_check(presentation(a), ns);
}

std::vector<Tile> tileset(const Automaton& a, bool signed_tiles) {
    const Automaton& src = signed_tiles && !a.is_signed ? pm_closure(a) : a;
    std::vector<Tile> tiles;
    for (size_t i = 0; i < src.n_states(); ++i) {
        for (size_t j = 0; j < src.n_letters(); ++j) {
            auto [y, t] = src.arrow_at(static_cast<int>(i), static_cast<int>(j));
            tiles.push_back(Tile{src.states[i], src.letters[j], y, t});
        }
    }
    return tiles;
}

std::string render_tiles(const Automaton& a, const std::vector<Tile>& tiles) {
    std::ostringstream out;
    for (const Tile& t : tiles)
        out << a.format_sym(t.left) << ' ' << a.format_sym(t.top) << ' ' << a.format_sym(t.bottom)
            << ' ' << a.format_sym(t.right) << '\n';
    return out.str();
}

std::string render_rectangle(const Automaton& a, const Rectangle& r) {
    if (r.rows.empty() || r.top.empty()) {
        std::ostringstream out;
        out << "left: " << a.format_word(r.left) << "\n";
        out << "top: " << a.format_word(r.top) << "\n";
        return out.str();
    }
    size_t cols = r.top.size();
    std::vector<size_t> width(cols, 0);
    size_t left_w = 0;
    auto fit = [&](size_t j, Sym s) { width[j] = std::max(width[j], a.format_sym(s).size()); };
    for (size_t j = 0; j < cols; ++j) {
        fit(j, r.rows.front()[j].top);
        for (const auto& row : r.rows) {
            fit(j, row[j].bottom);
            fit(j, row[j].right);
        }
    }
    for (const auto& row : r.rows) left_w = std::max(left_w, a.format_sym(row[0].left).size());
    auto centered = [](const std::string& label, size_t w, char pad) {
        size_t total = w + 2 - label.size();
        return std::string(total / 2, pad) + label + std::string(total - total / 2, pad);
    };
    std::ostringstream out;
    auto rule = [&](const std::vector<Tile>& row, bool top_edge) {
        out << std::string(left_w, ' ') << '+';
        for (size_t j = 0; j < cols; ++j)
            out << centered(a.format_sym(top_edge ? row[j].top : row[j].bottom), width[j], '-') << '+';
        out << '\n';
    };
    for (const auto& row : r.rows) {
        rule(row, true);
        std::string left_label = a.format_sym(row[0].left);
        out << std::string(left_w - left_label.size(), ' ') << left_label;
        for (size_t j = 0; j < cols; ++j) {
            std::string label = a.format_sym(row[j].right);
            size_t w = width[j] + 2 + 1;  // cell width plus the border column
            out << std::string(w - label.size(), ' ') << label;
        }
        out << '\n';
    }
    rule(r.rows.back(), false);
    return out.str();
}

Automaton parse_complex(const std::string& text) {
    std::istringstream in(text);
    std::string line, name = "complex";
    bool in_squares = false;
    std::vector<std::array<std::pair<std::string, int>, 4>> squares;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> tokens;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens[0] == "name:") {
            if (tokens.size() != 2) throw Error("ParseError", "name: expects one identifier");
            name = tokens[1];
            continue;
        }
        if (tokens[0] == "squares:") {
            in_squares = true;
            continue;
        }
        if (!in_squares || tokens.size() != 4)
            throw Error("ParseError", "expected a `<left> <top> <bottom> <right>` square line, got: " + line);
        std::array<std::pair<std::string, int>, 4> sq;
        for (int k = 0; k < 4; ++k) sq[k] = split_ident(tokens[k]);
        squares.push_back(sq);
    }
    if (squares.empty()) throw Error("ParseError", "complex has no squares");

    std::vector<std::string> state_bases, letter_bases;
    auto intern = [](std::vector<std::string>& table, const std::string& base) {
        for (size_t i = 0; i < table.size(); ++i)
            if (table[i] == base) return static_cast<int>(i);
        table.push_back(base);
        return static_cast<int>(table.size() - 1);
    };
    std::vector<std::array<Sym, 4>> arrows;
    for (const auto& sq : squares) {
        Sym s(intern(state_bases, sq[0].first), sq[0].second, Kind::State);
        Sym x(intern(letter_bases, sq[1].first), sq[1].second, Kind::Letter);
        Sym y(intern(letter_bases, sq[2].first), sq[2].second, Kind::Letter);
        Sym t(intern(state_bases, sq[3].first), sq[3].second, Kind::State);
        arrows.push_back({s, x, y, t});
    }

    // Every signed (state, letter) pair must appear as exactly one corner.
    std::set<std::pair<int, int>> corners;
    for (size_t q = 0; q < arrows.size(); ++q) {
        auto [s, x, y, t] = arrows[q];
        for (const auto& m : square_family(s, x, y, t)) {
            std::pair<int, int> corner{m[0].code(), m[1].code()};
            if (!corners.insert(corner).second)
                throw Error("IncompleteComplex",
                            "corner (" + state_bases[m[0].base] + (m[0].sign < 0 ? "^-1" : "") + ", " +
                                letter_bases[m[1].base] + (m[1].sign < 0 ? "^-1" : "") +
                                ") covered twice (square " + std::to_string(q + 1) + ")");
        }
    }
    if (corners.size() != 4 * state_bases.size() * letter_bases.size())
        throw Error("IncompleteComplex", "squares do not cover every (state, letter) corner");

    AutomatonBuilder b;
    b.name = name;
    for (const auto& base : state_bases) b.add_state(base, +1);
    for (const auto& base : state_bases) b.add_state(base, -1);
    for (const auto& base : letter_bases) b.add_letter(base, +1);
    for (const auto& base : letter_bases) b.add_letter(base, -1);
    for (const auto& [s, x, y, t] : arrows)
        for (const auto& m : square_family(s, x, y, t)) b.add_arrow(m[0], m[1], m[2], m[3]);
    return b.finish();
}

std::string serialize_complex(const Automaton& a) {
    if (!a.is_signed)
        throw Error("NotSigned", a.name + " is not a signed automaton (no square pairing)");
    std::ostringstream out;
    out << "name: " << a.name << "\n";
    out << "squares:\n";
    for (const auto& rep : square_representatives(a)) {
        auto [s, x, y, t] = rep;
        out << a.format_sym(s) << ' ' << a.format_sym(x) << ' ' << a.format_sym(y) << ' '
            << a.format_sym(t) << '\n';
    }
    return out.str();
}

}  // namespace csc
