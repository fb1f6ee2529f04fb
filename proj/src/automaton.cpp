#include "csc/automaton.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace csc {

namespace {

Sym rekind(Sym s, Kind k) { return Sym(s.base, s.sign, k); }

std::vector<Sym> inverses_of(const std::vector<Sym>& syms, Kind k) {
    std::vector<Sym> out;
    out.reserve(syms.size());
    for (Sym s : syms) out.push_back(rekind(s, k).inverse());
    return out;
}

std::vector<Sym> rekinded(const std::vector<Sym>& syms, Kind k) {
    std::vector<Sym> out;
    out.reserve(syms.size());
    for (Sym s : syms) out.push_back(rekind(s, k));
    return out;
}

bool inverse_closed(const std::vector<Sym>& syms) {
    if (syms.empty()) return false;
    for (Sym s : syms)
        if (std::find(syms.begin(), syms.end(), s.inverse()) == syms.end()) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Automaton accessors

int Automaton::state_index(Sym s) const {
    if (s.kind != Kind::State) return -1;
    int code = s.code();
    if (code < 0 || code >= static_cast<int>(state_pos_.size())) return -1;
    return state_pos_[code];
}

int Automaton::letter_index(Sym x) const {
    if (x.kind != Kind::Letter) return -1;
    int code = x.code();
    if (code < 0 || code >= static_cast<int>(letter_pos_.size())) return -1;
    return letter_pos_[code];
}

std::pair<Sym, Sym> Automaton::step(Sym s, Sym x) const {
    int i = state_index(s);
    int j = letter_index(x);
    if (i < 0 || j < 0)
        throw Error("UnknownSymbol", "no transition domain for (" + format_sym(s) + ", " + format_sym(x) + ")");
    return arrow_at(i, j);
}

std::string Automaton::format_sym(Sym s) const {
    const auto& bases = s.kind == Kind::State ? state_bases : letter_bases;
    std::string text;
    if (s.base >= 0 && static_cast<size_t>(s.base) < bases.size())
        text = bases[static_cast<size_t>(s.base)];
    else  // symbol from outside this automaton (diagnostics must still format)
        text = (s.kind == Kind::State ? "state#" : "letter#") + std::to_string(s.base);
    if (s.sign < 0) text += "^-1";
    return text;
}

std::string Automaton::format_word(const Word& w) const {
    if (w.empty()) return "-";
    std::string text;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) text += ' ';
        text += format_sym(w[i]);
    }
    return text;
}

Sym Automaton::parse_sym(const std::string& ident, Kind kind) const {
    auto [base, sign] = split_ident(ident);
    const auto& bases = kind == Kind::State ? state_bases : letter_bases;
    auto it = std::find(bases.begin(), bases.end(), base);
    if (it == bases.end())
        throw Error("UnknownSymbol", "unknown " + std::string(kind == Kind::State ? "state" : "letter") +
                                         " '" + ident + "' in automaton " + name);
    return Sym(static_cast<int>(it - bases.begin()), sign, kind);
}

Word Automaton::parse_word(const std::string& text, Kind kind) const {
    Word w;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token == "-") continue;  // explicit empty word
        push_reduced(w, parse_sym(token, kind));
    }
    return w;
}

Word Automaton::parse_mixed_word(const std::string& text) const {
    Word w;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token == "-") continue;
        auto [base, sign] = split_ident(token);
        bool is_state = std::find(state_bases.begin(), state_bases.end(), base) != state_bases.end();
        bool is_letter = std::find(letter_bases.begin(), letter_bases.end(), base) != letter_bases.end();
        if (is_state && is_letter)
            throw Error("AmbiguousSymbol", "'" + base + "' names both a state and a letter");
        if (!is_state && !is_letter)
            throw Error("UnknownSymbol", "unknown symbol '" + token + "' in automaton " + name);
        Kind kind = is_state ? Kind::State : Kind::Letter;
        Sym s = parse_sym(token, kind);
        push_reduced(w, s);
    }
    return w;
}

bool operator==(const Automaton& a, const Automaton& b) {
    return a.name == b.name && a.state_bases == b.state_bases && a.letter_bases == b.letter_bases &&
           a.states == b.states && a.letters == b.letters && a.is_signed == b.is_signed &&
           a.out_ == b.out_ && a.dst_ == b.dst_;
}

// ---------------------------------------------------------------------------
// Builder

int AutomatonBuilder::intern(std::vector<std::string>& table, const std::string& base) {
    auto it = std::find(table.begin(), table.end(), base);
    if (it != table.end()) return static_cast<int>(it - table.begin());
    table.push_back(base);
    return static_cast<int>(table.size()) - 1;
}

void AutomatonBuilder::add_state(const std::string& base, int sign) {
    states_.push_back(Sym(intern(state_bases_, base), sign, Kind::State));
}

void AutomatonBuilder::add_letter(const std::string& base, int sign) {
    letters_.push_back(Sym(intern(letter_bases_, base), sign, Kind::Letter));
}

void AutomatonBuilder::add_state_sym(const std::vector<std::string>& bases, Sym s) {
    add_state(bases.at(static_cast<size_t>(s.base)), s.sign);
}

void AutomatonBuilder::add_letter_sym(const std::vector<std::string>& bases, Sym s) {
    add_letter(bases.at(static_cast<size_t>(s.base)), s.sign);
}

void AutomatonBuilder::add_arrow(Sym src, Sym in, Sym out, Sym dst) {
    arrows_.push_back({src, in, out, dst});
}

Automaton AutomatonBuilder::finish() {
    Automaton a;
    a.name = name;
    a.state_bases = state_bases_;
    a.letter_bases = letter_bases_;
    a.states = states_;
    a.letters = letters_;

    for (size_t i = 0; i < states_.size(); ++i)
        for (size_t j = i + 1; j < states_.size(); ++j)
            if (states_[i] == states_[j])
                throw Error("ParseError", "state '" + a.format_sym(states_[i]) + "' declared twice");
    for (size_t i = 0; i < letters_.size(); ++i)
        for (size_t j = i + 1; j < letters_.size(); ++j)
            if (letters_[i] == letters_[j])
                throw Error("ParseError", "letter '" + a.format_sym(letters_[i]) + "' declared twice");

    a.state_pos_.assign(2 * state_bases_.size(), -1);
    a.letter_pos_.assign(2 * letter_bases_.size(), -1);
    for (size_t i = 0; i < states_.size(); ++i) a.state_pos_[states_[i].code()] = static_cast<int>(i);
    for (size_t j = 0; j < letters_.size(); ++j) a.letter_pos_[letters_[j].code()] = static_cast<int>(j);

    Sym none(0, 0, Kind::State);  // sign 0 marks an unset cell
    a.out_.assign(states_.size() * letters_.size(), none);
    a.dst_.assign(states_.size() * letters_.size(), none);
    for (const auto& arrow : arrows_) {
        auto [src, in, out, dst] = arrow;
        int i = a.state_index(src);
        int j = a.letter_index(in);
        if (i < 0)
            throw Error("UnknownSymbol", "arrow uses undeclared state '" + a.format_sym(src) + "'");
        if (j < 0)
            throw Error("UnknownSymbol", "arrow uses undeclared letter '" + a.format_sym(in) + "'");
        if (a.letter_index(out) < 0)
            throw Error("UnknownSymbol", "arrow uses undeclared letter '" + a.format_sym(out) + "'");
        if (a.state_index(dst) < 0)
            throw Error("UnknownSymbol", "arrow uses undeclared state '" + a.format_sym(dst) + "'");
        size_t cell = a.idx(i, j);
        if (a.out_[cell].sign != 0)
            throw Error("DuplicateTransition", "two arrows from (" + a.format_sym(src) + ", " +
                                                   a.format_sym(in) + ")");
        a.out_[cell] = out;
        a.dst_[cell] = dst;
    }
    for (size_t i = 0; i < states_.size(); ++i)
        for (size_t j = 0; j < letters_.size(); ++j)
            if (a.out_[a.idx(static_cast<int>(i), static_cast<int>(j))].sign == 0)
                throw Error("MissingTransition", "no arrow from (" + a.format_sym(states_[i]) + ", " +
                                                     a.format_sym(letters_[j]) + ")");

    a.is_signed = inverse_closed(states_) && inverse_closed(letters_);
    if (a.is_signed) {
        // Every arrow s--(x|y)-->t requires its three companions.
        for (size_t i = 0; i < states_.size(); ++i) {
            for (size_t j = 0; j < letters_.size(); ++j) {
                Sym s = states_[i], x = letters_[j];
                auto [y, t] = a.arrow_at(static_cast<int>(i), static_cast<int>(j));
                auto expect = [&](Sym src, Sym in, Sym out, Sym dst) {
                    auto got = a.step(src, in);
                    if (got.first != out || got.second != dst)
                        throw Error("BadInverseClosure",
                                    "arrow (" + a.format_sym(s) + ", " + a.format_sym(x) +
                                        ") lacks its inverse-closure companion from (" + a.format_sym(src) +
                                        ", " + a.format_sym(in) + ")");
                };
                expect(s.inverse(), y, x, t.inverse());
                expect(t, x.inverse(), y.inverse(), s);
                expect(t.inverse(), y.inverse(), x.inverse(), s.inverse());
            }
        }
    }
    return a;
}

// ---------------------------------------------------------------------------
// File format

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::vector<std::string> tokens;
    std::istringstream in(body);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

}  // namespace

Automaton parse_automaton(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    AutomatonBuilder builder;
    int section = 0;  // 0 = expect name, 1 = alphabet, 2 = states, 3 = arrows
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (section == 0) {
            if (tokens.size() != 2 || tokens[0] != "name:")
                throw Error("ParseError", "expected 'name: <ident>', got: " + line);
            builder.name = tokens[1];
            section = 1;
        } else if (section == 1) {
            if (tokens.size() < 2 || tokens[0] != "alphabet:")
                throw Error("ParseError", "expected 'alphabet: <ident>...', got: " + line);
            for (size_t i = 1; i < tokens.size(); ++i) {
                auto [base, sign] = split_ident(tokens[i]);
                builder.add_letter(base, sign);
            }
            section = 2;
        } else if (section == 2) {
            if (tokens.size() < 2 || tokens[0] != "states:")
                throw Error("ParseError", "expected 'states: <ident>...', got: " + line);
            for (size_t i = 1; i < tokens.size(); ++i) {
                auto [base, sign] = split_ident(tokens[i]);
                builder.add_state(base, sign);
            }
            section = 3;
        } else {
            if (tokens.size() != 5 || tokens[2] != "->")
                throw Error("ParseError", "expected '<state> <letter> -> <letter> <state>', got: " + line);
            // Symbols are interned by finish(); parse against the declared
            // names via a throwaway index to report unknown names early.
            auto parse = [&](const std::string& ident, Kind kind) {
                auto [base, sign] = split_ident(ident);
                return std::make_pair(base, Sym(0, sign, kind));
            };
            auto [src_base, src] = parse(tokens[0], Kind::State);
            auto [in_base, in] = parse(tokens[1], Kind::Letter);
            auto [out_base, out] = parse(tokens[3], Kind::Letter);
            auto [dst_base, dst] = parse(tokens[4], Kind::State);
            // Resolve base indices against the builder's interned tables by
            // re-adding through a local automaton-free lookup.
            auto lookup = [](const std::vector<std::string>& bases, const std::string& base,
                             const std::string& what) {
                auto it = std::find(bases.begin(), bases.end(), base);
                if (it == bases.end())
                    throw Error("UnknownSymbol", "arrow uses undeclared " + what + " '" + base + "'");
                return static_cast<int>(it - bases.begin());
            };
            src.base = static_cast<int16_t>(lookup(builder.state_bases(), src_base, "state"));
            dst.base = static_cast<int16_t>(lookup(builder.state_bases(), dst_base, "state"));
            in.base = static_cast<int16_t>(lookup(builder.letter_bases(), in_base, "letter"));
            out.base = static_cast<int16_t>(lookup(builder.letter_bases(), out_base, "letter"));
            builder.add_arrow(src, in, out, dst);
        }
    }
    if (section == 0) throw Error("ParseError", "empty automaton file");
    if (section != 3) throw Error("ParseError", "automaton file is missing sections");
    return builder.finish();
}

std::string serialize_automaton(const Automaton& a) {
    std::ostringstream out;
    out << "name: " << a.name << "\n";
    out << "alphabet:";
    for (Sym x : a.letters) out << ' ' << a.format_sym(x);
    out << "\nstates:";
    for (Sym s : a.states) out << ' ' << a.format_sym(s);
    out << "\n";
    for (size_t i = 0; i < a.n_states(); ++i) {
        for (size_t j = 0; j < a.n_letters(); ++j) {
            auto [y, t] = a.arrow_at(static_cast<int>(i), static_cast<int>(j));
            out << a.format_sym(a.states[i]) << ' ' << a.format_sym(a.letters[j]) << " -> "
                << a.format_sym(y) << ' ' << a.format_sym(t) << "\n";
        }
    }
    return out.str();
}

std::string automaton_to_dot(const Automaton& a) {
    std::ostringstream out;
    out << "digraph \"" << a.name << "\" {\n";
    for (Sym s : a.states) out << "  \"" << a.format_sym(s) << "\";\n";
    for (size_t i = 0; i < a.n_states(); ++i) {
        for (size_t j = 0; j < a.n_letters(); ++j) {
            auto [y, t] = a.arrow_at(static_cast<int>(i), static_cast<int>(j));
            out << "  \"" << a.format_sym(a.states[i]) << "\" -> \"" << a.format_sym(t)
                << "\" [label=\"" << a.format_sym(a.letters[j]) << "|" << a.format_sym(y) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Derived automata

namespace {

// Builds a member of the derived family from A's arrows.  `state_src` and
// `letter_src` describe where the new declared lists come from; `map_arrow`
// rewrites each arrow (s, x, y, t) of A into the member's arrow.
using ArrowMap = std::array<Sym, 4> (*)(Sym, Sym, Sym, Sym);

Automaton build_member(const Automaton& a, const std::string& name, const std::vector<Sym>& new_states,
                       const std::vector<std::string>& new_state_bases, const std::vector<Sym>& new_letters,
                       const std::vector<std::string>& new_letter_bases, ArrowMap map_arrow) {
    AutomatonBuilder builder;
    builder.name = name;
    for (Sym s : new_states) builder.add_state_sym(new_state_bases, s);
    for (Sym x : new_letters) builder.add_letter_sym(new_letter_bases, x);
    for (size_t i = 0; i < a.n_states(); ++i) {
        for (size_t j = 0; j < a.n_letters(); ++j) {
            auto [y, t] = a.arrow_at(static_cast<int>(i), static_cast<int>(j));
            auto arrow = map_arrow(a.states[i], a.letters[j], y, t);
            builder.add_arrow(arrow[0], arrow[1], arrow[2], arrow[3]);
        }
    }
    return builder.finish();
}

}  // namespace

Automaton dual(const Automaton& a) {
    return build_member(
        a, a.name, inverses_of(a.letters, Kind::State), a.letter_bases, inverses_of(a.states, Kind::Letter),
        a.state_bases, +[](Sym s, Sym x, Sym y, Sym t) {
            return std::array<Sym, 4>{rekind(x, Kind::State).inverse(), rekind(s, Kind::Letter).inverse(),
                                      rekind(t, Kind::Letter).inverse(), rekind(y, Kind::State).inverse()};
        });
}

Automaton inverse_automaton(const Automaton& a) {
    // Invertibility: within each state, outputs hit every letter exactly once.
    for (size_t i = 0; i < a.n_states(); ++i) {
        std::vector<int> seen(2 * a.letter_bases.size(), 0);
        for (size_t j = 0; j < a.n_letters(); ++j) seen[a.arrow_at(static_cast<int>(i), static_cast<int>(j)).first.code()]++;
        for (size_t j = 0; j < a.n_letters(); ++j) {
            Sym y = a.letters[j];
            if (seen[y.code()] != 1)
                throw Error("NotInvertible", "state '" + a.format_sym(a.states[i]) + "' outputs '" +
                                                 a.format_sym(y) + "' " + std::to_string(seen[y.code()]) +
                                                 " times");
        }
    }
    return build_member(
        a, a.name, inverses_of(a.states, Kind::State), a.state_bases, a.letters, a.letter_bases,
        +[](Sym s, Sym x, Sym y, Sym t) {
            return std::array<Sym, 4>{s.inverse(), y, x, t.inverse()};
        });
}

std::vector<DerivedMember> derived_family(const Automaton& a) {
    struct Spec {
        const char* tag;
        std::vector<Sym> states;
        const std::vector<std::string>* state_bases;
        std::vector<Sym> letters;
        const std::vector<std::string>* letter_bases;
        ArrowMap map;
    };
    auto S = a.states;
    auto X = rekinded(a.letters, Kind::Letter);
    auto Sinv = inverses_of(a.states, Kind::State);
    auto Xinv = inverses_of(a.letters, Kind::Letter);
    auto S_as_letters = rekinded(a.states, Kind::Letter);
    auto Sinv_as_letters = inverses_of(a.states, Kind::Letter);
    auto X_as_states = rekinded(a.letters, Kind::State);
    auto Xinv_as_states = inverses_of(a.letters, Kind::State);

    std::vector<Spec> specs;
    specs.push_back({"A", S, &a.state_bases, X, &a.letter_bases, +[](Sym s, Sym x, Sym y, Sym t) {
                         return std::array<Sym, 4>{s, x, y, t};
                     }});
    specs.push_back({"dA", Xinv_as_states, &a.letter_bases, Sinv_as_letters, &a.state_bases,
                     +[](Sym s, Sym x, Sym y, Sym t) {
                         return std::array<Sym, 4>{rekind(x, Kind::State).inverse(),
                                                   rekind(s, Kind::Letter).inverse(),
                                                   rekind(t, Kind::Letter).inverse(),
                                                   rekind(y, Kind::State).inverse()};
                     }});
    specs.push_back({"iA", Sinv, &a.state_bases, X, &a.letter_bases, +[](Sym s, Sym x, Sym y, Sym t) {
                         return std::array<Sym, 4>{s.inverse(), y, x, t.inverse()};
                     }});
    specs.push_back({"idA", X_as_states, &a.letter_bases, Sinv_as_letters, &a.state_bases,
                     +[](Sym s, Sym x, Sym y, Sym t) {
                         return std::array<Sym, 4>{rekind(x, Kind::State), rekind(t, Kind::Letter).inverse(),
                                                   rekind(s, Kind::Letter).inverse(), rekind(y, Kind::State)};
                     }});
    specs.push_back({"diA", Xinv_as_states, &a.letter_bases, S_as_letters, &a.state_bases,
                     +[](Sym s, Sym x, Sym y, Sym t) {
                         return std::array<Sym, 4>{rekind(y, Kind::State).inverse(), rekind(s, Kind::Letter),
                                                   rekind(t, Kind::Letter), rekind(x, Kind::State).inverse()};
                     }});
    specs.push_back({"didA", S, &a.state_bases, Xinv, &a.letter_bases, +[](Sym s, Sym x, Sym y, Sym t) {
                         return std::array<Sym, 4>{t, x.inverse(), y.inverse(), s};
                     }});
    specs.push_back({"idiA", X_as_states, &a.letter_bases, S_as_letters, &a.state_bases,
                     +[](Sym s, Sym x, Sym y, Sym t) {
                         return std::array<Sym, 4>{rekind(y, Kind::State), rekind(t, Kind::Letter),
                                                   rekind(s, Kind::Letter), rekind(x, Kind::State)};
                     }});
    specs.push_back({"ididA", Sinv, &a.state_bases, Xinv, &a.letter_bases, +[](Sym s, Sym x, Sym y, Sym t) {
                         return std::array<Sym, 4>{t.inverse(), y.inverse(), x.inverse(), s.inverse()};
                     }});

    std::vector<DerivedMember> family;
    for (auto& spec : specs) {
        DerivedMember member;
        member.tag = spec.tag;
        try {
            member.automaton =
                build_member(a, a.name, spec.states, *spec.state_bases, spec.letters, *spec.letter_bases, spec.map);
        } catch (const Error& e) {
            member.error_code = "NotInvertible";
        }
        family.push_back(std::move(member));
    }
    return family;
}

// ---------------------------------------------------------------------------
// Link graph and bireversibility

LinkGraph link_graph(const Automaton& a) {
    LinkGraph g;
    for (size_t b = 0; b < a.state_bases.size(); ++b) {
        g.left.push_back(Sym(static_cast<int>(b), +1, Kind::State));
        g.left.push_back(Sym(static_cast<int>(b), -1, Kind::State));
    }
    for (size_t b = 0; b < a.letter_bases.size(); ++b) {
        g.right.push_back(Sym(static_cast<int>(b), +1, Kind::Letter));
        g.right.push_back(Sym(static_cast<int>(b), -1, Kind::Letter));
    }
    auto add = [&g](Sym s, Sym x) { g.multiplicity[{s.code(), x.code()}]++; };
    for (size_t i = 0; i < a.n_states(); ++i) {
        for (size_t j = 0; j < a.n_letters(); ++j) {
            Sym s = a.states[i], x = a.letters[j];
            auto [y, t] = a.arrow_at(static_cast<int>(i), static_cast<int>(j));
            if (a.is_signed) {
                // An inverse-closed table lists each square four times; the
                // corner at the arrow's source-input represents it once.
                add(s, x);
            } else {
                add(s, x);
                add(s.inverse(), y);
                add(t, x.inverse());
                add(t.inverse(), y.inverse());
            }
        }
    }
    return g;
}

bool LinkGraph::complete_bipartite_simple() const {
    for (Sym s : left)
        for (Sym x : right) {
            auto it = multiplicity.find({s.code(), x.code()});
            if (it == multiplicity.end() || it->second != 1) return false;
        }
    return edge_count() == static_cast<int>(left.size() * right.size());
}

int LinkGraph::edge_count() const {
    int n = 0;
    for (const auto& [edge, count] : multiplicity) n += count;
    return n;
}

std::string link_graph_to_dot(const Automaton& a) {
    LinkGraph g = link_graph(a);
    std::ostringstream out;
    out << "graph \"link_" << a.name << "\" {\n";
    for (const auto& [edge, count] : g.multiplicity) {
        Sym s = Sym::from_code(edge.first, Kind::State);
        Sym x = Sym::from_code(edge.second, Kind::Letter);
        for (int c = 0; c < count; ++c)
            out << "  \"" << a.format_sym(s) << "\" -- \"" << a.format_sym(x) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

bool is_bireversible(const Automaton& a) {
    bool by_link = link_graph(a).complete_bipartite_simple();
    bool by_family = true;
    for (const auto& member : derived_family(a))
        if (!member.automaton) by_family = false;
    if (by_link != by_family)
        throw Error("InternalDisagreement",
                    "link-graph and eight-automata bireversibility checks disagree on " + a.name);
    return by_link;
}

// ---------------------------------------------------------------------------
// Signed closure

Automaton pm_closure(const Automaton& a) {
    if (a.is_signed) return a;
    if (!is_bireversible(a)) throw Error("NotBireversible", a.name + " is not bireversible");
    AutomatonBuilder builder;
    builder.name = a.name;
    for (Sym s : a.states) builder.add_state_sym(a.state_bases, s);
    for (Sym s : a.states) builder.add_state_sym(a.state_bases, s.inverse());
    for (Sym x : a.letters) builder.add_letter_sym(a.letter_bases, x);
    for (Sym x : a.letters) builder.add_letter_sym(a.letter_bases, x.inverse());
    for (size_t i = 0; i < a.n_states(); ++i) {
        for (size_t j = 0; j < a.n_letters(); ++j) {
            Sym s = a.states[i], x = a.letters[j];
            auto [y, t] = a.arrow_at(static_cast<int>(i), static_cast<int>(j));
            builder.add_arrow(s, x, y, t);
            builder.add_arrow(s.inverse(), y, x, t.inverse());
            builder.add_arrow(t, x.inverse(), y.inverse(), s);
            builder.add_arrow(t.inverse(), y.inverse(), x.inverse(), s.inverse());
        }
    }
    return builder.finish();
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Candidate images for one base: the declared symbols first (their order),
// then the inverses of declared symbols that are not themselves declared.
std::vector<Sym> image_candidates(const std::vector<Sym>& declared) {
    std::vector<Sym> candidates = declared;
    for (Sym s : declared)
        if (std::find(candidates.begin(), candidates.end(), s.inverse()) == candidates.end())
            candidates.push_back(s.inverse());
    return candidates;
}

Sym apply_base_map(const std::vector<Sym>& map, Sym s) {
    Sym image = map[static_cast<size_t>(s.base)];
    return s.sign > 0 ? image : image.inverse();
}

}  // namespace

std::optional<Isomorphism> find_isomorphism(const Automaton& a, const Automaton& b, bool fix_alphabet) {
    if (a.state_bases.size() != b.state_bases.size() || a.letter_bases.size() != b.letter_bases.size())
        return std::nullopt;
    if (a.n_states() != b.n_states() || a.n_letters() != b.n_letters()) return std::nullopt;
    if (fix_alphabet && a.letter_bases != b.letter_bases) return std::nullopt;

    size_t ns = a.state_bases.size(), nl = a.letter_bases.size();
    std::vector<Sym> state_candidates = image_candidates(b.states);
    std::vector<Sym> letter_candidates = image_candidates(b.letters);
    std::vector<Sym> smap(ns), lmap(nl);

    auto consistent = [&]() {
        // Declared sets must map onto declared sets.
        for (Sym s : a.states)
            if (b.state_index(apply_base_map(smap, s)) < 0) return false;
        for (Sym x : a.letters)
            if (b.letter_index(apply_base_map(lmap, x)) < 0) return false;
        for (size_t i = 0; i < a.n_states(); ++i) {
            for (size_t j = 0; j < a.n_letters(); ++j) {
                Sym s = a.states[i], x = a.letters[j];
                auto [y, t] = a.arrow_at(static_cast<int>(i), static_cast<int>(j));
                auto [y2, t2] = b.step(apply_base_map(smap, s), apply_base_map(lmap, x));
                if (y2 != apply_base_map(lmap, y) || t2 != apply_base_map(smap, t)) return false;
            }
        }
        return true;
    };

    // Lexicographically first assignment in candidate order, states before
    // letters; base images must be base-injective.
    std::optional<Isomorphism> found;
    auto search_letters = [&](auto&& self, size_t li) -> bool {
        if (li == nl) return consistent();
        for (Sym candidate : letter_candidates) {
            bool taken = false;
            for (size_t k = 0; k < li; ++k)
                if (lmap[k].base == candidate.base) taken = true;
            if (taken) continue;
            lmap[li] = candidate;
            if (self(self, li + 1)) return true;
        }
        return false;
    };
    auto search_states = [&](auto&& self, size_t si) -> bool {
        if (si == ns) {
            if (fix_alphabet) {
                for (size_t k = 0; k < nl; ++k) lmap[k] = Sym(static_cast<int>(k), +1, Kind::Letter);
                return consistent();
            }
            return search_letters(search_letters, 0);
        }
        for (Sym candidate : state_candidates) {
            bool taken = false;
            for (size_t k = 0; k < si; ++k)
                if (smap[k].base == candidate.base) taken = true;
            if (taken) continue;
            smap[si] = candidate;
            if (self(self, si + 1)) return true;
        }
        return false;
    };
    if (search_states(search_states, 0)) {
        Isomorphism iso;
        iso.state_map = smap;
        iso.letter_map = lmap;
        return iso;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Minimization, union, components

MinimizeResult minimize(const Automaton& a) {
    size_t n = a.n_states();
    // Moore refinement: start from output rows, refine by successor classes.
    std::vector<int> cls(n, 0);
    {
        std::map<std::string, int> index;
        for (size_t i = 0; i < n; ++i) {
            std::string sig;
            for (size_t j = 0; j < a.n_letters(); ++j)
                sig += std::to_string(a.arrow_at(static_cast<int>(i), static_cast<int>(j)).first.code()) + ",";
            auto [it, fresh] = index.try_emplace(sig, static_cast<int>(index.size()));
            cls[i] = it->second;
        }
    }
    for (;;) {
        std::map<std::string, int> index;
        std::vector<int> next(n, 0);
        for (size_t i = 0; i < n; ++i) {
            std::string sig = std::to_string(cls[i]);
            for (size_t j = 0; j < a.n_letters(); ++j) {
                Sym t = a.arrow_at(static_cast<int>(i), static_cast<int>(j)).second;
                sig += "," + std::to_string(cls[a.state_index(t)]);
            }
            auto [it, fresh] = index.try_emplace(sig, static_cast<int>(index.size()));
            next[i] = it->second;
        }
        if (next == cls) break;
        cls = next;
    }

    std::vector<int> rep_of_class(n, -1);
    for (size_t i = 0; i < n; ++i)
        if (rep_of_class[cls[i]] < 0) rep_of_class[cls[i]] = static_cast<int>(i);

    AutomatonBuilder builder;
    builder.name = a.name;
    std::vector<size_t> reps;
    for (size_t i = 0; i < n; ++i)
        if (rep_of_class[cls[i]] == static_cast<int>(i)) {
            builder.add_state_sym(a.state_bases, a.states[i]);
            reps.push_back(i);
        }
    for (Sym x : a.letters) builder.add_letter_sym(a.letter_bases, x);
    // Dropped classes leave gaps in the base numbering, so arrow symbols must
    // be rebased onto the builder's interned list.
    auto rebase = [&](Sym s) {
        const std::string& base = a.state_bases[static_cast<size_t>(s.base)];
        const auto& interned = builder.state_bases();
        auto it = std::find(interned.begin(), interned.end(), base);
        return Sym(static_cast<int>(it - interned.begin()), s.sign, Kind::State);
    };
    for (size_t i : reps) {
        for (size_t j = 0; j < a.n_letters(); ++j) {
            auto [y, t] = a.arrow_at(static_cast<int>(i), static_cast<int>(j));
            Sym trep = a.states[rep_of_class[cls[a.state_index(t)]]];
            builder.add_arrow(rebase(a.states[i]), a.letters[j], y, rebase(trep));
        }
    }
    MinimizeResult result{builder.finish(), {}};
    for (size_t i = 0; i < n; ++i)
        result.merge_map.push_back({a.states[i], a.states[rep_of_class[cls[i]]]});
    return result;
}

Automaton union_automata(const Automaton& a, const Automaton& b) {
    if (a.letter_bases != b.letter_bases || a.letters != b.letters)
        throw Error("AlphabetMismatch", "union requires identical alphabets");
    for (const std::string& base : a.state_bases)
        if (std::find(b.state_bases.begin(), b.state_bases.end(), base) != b.state_bases.end())
            throw Error("NameCollision", "state base '" + base + "' appears in both automata");
    AutomatonBuilder builder;
    builder.name = a.name + "_" + b.name;
    for (Sym s : a.states) builder.add_state_sym(a.state_bases, s);
    for (Sym s : b.states) builder.add_state_sym(b.state_bases, s);
    for (Sym x : a.letters) builder.add_letter_sym(a.letter_bases, x);
    auto add_arrows = [&builder](const Automaton& m, size_t state_base_offset) {
        for (size_t i = 0; i < m.n_states(); ++i) {
            for (size_t j = 0; j < m.n_letters(); ++j) {
                auto [y, t] = m.arrow_at(static_cast<int>(i), static_cast<int>(j));
                auto shift = [&](Sym s) {
                    return Sym(s.base + static_cast<int>(state_base_offset), s.sign, Kind::State);
                };
                builder.add_arrow(shift(m.states[i]), m.letters[j], y, shift(t));
            }
        }
    };
    add_arrows(a, 0);
    add_arrows(b, a.state_bases.size());
    return builder.finish();
}

Automaton rename_states(const Automaton& a, const std::string& suffix) {
    AutomatonBuilder builder;
    builder.name = a.name + suffix;
    std::vector<std::string> renamed;
    for (const std::string& base : a.state_bases) renamed.push_back(base + suffix);
    for (Sym s : a.states) builder.add_state_sym(renamed, s);
    for (Sym x : a.letters) builder.add_letter_sym(a.letter_bases, x);
    for (size_t i = 0; i < a.n_states(); ++i) {
        for (size_t j = 0; j < a.n_letters(); ++j) {
            auto [y, t] = a.arrow_at(static_cast<int>(i), static_cast<int>(j));
            builder.add_arrow(a.states[i], a.letters[j], y, t);
        }
    }
    return builder.finish();
}

std::vector<std::vector<Sym>> connected_components(const Automaton& a) {
    size_t n = a.n_states();
    std::vector<std::vector<int>> adjacent(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < a.n_letters(); ++j) {
            int t = a.state_index(a.arrow_at(static_cast<int>(i), static_cast<int>(j)).second);
            adjacent[i].push_back(t);
            adjacent[t].push_back(static_cast<int>(i));
        }
    }
    std::vector<std::vector<Sym>> components;
    std::vector<bool> seen(n, false);
    for (size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> members;
        std::queue<int> queue;
        queue.push(static_cast<int>(i));
        seen[i] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            members.push_back(v);
            for (int w : adjacent[v])
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push(w);
                }
        }
        std::sort(members.begin(), members.end());
        std::vector<Sym> syms;
        for (int v : members) syms.push_back(a.states[v]);
        components.push_back(std::move(syms));
    }
    return components;
}

}  // namespace csc
