#include "csc/rf.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "csc/bundled.hpp"

namespace csc {

namespace {

Word sym_word(Sym s) { return Word{s}; }

// Order of the permutation `w` induces on single signed letters.
int depth_one_order(const Action& act, const Word& w) {
    std::vector<Sym> letters = act.letter_symbols();
    int n = static_cast<int>(letters.size());
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[word_key(sym_word(letters[i]))] = i;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
        Word out = act.act(w, sym_word(letters[i]));
        auto it = index.find(word_key(out));
        if (it == index.end()) throw Error("InternalError", "depth-one image left the alphabet");
        perm[i] = it->second;
    }
    std::vector<char> seen(n, 0);
    long long order = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        long long len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return static_cast<int>(order);
}

}  // namespace

StabilizerPartition stabilizer_partition(const Automaton& a) {
    if (a.is_signed || a.n_letters() != 2)
        throw Error("NotBinary", "the stabilizer partition is defined for unsigned binary automata");
    Action act(a);
    Sym x = a.letters[0], y = a.letters[1];
    StabilizerPartition out;
    for (Sym s : a.states) {
        Word g = sym_word(s);
        bool fx = act.act(g, sym_word(x)) == sym_word(x);
        bool fy = act.act(g, sym_word(y)) == sym_word(y);
        if (fx != fy)
            throw Error("DichotomyViolation",
                        "state " + a.format_sym(s) + " fixes exactly one of the two letters");
        bool gx = act.act(g, sym_word(x.inverse())) == sym_word(x.inverse());
        bool gy = act.act(g, sym_word(y.inverse())) == sym_word(y.inverse());
        if (gx != gy)
            throw Error("DichotomyViolation",
                        "state " + a.format_sym(s) + " fixes exactly one of the two inverse letters");
        if (fx) out.plus.push_back(s);
        if (gx) out.minus.push_back(s);
        if (!fx && !gx) out.rest.push_back(s);
    }
    return out;
}

int dual_exponent(const Automaton& a) {
    if (a.is_signed || a.n_letters() != 2)
        throw Error("NotBinary", "the dual exponent is defined for unsigned binary automata");
    Automaton d = dual(a);
    Action act(d);
    // y^-1 x as a state word of the dual (the dual's state bases are the
    // original letters in declaration order).
    Word w{Sym(1, -1, Kind::State), Sym(0, +1, Kind::State)};
    return depth_one_order(act, w);
}

Word GeneratorMap::apply(const Word& w) const {
    Word out;
    for (Sym s : w) {
        const Word& image =
            (s.kind == Kind::State) ? state_images.at(s.base) : letter_images.at(s.base);
        if (s.sign > 0) {
            for (Sym t : image) push_reduced(out, t);
        } else {
            Word inv = inverse(image);
            for (Sym t : inv) push_reduced(out, t);
        }
    }
    return out;
}

bool GeneratorMap::fixes_states() const {
    for (size_t i = 0; i < state_images.size(); ++i)
        if (state_images[i] != Word{Sym(static_cast<int>(i), +1, Kind::State)}) return false;
    return true;
}

bool GeneratorMap::fixes_letters() const {
    for (size_t i = 0; i < letter_images.size(); ++i)
        if (letter_images[i] != Word{Sym(static_cast<int>(i), +1, Kind::Letter)}) return false;
    return true;
}

std::string format_generator_map(const Automaton& a, const GeneratorMap& map) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.state_bases.size(); ++i) {
        Sym s(static_cast<int>(i), +1, Kind::State);
        if (!first) os << "; ";
        first = false;
        os << a.format_sym(s) << " -> " << a.format_word(map.state_images.at(i));
    }
    for (size_t i = 0; i < a.letter_bases.size(); ++i) {
        Sym x(static_cast<int>(i), +1, Kind::Letter);
        if (!first) os << "; ";
        first = false;
        os << a.format_sym(x) << " -> " << a.format_word(map.letter_images.at(i));
    }
    return os.str();
}

std::optional<Embedding> subautomaton_embedding(const Automaton& a, int depth) {
    if (connected_components(a).size() != 1)
        throw Error("NotConnected", "subautomaton embeddings are searched on connected automata");
    Action act(a);
    int ns = static_cast<int>(a.n_states());

    // Declared arrows as (source index, letter, output, target index).
    struct ArrowRef {
        int src;
        Sym in, out;
        int dst;
    };
    std::vector<ArrowRef> arrows;
    for (int i = 0; i < ns; ++i)
        for (size_t j = 0; j < a.n_letters(); ++j) {
            auto [out, dst] = a.arrow_at(i, static_cast<int>(j));
            arrows.push_back({i, a.letters[j], out, a.state_index(dst)});
        }

    for (int len = 1; len <= depth; ++len) {
        std::vector<Word> cands = act.reduced_state_words(len);
        std::vector<int> pick(ns, -1);
        std::vector<char> used(cands.size(), 0);

        // Valid so far once state i receives candidate c?
        auto consistent = [&](int i) {
            for (const ArrowRef& ar : arrows) {
                if (ar.src == i) {
                    const Word& w = cands[pick[i]];
                    if (act.act(w, sym_word(ar.in)) != sym_word(ar.out)) return false;
                    Word sect = act.section(w, sym_word(ar.in));
                    if (static_cast<int>(sect.size()) != len) return false;
                    if (pick[ar.dst] >= 0 && sect != cands[pick[ar.dst]]) return false;
                } else if (ar.dst == i && pick[ar.src] >= 0) {
                    Word sect = act.section(cands[pick[ar.src]], sym_word(ar.in));
                    if (sect != cands[pick[i]]) return false;
                }
            }
            return true;
        };

        std::function<bool(int)> dfs = [&](int i) -> bool {
            if (i == ns) {
                for (int s = 0; s < ns; ++s)
                    if (cands[pick[s]] != sym_word(a.states[s])) return true;
                return false;  // the identity assignment is excluded
            }
            for (size_t c = 0; c < cands.size(); ++c) {
                if (used[c]) continue;
                pick[i] = static_cast<int>(c);
                used[c] = 1;
                if (consistent(i) && dfs(i + 1)) return true;
                used[c] = 0;
                pick[i] = -1;
            }
            return false;
        };

        if (dfs(0)) {
            Embedding e;
            e.length = len;
            for (int i = 0; i < ns; ++i) e.images.push_back(cands[pick[i]]);
            return e;
        }
    }
    return std::nullopt;
}

GeneratorMap build_endomorphism(const Automaton& a) {
    GeneratorMap m;
    for (size_t i = 0; i < a.state_bases.size(); ++i)
        m.state_images.push_back(sym_word(Sym(static_cast<int>(i), +1, Kind::State)));
    for (size_t i = 0; i < a.letter_bases.size(); ++i)
        m.letter_images.push_back(sym_word(Sym(static_cast<int>(i), +1, Kind::Letter)));

    // (1) Length-one subautomaton embedding with letters fixed (the
    // inversion-style construction), when the assignment respects signs.
    if (connected_components(a).size() == 1) {
        if (auto emb = subautomaton_embedding(a, 1)) {
            GeneratorMap cand = m;
            bool ok = true;
            for (size_t i = 0; i < a.n_states() && ok; ++i) {
                Sym s = a.states[i];
                Word image = emb->images[i];
                if (s.sign < 0) image = inverse(image);
                if (cand.state_images[s.base] ==
                    sym_word(Sym(static_cast<int>(s.base), +1, Kind::State)))
                    cand.state_images[s.base] = image;
                else if (cand.state_images[s.base] != image)
                    ok = false;  // the embedding is not sign-equivariant
            }
            if (ok && !cand.is_identity()) return cand;
        }
    }

    // (2) Binary alphabet: x -> x (y^-1 x)^n, y -> y (x^-1 y)^n with n the
    // dual exponent; states fixed.
    if (!a.is_signed && a.n_letters() == 2) {
        int n = dual_exponent(a);
        Sym x = a.letters[0], y = a.letters[1];
        m.letter_images[x.base] = concat(sym_word(x), power(Word{y.inverse(), x}, n));
        m.letter_images[y.base] = concat(sym_word(y), power(Word{x.inverse(), y}, n));
        return m;
    }

    // (3) Signed on two state bases: s -> s^(1+k) with k the least power
    // that trivializes every state generator; letters fixed.
    if (a.is_signed && a.state_bases.size() == 2) {
        Action act(a);
        for (int k = 1; k <= 16; ++k) {
            bool all = true;
            for (size_t i = 0; i < a.state_bases.size() && all; ++i)
                all = act.is_trivial(power(sym_word(Sym(static_cast<int>(i), +1, Kind::State)), k));
            if (all) {
                for (size_t i = 0; i < a.state_bases.size(); ++i)
                    m.state_images[i] =
                        power(sym_word(Sym(static_cast<int>(i), +1, Kind::State)), 1 + k);
                return m;
            }
        }
    }

    // (4) Every component a two-state pair {s, t}: the mirrored map
    // s -> s (t^-1 s)^n, t -> t (s^-1 t)^n per component; letters fixed.
    if (!a.is_signed) {
        auto comps = connected_components(a);
        bool all_two = !comps.empty();
        for (const auto& c : comps) all_two = all_two && c.size() == 2;
        if (all_two) {
            Action act(a);
            for (const auto& c : comps) {
                Sym s = c[0], t = c[1];
                int n = depth_one_order(act, Word{t.inverse(), s});
                m.state_images[s.base] = concat(sym_word(s), power(Word{t.inverse(), s}, n));
                m.state_images[t.base] = concat(sym_word(t), power(Word{s.inverse(), t}, n));
            }
            return m;
        }
    }

    throw Error("NotApplicable", "no endomorphism construction applies to this automaton");
}

MorphismReport verify_morphism(const Automaton& a, const GeneratorMap& map, size_t samples,
                               unsigned seed) {
    Action act(a);
    Pi1 pi(act);
    MorphismReport rep;

    rep.relators_ok = true;
    for (const Word& r : relator_words(a)) {
        Word image = map.apply(r);
        if (!pi.is_trivial(image)) {
            rep.relators_ok = false;
            rep.failing_relator = a.format_word(r);
            return rep;
        }
    }

    bool fs = map.fixes_states(), fl = map.fixes_letters();
    if (fs == fl) {
        // Identity map or a map moving both sides: the fixed-subgroup
        // sampling has no single moved side to test.
        rep.evidence_ok = true;
        return rep;
    }
    Kind moved = fs ? Kind::Letter : Kind::State;

    std::vector<Sym> moved_pool = (moved == Kind::Letter)
                                      ? act.letter_symbols()
                                      : act.state_generators();
    std::vector<Sym> full_pool = act.state_generators();
    {
        std::vector<Sym> ls = act.letter_symbols();
        full_pool.insert(full_pool.end(), ls.begin(), ls.end());
    }

    std::mt19937 rng(seed);
    auto random_word = [&](const std::vector<Sym>& pool, int len) {
        Word w;
        int guard = 0;
        while (static_cast<int>(w.size()) < len && ++guard < 64 * len) {
            push_reduced(w, pool[rng() % pool.size()]);
        }
        return w;
    };

    rep.samples = samples;
    size_t pure = samples / 2;
    for (size_t i = 0; i < samples; ++i) {
        int len = 1 + static_cast<int>(rng() % 12);
        Word w = (i < pure) ? random_word(moved_pool, len) : random_word(full_pool, len);
        NormalForm nf = pi.normal_form(w, Orientation::Left);
        const Word& moved_part = (moved == Kind::Letter) ? nf.letter_part : nf.state_part;
        Word image = map.apply(w);
        bool fixed_by_map = pi.is_trivial(concat(image, inverse(w)));
        if (moved_part.empty()) {
            if (!fixed_by_map) return rep;  // evidence_ok stays false
        } else {
            ++rep.moved;
            if (fixed_by_map) return rep;
            NormalForm nfi = pi.normal_form(image, Orientation::Left);
            if (nfi.state_part.size() + nfi.letter_part.size() >
                nf.state_part.size() + nf.letter_part.size())
                ++rep.lengthened;
        }
    }
    rep.evidence_ok = true;
    return rep;
}

bool PmSet::contains(Sym x, Sym y) const {
    for (const auto& p : pairs)
        if (p.first.first == x && p.first.second == y) return true;
    return false;
}

PmSet compute_Pm(const Automaton& a, int m, int max_g_len, int max_u_len) {
    if (m < 1) throw Error("BadArgument", "the power m must be at least 1");
    Action act(a);
    PmSet out;
    out.m = m;
    out.max_g_len = max_g_len;
    out.max_u_len = max_u_len;

    std::vector<Sym> letters = act.letter_symbols();
    size_t total = letters.size() * (letters.size() - 1);
    std::map<std::pair<int, int>, PmWitness> found;

    for (int gl = 1; gl <= max_g_len && found.size() < total; ++gl) {
        for (const Word& g : act.positive_state_words(gl)) {
            Word gm = power(g, m);
            for (int ul = 0; ul <= max_u_len; ++ul) {
                std::vector<Word> us =
                    (ul == 0) ? std::vector<Word>{Word{}} : act.positive_letter_words(ul);
                for (const Word& u : us) {
                    if (act.act(gm, u) != u) continue;
                    Word h = act.section(gm, u);
                    for (Sym x : letters) {
                        Sym y = act.act(h, sym_word(x))[0];
                        if (y == x) continue;
                        auto key = std::make_pair(x.code(), y.code());
                        if (!found.count(key)) found.emplace(key, PmWitness{g, u});
                    }
                }
            }
            if (found.size() >= total) break;
        }
    }
    for (const auto& [key, wit] : found) {
        Sym x = Sym::from_code(key.first, Kind::Letter);
        Sym y = Sym::from_code(key.second, Kind::Letter);
        out.pairs.push_back({{x, y}, wit});
    }
    return out;
}

namespace {

// Witness elements for the verified endomorphism, inferred from its shape.
struct WitnessPlan {
    std::vector<Word> words;
    bool disjunctive = false;
    bool known = false;
};

WitnessPlan plan_witnesses(const Automaton& a, const GeneratorMap& map) {
    WitnessPlan plan;
    size_t nb = a.state_bases.size();

    if (map.fixes_letters() && !map.fixes_states()) {
        bool inversion = true;
        for (size_t i = 0; i < nb && inversion; ++i)
            inversion = map.state_images[i] ==
                        Word{Sym(static_cast<int>(i), -1, Kind::State)};
        if (inversion && nb >= 2) {
            // s_i^2 s_{i+1}^-2, cyclically: the map inverts each of them.
            for (size_t i = 0; i < nb; ++i) {
                Sym s(static_cast<int>(i), +1, Kind::State);
                Sym t(static_cast<int>((i + 1) % nb), +1, Kind::State);
                plan.words.push_back(concat(power(sym_word(s), 2), power(sym_word(t), -2)));
            }
            plan.known = true;
            return plan;
        }
        // Common power map s -> s^(1+k)?
        int k = 0;
        bool powers = true;
        for (size_t i = 0; i < nb && powers; ++i) {
            const Word& im = map.state_images[i];
            Sym s(static_cast<int>(i), +1, Kind::State);
            if (im.size() < 2 || im != power(sym_word(s), static_cast<int>(im.size())))
                powers = false;
            else if (k == 0)
                k = static_cast<int>(im.size()) - 1;
            else if (k != static_cast<int>(im.size()) - 1)
                powers = false;
        }
        if (powers && k >= 1) {
            for (size_t i = 0; i < nb; ++i)
                plan.words.push_back(
                    power(sym_word(Sym(static_cast<int>(i), +1, Kind::State)), 2 * k));
            plan.disjunctive = true;
            plan.known = true;
            return plan;
        }
        // Per-pair mirrored map s -> s (t^-1 s)^n: witness (s^-1 t)^(2n).
        std::vector<char> done(nb, 0);
        bool mirrored = true;
        for (size_t i = 0; i < nb && mirrored; ++i) {
            if (done[i]) continue;
            const Word& im = map.state_images[i];
            Sym s(static_cast<int>(i), +1, Kind::State);
            if (im.size() < 3 || im.size() % 2 == 0 || im[0] != s) {
                mirrored = false;
                break;
            }
            Sym tinv = im[1];
            int n = static_cast<int>(im.size()) / 2;
            if (im != concat(sym_word(s), power(Word{tinv, s}, n)) || tinv.sign > 0) {
                mirrored = false;
                break;
            }
            Sym t = tinv.inverse();
            plan.words.push_back(power(Word{s.inverse(), t}, 2 * n));
            done[i] = done[t.base] = 1;
        }
        if (mirrored && !plan.words.empty()) plan.known = true;
        return plan;
    }

    if (map.fixes_states() && !map.fixes_letters() && a.letter_bases.size() == 2) {
        // Binary letter map x -> x (y^-1 x)^n: witness (x^-1 y)^(2n).
        const Word& im = map.letter_images[0];
        if (im.size() >= 3 && im.size() % 2 == 1) {
            int n = static_cast<int>(im.size()) / 2;
            Sym x(0, +1, Kind::Letter), y(1, +1, Kind::Letter);
            plan.words.push_back(power(Word{x.inverse(), y}, 2 * n));
            plan.known = true;
        }
        return plan;
    }
    return plan;
}

}  // namespace

NrfReport nrf_report(const Automaton& a) {
    NrfReport r;
    r.automaton_name = a.name.empty() ? "(unnamed)" : a.name;
    r.endomorphism = "none";
    Action act(a);
    Pi1 pi(act);

    // Premise 1: the automaton group is infinite.
    GroupOrderCaps caps;
    caps.max_elements = 5000;
    caps.max_len = 16;
    Verdict order = act.group_order(caps);
    std::string infiniteness_note;
    if (order.type == Verdict::Type::Finite) {
        r.infiniteness = "finite";
        r.verdict = "Inconclusive";
        r.reason = "the automaton group is finite (order " + std::to_string(order.count) +
                   "), so the fundamental group has a finite-index subgroup that is a product "
                   "of free groups and is residually finite";
        r.chain.push_back("group order " + std::to_string(order.count) +
                          " computed by exhaustive enumeration");
        return r;
    }
    if (order.type == Verdict::Type::InfiniteCertified) {
        r.infiniteness = "certified";
        infiniteness_note = "certified by a replication embedding with orbit growth";
    } else {
        bool cited = false;
        for (const char* name : {"aleshin", "bellaterra", "delta_d"}) {
            try {
                if (find_isomorphism(a, bundled_automaton(name))) {
                    cited = true;
                    infiniteness_note =
                        std::string("isomorphic to the bundled automaton '") + name +
                        "', whose group is infinite by published results";
                    break;
                }
            } catch (const Error&) {
                // registry lookup is best-effort
            }
        }
        if (!cited) {
            r.infiniteness = "unestablished";
            r.verdict = "Inconclusive";
            r.reason = "infiniteness of the automaton group was not established within the "
                       "search bounds";
            return r;
        }
        r.infiniteness = "cited";
    }
    r.chain.push_back("the automaton group is infinite (" + infiniteness_note + ")");

    // Premise 2: a candidate endomorphism exists and verifies.
    GeneratorMap map;
    try {
        map = build_endomorphism(a);
    } catch (const Error& e) {
        r.verdict = "Inconclusive";
        r.reason = e.what();
        return r;
    }
    r.endomorphism = format_generator_map(a, map);
    MorphismReport mrep = verify_morphism(a, map);
    r.morphism_verified = mrep.relators_ok;
    r.evidence_ok = mrep.evidence_ok;
    r.evidence_samples = mrep.samples;
    if (!mrep.relators_ok) {
        r.verdict = "Inconclusive";
        r.reason = "the candidate generator map does not preserve the relator " +
                   mrep.failing_relator;
        return r;
    }
    r.chain.push_back(
        "every defining relator maps to a trivial element, so the generator map extends to an "
        "endomorphism of the fundamental group");
    if (!mrep.evidence_ok) {
        r.verdict = "Inconclusive";
        r.reason = "the fixed-subgroup evidence sampling found a word that behaves "
                   "unexpectedly under the endomorphism";
        return r;
    }
    r.chain.push_back("sampled words outside the fixed side all moved (" +
                      std::to_string(mrep.samples) + " samples, " + std::to_string(mrep.moved) +
                      " moved, " + std::to_string(mrep.lengthened) + " strictly lengthened)");

    // Premise 3: witness elements.
    WitnessPlan plan = plan_witnesses(a, map);
    if (!plan.known) {
        r.verdict = "Inconclusive";
        r.reason = "no witness family is associated with this endomorphism shape";
        return r;
    }
    for (const Word& w : plan.words) {
        if (pi.is_trivial(w)) {
            r.verdict = "Inconclusive";
            r.reason = "a candidate witness collapsed to the identity: " + a.format_word(w);
            return r;
        }
        r.witnesses.push_back(a.format_word(w));
    }
    r.disjunctive_witnesses = plan.disjunctive;
    if (plan.disjunctive)
        r.chain.push_back(
            "every finite-index normal subgroup contains at least one of the witnesses, yet "
            "each witness is nontrivial, so no finite quotient separates all of them");
    else
        r.chain.push_back(
            "each witness lies in every finite-index normal subgroup yet is nontrivial, so no "
            "finite quotient separates it from the identity");
    r.verdict = "NonResiduallyFinite";
    return r;
}

std::string serialize_report(const NrfReport& r) {
    std::ostringstream os;
    os << "automaton: " << r.automaton_name << "\n";
    os << "verdict: " << r.verdict << "\n";
    os << "infiniteness: " << r.infiniteness << "\n";
    os << "endomorphism: " << r.endomorphism << "\n";
    os << "morphism_verified: " << (r.morphism_verified ? "yes" : "no") << "\n";
    os << "evidence_samples: " << r.evidence_samples << "\n";
    os << "evidence_ok: " << (r.evidence_ok ? "yes" : "no") << "\n";
    std::string ws;
    for (size_t i = 0; i < r.witnesses.size(); ++i) {
        if (i) ws += " | ";
        ws += r.witnesses[i];
    }
    os << "witnesses: " << (ws.empty() ? "-" : ws) << "\n";
    os << "witness_mode: " << (r.disjunctive_witnesses ? "disjunctive" : "all") << "\n";
    os << "reason: " << (r.reason.empty() ? "-" : r.reason) << "\n";
    for (size_t i = 0; i < r.chain.size(); ++i)
        os << "chain[" << i << "]: " << r.chain[i] << "\n";
    return os.str();
}

}  // namespace csc
