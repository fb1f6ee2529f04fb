// csc: command-line surface over the automaton / square-complex library.
//
// Exit codes: 0 = success (including negative verdicts such as "false"),
// 1 = reproduce ran and at least one experiment failed, 2 = input or usage
// error (diagnosed as `error[CODE]: message` on stderr).
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "csc/bundled.hpp"
#include "csc/enumerate.hpp"
#include "csc/experiments.hpp"
#include "csc/rf.hpp"

namespace {

using namespace csc;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("FileNotFound", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Automaton load_automaton(const std::string& spec) {
    if (spec.rfind("bundled:", 0) == 0) return bundled_automaton(spec.substr(8));
    std::string text = slurp(spec);
    if (text.find("squares:") != std::string::npos) return parse_complex(text);
    return parse_automaton(text);
}

Presentation load_presentation(const std::string& spec) {
    if (spec.rfind("bundled:", 0) == 0) return bundled_presentation(spec.substr(8));
    return parse_presentation(slurp(spec));
}

// A word over a presentation's generators ("^-1" marks inverses).
Presentation::GWord parse_gword(const Presentation& p, const std::string& text) {
    Presentation::GWord out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int sign = +1;
        std::string base = tok;
        auto caret = tok.rfind("^-1");
        if (caret != std::string::npos && caret + 3 == tok.size()) {
            sign = -1;
            base = tok.substr(0, caret);
        }
        auto it = std::find(p.generators.begin(), p.generators.end(), base);
        if (it == p.generators.end())
            throw Error("UnknownSymbol", "generator '" + base + "' is not in the presentation");
        out.emplace_back(static_cast<int>(it - p.generators.begin()), sign);
    }
    return out;
}

// "gen -> word, gen -> word, ..."; unmentioned generators map to themselves.
GeneratorMap parse_generator_map(const Automaton& a, const std::string& text) {
    GeneratorMap map;
    for (size_t i = 0; i < a.state_bases.size(); ++i)
        map.state_images.push_back({Sym(static_cast<int>(i), +1, Kind::State)});
    for (size_t i = 0; i < a.letter_bases.size(); ++i)
        map.letter_images.push_back({Sym(static_cast<int>(i), +1, Kind::Letter)});
    std::string entry;
    std::istringstream entries(text);
    while (std::getline(entries, entry, ',')) {
        auto arrow = entry.find("->");
        if (arrow == std::string::npos)
            throw Error("BadMapSyntax", "expected 'generator -> word' in '" + entry + "'");
        std::istringstream lhs_in(entry.substr(0, arrow));
        std::string lhs;
        if (!(lhs_in >> lhs))
            throw Error("BadMapSyntax", "missing generator before '->' in '" + entry + "'");
        std::string rest;
        if (lhs_in >> rest)
            throw Error("BadMapSyntax", "one generator per entry, got extra '" + rest + "'");
        std::string rhs = entry.substr(arrow + 2);
        Sym gen;
        try {
            gen = a.parse_sym(lhs, Kind::State);
        } catch (const Error&) {
            gen = a.parse_sym(lhs, Kind::Letter);
        }
        if (gen.sign < 0)
            throw Error("BadMapSyntax", "map entries are given on positive generators");
        if (gen.kind == Kind::State)
            map.state_images[gen.base] = a.parse_word(rhs, Kind::State);
        else
            map.letter_images[gen.base] = a.parse_word(rhs, Kind::Letter);
    }
    return map;
}

std::string format_verdict(const Automaton& a, const Verdict& v) {
    switch (v.type) {
        case Verdict::Type::Finite:
            return "Finite(" + std::to_string(v.count) + ")";
        case Verdict::Type::InfiniteCertified: {
            std::string s = "InfiniteCertified";
            if (v.certificate) {
                const ReplicationCert& c = *v.certificate;
                s += "(letters^" + std::to_string(c.sigma_sign * c.k) + ", states^" +
                     std::to_string(c.tau_sign * c.m) + ", pump=" + a.format_sym(c.pumped_state) +
                     ")";
            }
            return s;
        }
        default:
            return "LowerBound(>=" + std::to_string(v.count) + ")";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculus of bireversible automata and complete square complexes"};
    app.require_subcommand(1);
    std::ostream& out = std::cout;
    int exit_code = 0;

    // Shared option storage (only one subcommand runs per invocation).
    std::string aut_spec, aut2_spec, pres_spec, word, on, left, top, map_text, format = "text";
    std::string orientation = "left", policy_name_ = "dual", mode = "signed", name;
    std::vector<std::string> relators;
    int max_n = 100, max_level = 5, depth = 1, m_power = 1, power = 1;
    int max_g = 8, max_u = 8, max_cn = 6, max_cm = 6, n_states = 3, n_letters = 2;
    int max_k = 4, max_m = 4, witness_len = 4;
    unsigned seed = 0;
    size_t samples = 1000, cap = 1000000, max_elements = 100000, max_len = 24;
    long long orbit_cap = 100000;
    bool fix_alphabet = false, vh4 = false;

    auto add_automaton = [&](CLI::App* cmd) {
        cmd->add_option("--automaton", aut_spec, "automaton file, complex file, or bundled:NAME")
            ->required();
    };
    auto add_format = [&](CLI::App* cmd, const std::string& choices) {
        cmd->add_option("--format", format, "output format (" + choices + ")");
    };

    // ---- single-automaton inspection ---------------------------------------
    auto* c_validate = app.add_subcommand("validate", "parse and validate an automaton");
    add_automaton(c_validate);
    c_validate->callback([&] {
        Automaton a = load_automaton(aut_spec);
        out << "valid: " << a.name << " (" << a.n_states() << " states, " << a.n_letters()
            << " letters" << (a.is_signed ? ", signed" : "") << ")\n";
    });

    auto* c_dual = app.add_subcommand("dual", "print the dual automaton");
    add_automaton(c_dual);
    add_format(c_dual, "text|dot");
    c_dual->callback([&] {
        Automaton d = dual(load_automaton(aut_spec));
        out << (format == "dot" ? automaton_to_dot(d) : serialize_automaton(d));
    });

    auto* c_inverse = app.add_subcommand("inverse", "print the inverse automaton");
    add_automaton(c_inverse);
    add_format(c_inverse, "text|dot");
    c_inverse->callback([&] {
        Automaton i = inverse_automaton(load_automaton(aut_spec));
        out << (format == "dot" ? automaton_to_dot(i) : serialize_automaton(i));
    });

    auto* c_bireversible = app.add_subcommand("bireversible", "report bireversibility");
    add_automaton(c_bireversible);
    c_bireversible->callback([&] {
        out << (is_bireversible(load_automaton(aut_spec)) ? "true" : "false") << "\n";
    });

    auto* c_family = app.add_subcommand("family", "the eight dual/inverse derivatives");
    add_automaton(c_family);
    add_format(c_family, "text|tsv");
    c_family->callback([&] {
        for (const DerivedMember& m : derived_family(load_automaton(aut_spec))) {
            if (format == "tsv") {
                out << m.tag << "\t" << (m.automaton ? "ok" : m.error_code) << "\n";
            } else if (m.automaton) {
                out << m.tag << ": ok (" << m.automaton->n_states() << " states, "
                    << m.automaton->n_letters() << " letters)\n";
            } else {
                out << m.tag << ": undefined (" << m.error_code << ")\n";
            }
        }
    });

    auto* c_iso = app.add_subcommand("iso", "search for an isomorphism between two automata");
    add_automaton(c_iso);
    c_iso->add_option("--automaton2", aut2_spec, "second automaton")->required();
    c_iso->add_flag("--fix-alphabet", fix_alphabet, "require the identity letter map");
    c_iso->callback([&] {
        Automaton a = load_automaton(aut_spec), b = load_automaton(aut2_spec);
        auto iso = find_isomorphism(a, b, fix_alphabet);
        if (!iso) {
            out << "none\n";
            return;
        }
        for (size_t i = 0; i < iso->state_map.size(); ++i)
            out << a.state_bases[i] << " -> " << b.format_sym(iso->state_map[i]) << "\n";
        for (size_t i = 0; i < iso->letter_map.size(); ++i)
            out << a.letter_bases[i] << " -> " << b.format_sym(iso->letter_map[i]) << "\n";
    });

    auto* c_minimize = app.add_subcommand("minimize", "merge equivalent states");
    add_automaton(c_minimize);
    add_format(c_minimize, "text|dot");
    c_minimize->callback([&] {
        MinimizeResult r = minimize(load_automaton(aut_spec));
        out << (format == "dot" ? automaton_to_dot(r.automaton) : serialize_automaton(r.automaton));
    });

    // ---- action -------------------------------------------------------------
    auto* c_act = app.add_subcommand("act", "apply a state word to a letter word");
    add_automaton(c_act);
    c_act->add_option("--word", word, "state word")->required();
    c_act->add_option("--on", on, "letter word")->required();
    c_act->callback([&] {
        Automaton a = load_automaton(aut_spec);
        Action act(a);
        out << a.format_word(act.act(a.parse_word(word, Kind::State),
                                     a.parse_word(on, Kind::Letter)))
            << "\n";
    });

    auto* c_section = app.add_subcommand("section", "the state word left after processing");
    add_automaton(c_section);
    c_section->add_option("--word", word, "state word")->required();
    c_section->add_option("--on", on, "letter word")->required();
    c_section->callback([&] {
        Automaton a = load_automaton(aut_spec);
        Action act(a);
        out << a.format_word(act.section(a.parse_word(word, Kind::State),
                                         a.parse_word(on, Kind::Letter)))
            << "\n";
    });

    auto* c_trivial = app.add_subcommand("trivial", "does the state word act trivially?");
    add_automaton(c_trivial);
    c_trivial->add_option("--word", word, "state word")->required();
    c_trivial->callback([&] {
        Automaton a = load_automaton(aut_spec);
        Action act(a);
        out << (act.is_trivial(a.parse_word(word, Kind::State)) ? "true" : "false") << "\n";
    });

    auto* c_order = app.add_subcommand("order", "order of a state word in the group");
    add_automaton(c_order);
    c_order->add_option("--word", word, "state word")->required();
    c_order->add_option("--max", max_n, "give up beyond this power");
    c_order->callback([&] {
        Automaton a = load_automaton(aut_spec);
        Action act(a);
        OrderResult r = act.element_order(a.parse_word(word, Kind::State), max_n);
        if (r.exact)
            out << r.value << "\n";
        else
            out << ">" << r.value << "\n";
    });

    auto* c_orbit = app.add_subcommand("orbit", "orbit of a letter word under the group");
    add_automaton(c_orbit);
    c_orbit->add_option("--word", word, "letter word seed")->required();
    c_orbit->add_option("--max", cap, "orbit size cap");
    add_format(c_orbit, "text|tsv");
    c_orbit->callback([&] {
        Automaton a = load_automaton(aut_spec);
        Action act(a);
        std::vector<Word> gens;
        for (Sym s : act.state_generators())
            if (s.sign > 0) gens.push_back({s});
        auto orb = act.orbit(a.parse_word(word, Kind::Letter), gens, cap);
        if (format != "tsv") out << "size: " << orb.size() << "\n";
        for (const Word& w : orb) out << a.format_word(w) << "\n";
    });

    auto* c_transitive = app.add_subcommand("transitive", "level transitivity up to a depth");
    add_automaton(c_transitive);
    c_transitive->add_option("--max", max_level, "deepest level");
    c_transitive->callback([&] {
        Automaton a = load_automaton(aut_spec);
        Action act(a);
        auto lt = act.level_transitive(max_level);
        for (int n = 1; n < static_cast<int>(lt.size()); ++n)
            out << "level " << n << ": " << (lt[n] ? "true" : "false") << "\n";
    });

    auto* c_group = app.add_subcommand("group-order", "finite order, certificate, or lower bound");
    add_automaton(c_group);
    c_group->add_option("--max-elements", max_elements, "element budget");
    c_group->add_option("--max-len", max_len, "longest representative");
    c_group->callback([&] {
        Automaton a = load_automaton(aut_spec);
        Action act(a);
        out << format_verdict(a, act.group_order({max_elements, max_len})) << "\n";
    });

    auto* c_replicate = app.add_subcommand("replicate", "search for a replication certificate");
    add_automaton(c_replicate);
    c_replicate->add_option("--max-k", max_k, "largest letter power");
    c_replicate->add_option("--max-m", max_m, "largest state power");
    c_replicate->add_option("--witness-len", witness_len, "longest base word");
    c_replicate->add_option("--orbit-cap", orbit_cap, "orbit budget");
    c_replicate->callback([&] {
        Automaton a = load_automaton(aut_spec);
        Action act(a);
        auto cert = act.replication_certificate(
            {max_k, max_m, witness_len, orbit_cap});
        if (!cert) {
            out << "none\n";
            return;
        }
        out << "letters^" << cert->sigma_sign * cert->k << " states^" << cert->tau_sign * cert->m
            << " pump=" << a.format_sym(cert->pumped_state)
            << " base=" << a.format_word(cert->base_word) << " orbit=" << cert->base_orbit << "\n";
    });

    // ---- fundamental group --------------------------------------------------
    auto* c_presentation = app.add_subcommand("presentation", "the square presentation");
    add_automaton(c_presentation);
    c_presentation->callback(
        [&] { out << serialize_presentation(presentation(load_automaton(aut_spec))); });

    auto* c_nf = app.add_subcommand("nf", "normal form of a mixed word");
    add_automaton(c_nf);
    c_nf->add_option("--word", word, "mixed state/letter word")->required();
    c_nf->add_option("--orientation", orientation, "left|right");
    c_nf->callback([&] {
        Automaton a = load_automaton(aut_spec);
        Action act(a);
        Pi1 pi1(act);
        if (orientation != "left" && orientation != "right")
            throw Error("BadArgument", "orientation must be left or right");
        NormalForm nf = pi1.normal_form(a.parse_mixed_word(word), orientation == "left"
                                                                      ? Orientation::Left
                                                                      : Orientation::Right);
        out << "state_part: " << a.format_word(nf.state_part) << "\n";
        out << "letter_part: " << a.format_word(nf.letter_part) << "\n";
    });

    auto* c_pi1 = app.add_subcommand("pi1-trivial", "is the mixed word trivial in pi1?");
    add_automaton(c_pi1);
    c_pi1->add_option("--word", word, "mixed state/letter word")->required();
    c_pi1->callback([&] {
        Automaton a = load_automaton(aut_spec);
        Action act(a);
        Pi1 pi1(act);
        out << (pi1.is_trivial(a.parse_mixed_word(word)) ? "true" : "false") << "\n";
    });

    auto* c_commutes = app.add_subcommand("commutes", "which powers of two words commute");
    add_automaton(c_commutes);
    c_commutes->add_option("--word", word, "first word (mixed)")->required();
    c_commutes->add_option("--on", on, "second word (mixed)")->required();
    c_commutes->add_option("--max-n", max_cn, "powers of the first word");
    c_commutes->add_option("--max-m", max_cm, "powers of the second word");
    c_commutes->callback([&] {
        Automaton a = load_automaton(aut_spec);
        Action act(a);
        Pi1 pi1(act);
        CommuteReport r =
            pi1.commutes(a.parse_mixed_word(word), a.parse_mixed_word(on), max_cn, max_cm);
        for (const auto& row : r.commuting) {
            for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << (row[j] ? 1 : 0);
            out << "\n";
        }
        out << "any_commuting: " << (r.any_commuting ? "true" : "false") << "\n";
    });

    auto* c_tiling = app.add_subcommand("tiling", "a periodic (torus) tiling pair");
    add_automaton(c_tiling);
    c_tiling->callback([&] {
        Automaton a = load_automaton(aut_spec);
        Action act(a);
        Pi1 pi1(act);
        PeriodicPair p = pi1.periodic_tiling();
        out << "state_word: " << a.format_word(p.w) << "\n";
        out << "letter_word: " << a.format_word(p.u) << "\n";
        out << "cycle_length: " << p.cycle_length << "\n";
    });

    auto* c_rect = app.add_subcommand("rect", "tile a rectangle from its left and top sides");
    add_automaton(c_rect);
    c_rect->add_option("--left", left, "state word (left side, bottom to top)")->required();
    c_rect->add_option("--top", top, "letter word (top side)")->required();
    c_rect->callback([&] {
        Automaton a = load_automaton(aut_spec);
        Action act(a);
        Pi1 pi1(act);
        Rectangle r = pi1.tile_rectangle(a.parse_word(left, Kind::State),
                                         a.parse_word(top, Kind::Letter));
        out << render_rectangle(a, r);
        out << "bottom: " << a.format_word(r.bottom_word()) << "\n";
        out << "right: " << a.format_word(r.right_word()) << "\n";
    });

    auto* c_tiles = app.add_subcommand("tiles", "the Wang tileset of the automaton");
    add_automaton(c_tiles);
    c_tiles->add_option("--mode", mode, "signed|plain tile set");
    c_tiles->callback([&] {
        Automaton a = load_automaton(aut_spec);
        if (mode != "signed" && mode != "plain")
            throw Error("BadArgument", "mode must be signed or plain");
        out << render_tiles(a, tileset(a, mode == "signed"));
    });

    auto* c_abel = app.add_subcommand("abelianization", "two-coordinate relator check");
    add_automaton(c_abel);
    c_abel->callback(
        [&] { out << (abelianization_check(load_automaton(aut_spec)) ? "true" : "false") << "\n"; });

    // ---- residual-finiteness toolkit ---------------------------------------
    auto* c_partition = app.add_subcommand("partition", "letter-stabilizer state partition");
    add_automaton(c_partition);
    c_partition->callback([&] {
        Automaton a = load_automaton(aut_spec);
        StabilizerPartition p = stabilizer_partition(a);
        auto print = [&](const char* label, const std::vector<Sym>& syms) {
            out << label << ":";
            for (Sym s : syms) out << " " << a.format_sym(s);
            if (syms.empty()) out << " -";
            out << "\n";
        };
        print("plus", p.plus);
        print("minus", p.minus);
        print("rest", p.rest);
    });

    auto* c_exponent = app.add_subcommand("exponent", "dual exponent of a binary automaton");
    add_automaton(c_exponent);
    c_exponent->callback([&] { out << dual_exponent(load_automaton(aut_spec)) << "\n"; });

    auto* c_endo = app.add_subcommand("endo", "the candidate fixed-subgroup endomorphism");
    add_automaton(c_endo);
    c_endo->callback([&] {
        Automaton a = load_automaton(aut_spec);
        out << format_generator_map(a, build_endomorphism(a)) << "\n";
    });

    auto* c_verify = app.add_subcommand("verify-map", "verify a generator map is a morphism");
    add_automaton(c_verify);
    c_verify->add_option("--map", map_text, "comma-separated 'generator -> word' entries")
        ->required();
    c_verify->add_option("--samples", samples, "evidence sample count");
    c_verify->add_option("--seed", seed, "evidence sample seed");
    c_verify->callback([&] {
        Automaton a = load_automaton(aut_spec);
        GeneratorMap map = parse_generator_map(a, map_text);
        MorphismReport r = verify_morphism(a, map, samples, seed);
        out << "map: " << format_generator_map(a, map) << "\n";
        out << "relators_ok: " << (r.relators_ok ? "true" : "false") << "\n";
        if (!r.relators_ok) out << "failing_relator: " << r.failing_relator << "\n";
        out << "evidence_samples: " << r.samples << "\n";
        out << "evidence_moved: " << r.moved << "\n";
        out << "evidence_lengthened: " << r.lengthened << "\n";
        out << "evidence_ok: " << (r.evidence_ok ? "true" : "false") << "\n";
        out << "verified: " << (r.ok() ? "true" : "false") << "\n";
    });

    auto* c_embed = app.add_subcommand("embed", "search for a subautomaton embedding");
    add_automaton(c_embed);
    c_embed->add_option("--depth", depth, "longest image word");
    c_embed->callback([&] {
        Automaton a = load_automaton(aut_spec);
        auto emb = subautomaton_embedding(a, depth);
        if (!emb) {
            out << "none\n";
            return;
        }
        for (size_t i = 0; i < emb->images.size(); ++i)
            out << a.format_sym(a.states[i]) << " -> " << a.format_word(emb->images[i]) << "\n";
    });

    auto* c_pm = app.add_subcommand("pm", "letter pairs connected by m-th powers");
    add_automaton(c_pm);
    c_pm->add_option("--m", m_power, "the power m")->required();
    c_pm->add_option("--max-g", max_g, "longest state word");
    c_pm->add_option("--max-u", max_u, "longest prefix");
    c_pm->callback([&] {
        Automaton a = load_automaton(aut_spec);
        PmSet pm = compute_Pm(a, m_power, max_g, max_u);
        out << "m: " << pm.m << "\n";
        for (const auto& [pr, wit] : pm.pairs) {
            out << a.format_sym(pr.first) << " -> " << a.format_sym(pr.second)
                << "  g=" << a.format_word(wit.g) << " u=" << a.format_word(wit.u) << "\n";
        }
        if (pm.pairs.empty()) out << "empty\n";
    });

    auto* c_nrf = app.add_subcommand("nrf", "the non-residual-finiteness report");
    add_automaton(c_nrf);
    c_nrf->callback([&] { out << serialize_report(nrf_report(load_automaton(aut_spec))); });

    // ---- coset enumeration ---------------------------------------------------
    auto* c_tc = app.add_subcommand("tc", "Todd-Coxeter coset enumeration");
    c_tc->add_option("--presentation", pres_spec, "presentation file or bundled:NAME")->required();
    c_tc->add_option("--cap", cap, "coset row budget");
    add_format(c_tc, "text|tsv");
    c_tc->callback([&] {
        Presentation p = load_presentation(pres_spec);
        CosetTable t = todd_coxeter(p, cap);
        out << "status: " << (t.status == CosetTable::Status::Closed ? "Closed" : "Capped") << "\n";
        out << "cosets: " << t.n_cosets << "\n";
        if (format == "tsv" && t.status == CosetTable::Status::Closed) {
            for (size_t c = 0; c < t.n_cosets; ++c) {
                out << c;
                for (size_t g = 0; g < t.n_generators; ++g) out << "\t" << t.table[c][2 * g];
                out << "\n";
            }
        }
    });

    auto* c_quotient = app.add_subcommand("quotient", "group order after extra relators");
    c_quotient->add_option("--presentation", pres_spec, "presentation file or bundled:NAME")
        ->required();
    c_quotient->add_option("--relator", relators, "extra relator (repeatable)");
    c_quotient->add_option("--power", power, "raise each extra relator to this power");
    c_quotient->add_option("--cap", cap, "coset row budget");
    c_quotient->callback([&] {
        Presentation p = load_presentation(pres_spec);
        std::vector<Presentation::GWord> extra;
        for (const std::string& r : relators) {
            Presentation::GWord w = parse_gword(p, r), repeated;
            for (int i = 0; i < power; ++i) repeated.insert(repeated.end(), w.begin(), w.end());
            extra.push_back(repeated);
        }
        QuotientOrder q = quotient_order(p, extra, cap);
        if (q.exact)
            out << q.value << "\n";
        else
            out << "unresolved(>=live " << q.value << ")\n";
    });

    // ---- catalogs -------------------------------------------------------------
    auto* c_enum = app.add_subcommand("enumerate", "bireversible automata or 4-square complexes");
    c_enum->add_option("--states", n_states, "state count");
    c_enum->add_option("--letters", n_letters, "letter count");
    c_enum->add_option("--policy", policy_name_, "iso|inverse|dual symmetry policy");
    c_enum->add_flag("--vh4", vh4, "enumerate one-vertex 4-square complexes instead");
    c_enum->add_option("--max-elements", max_elements, "group-order element budget");
    c_enum->add_option("--max-len", max_len, "group-order length budget");
    add_format(c_enum, "text|tsv");
    c_enum->callback([&] {
        if (vh4) {
            auto classes = enumerate_vh4({max_elements, max_len});
            if (format != "tsv") out << "classes: " << classes.size() << "\n";
            for (size_t i = 0; i < classes.size(); ++i) {
                if (format == "tsv")
                    out << classes[i].key << "\t"
                        << format_verdict(classes[i].rep, classes[i].verdict) << "\n";
                else
                    out << "class " << (i + 1) << ": " << classes[i].key << " "
                        << format_verdict(classes[i].rep, classes[i].verdict) << "\n";
            }
            return;
        }
        EnumerationResult r = enumerate_automata(n_states, n_letters,
                                                 parse_policy(policy_name_),
                                                 {max_elements, max_len});
        if (format != "tsv") {
            out << "tables_scanned: " << r.tables_scanned << "\n";
            out << "bireversible_tables: " << r.bireversible_tables << "\n";
            out << "classes: " << r.classes.size() << "\n";
        }
        for (size_t i = 0; i < r.classes.size(); ++i) {
            const EnumeratedClass& c = r.classes[i];
            if (format == "tsv")
                out << c.table_count << "\t" << format_verdict(c.rep, c.verdict) << "\n";
            else
                out << "class " << (i + 1) << ": tables=" << c.table_count << " "
                    << format_verdict(c.rep, c.verdict) << "\n";
        }
    });

    auto* c_repro = app.add_subcommand("reproduce", "re-derive recorded results");
    c_repro->add_option("--name", name, "run one experiment (default: all)");
    c_repro->callback([&] {
        std::vector<std::string> names =
            name.empty() ? experiment_names() : std::vector<std::string>{name};
        int failures = 0;
        for (size_t i = 0; i < names.size(); ++i) {
            ExperimentRecord r = run_experiment(names[i]);
            if (!r.ok) ++failures;
            if (i) out << "\n";
            out << serialize_record(r);
        }
        if (names.size() > 1)
            out << "\nexperiments: " << names.size() << ", failures: " << failures << "\n";
        if (failures) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "error[Usage]: " << e.what() << "\n";
        return 2;
    } catch (const csc::Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error[Internal]: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
