#include "csc/bundled.hpp"

namespace csc {

namespace {

const char* kAleshin = R"(name: aleshin
alphabet: 0 1
states: a b c
a 0 -> 0 b
a 1 -> 1 b
b 0 -> 1 a
b 1 -> 0 c
c 0 -> 1 c
c 1 -> 0 a
)";

const char* kBellaterra = R"(name: bellaterra
alphabet: 0 1
states: a b c
a 0 -> 1 b
a 1 -> 0 b
b 0 -> 0 a
b 1 -> 1 c
c 0 -> 0 c
c 1 -> 1 a
)";

const char* kLamplighter = R"(name: lamplighter
alphabet: 1 2 3
states: a b c
a 1 -> 1 a
a 2 -> 3 b
a 3 -> 2 c
b 1 -> 3 c
b 2 -> 2 a
b 3 -> 1 b
c 1 -> 2 b
c 2 -> 1 c
c 3 -> 3 a
)";

const char* kWise = R"(name: wise
alphabet: 0 1
states: a b c
a 0 -> 0 b
a 1 -> 1 b
b 0 -> 1 a
b 1 -> 0 c
c 0 -> 1 c
c 1 -> 0 a
)";

const char* kDeltaD = R"(name: delta_d
squares:
a x y b
a y y^-1 b
a x^-1 x^-1 b^-1
a y^-1 x b
)";

const char* kDeltaS = R"(name: delta_s
squares:
a x x^-1 b
a y y^-1 b^-1
a x^-1 y a^-1
b x y b^-1
)";

const char* kEx71 = R"(generators: a1 a2 a3 a4 b1 b2 b3 b4
relators:
a1 b1 a2^-1 b1^-1
a1 b2 a2^-1 b2^-1
a1 b3 a1^-1 b3^-1
a1 b4 a1^-1 b4
a2 b1 a1^-1 b2^-1
a2 b2 a3^-1 b1^-1
a2 b3 a2^-1 b3^-1
a2 b4 a2^-1 b4
a3 b1 a3^-1 b2^-1
a3 b2 a1^-1 b1^-1
a3 b3 a3^-1 b4^-1
a3 b4 a4^-1 b3^-1
a4 b1 a4 b3^-1
a4 b2 a4 b4
a4 b3 a3 b4^-1
a4 b2^-1 a4 b1^-1
)";

const char* kEx72 = R"(generators: a1 a2 a3 a4 b1 b2 b3 b4
relators:
a1 b1 a2^-1 b2^-1
a1 b2 a2^-1 b1^-1
a1 b3 a1^-1 b3^-1
a1 b4 a1^-1 b4
a2 b1 a1^-1 b1^-1
a2 b2 a3^-1 b2^-1
a2 b3 a2^-1 b3^-1
a2 b4 a2^-1 b4
a3 b1 a3^-1 b1^-1
a3 b2 a1^-1 b2^-1
a3 b3 a4^-1 b4^-1
a3 b4 a3 b3^-1
a4 b1 a4^-1 b1^-1
a4 b2 a4^-1 b3^-1
a4 b3 a3 b4^-1
a4 b4 a4^-1 b2^-1
)";

const char* kTable1 = R"(generators: s1 s2 s3 s4 s5 s6 s7 s8 s9 s10 s11 s12 s13 s14 s15 s16 s17 s18 s19 s20 s21 s22 s23
relators:
s13 s8^-1 s10
s23 s2 s22
s13^-1 s1 s12
s21 s2^-1 s14^-1
s13^-1 s12 s1
s11 s4 s9^-1
s20 s2 s16^-1
s17 s2^-1 s15^-1
s10 s6^-1 s8^-1 s6
s11 s2 s10^-1 s2^-1
s11 s3 s10^-1 s3^-1
s12 s11^-1 s5 s9
s12 s8^-1 s1 s10
s9 s2^-1 s8^-1 s2
s14 s7 s9^-1 s7^-1
s10 s7^-1 s8^-1 s7
s16 s7^-1 s15^-1 s4
s10 s4^-1 s8^-1 s4
s16 s5^-1 s15^-1 s7
s16 s4^-1 s15^-1 s5
s17 s7^-1 s11^-1 s7
s11 s5 s9^-1 s1^-1
s17 s5^-1 s14^-1 s4
s17 s4^-1 s14^-1 s6
s17 s3^-1 s15^-1 s1
s10 s5^-1 s8^-1 s5
s9 s3^-1 s8^-1 s3
s17 s13 s15^-1 s2
s15 s6 s9^-1 s6^-1
s21 s3^-1 s14^-1 s1
s16 s6^-1 s11^-1 s6
s13^-1 s4^-1 s13^-1 s2
s5^-1 s13 s3 s13
s4^-1 s13 s2 s13
s17 s6^-1 s14^-1 s5
s22 s5^-1 s20 s4
s2 s16 s13 s20^-1
s3 s16 s12 s20^-1
s13 s11^-1 s4 s9
s17 s12 s15^-1 s3
s20 s7 s13 s7^-1
s21 s6^-1 s13^-1 s6
s23 s5 s21^-1 s4^-1
s13^-1 s5^-1 s13^-1 s3
s21 s12 s14^-1 s3
s21 s13 s14^-1 s2
s22 s7^-1 s13 s7
s22 s6^-1 s20 s5
s20 s3 s16^-1 s1^-1
s22 s4^-1 s20 s6
s23 s13^-1 s22 s2^-1
s23 s12^-1 s22 s3^-1
s23 s6 s13 s6^-1
s23 s3 s22 s1^-1
s23 s4 s21^-1 s7^-1
s23 s7 s21^-1 s5^-1
)";

}  // namespace

const std::vector<BundledEntry>& bundled_entries() {
    static const std::vector<BundledEntry> entries = {
        {"aleshin", "automaton", "aleshin.aut", kAleshin},
        {"bellaterra", "automaton", "bellaterra.aut", kBellaterra},
        {"lamplighter", "automaton", "lamplighter.aut", kLamplighter},
        {"wise", "automaton", "wise.aut", kWise},
        {"delta_d", "complex", "delta_d.cx", kDeltaD},
        {"delta_s", "complex", "delta_s.cx", kDeltaS},
        {"ex71", "presentation", "ex71.pres", kEx71},
        {"ex72", "presentation", "ex72.pres", kEx72},
        {"table1", "presentation", "table1.pres", kTable1},
    };
    return entries;
}

const BundledEntry& bundled_entry(const std::string& name) {
    for (const auto& e : bundled_entries())
        if (e.name == name) return e;
    throw Error("UnknownBundled", "no bundled entry named '" + name + "'");
}

Automaton bundled_automaton(const std::string& name) {
    const BundledEntry& e = bundled_entry(name);
    if (e.kind == "automaton") return parse_automaton(e.text);
    if (e.kind == "complex") return parse_complex(e.text);
    throw Error("UnknownBundled", "bundled entry '" + name + "' is a " + e.kind +
                                      ", not an automaton or complex");
}

Presentation bundled_presentation(const std::string& name) {
    const BundledEntry& e = bundled_entry(name);
    if (e.kind != "presentation")
        throw Error("UnknownBundled", "bundled entry '" + name + "' is a " + e.kind +
                                          ", not a presentation");
    return parse_presentation(e.text);
}

}  // namespace csc
