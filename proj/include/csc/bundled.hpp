// The bundled corpus: the automata, complexes and presentations shipped
// with the library (also present as files under data/).  Texts are embedded
// so the library works without a data directory.
#ifndef CSC_BUNDLED_HPP
#define CSC_BUNDLED_HPP

#include "csc/coset.hpp"

namespace csc {

struct BundledEntry {
    std::string name;
    std::string kind;  // "automaton" | "complex" | "presentation"
    std::string file;  // file name under data/
    std::string text;  // exact file contents
};

const std::vector<BundledEntry>& bundled_entries();
const BundledEntry& bundled_entry(const std::string& name);  // UnknownBundled

// Parses an automaton ("automaton" entries) or the signed automaton of a
// complex ("complex" entries).
Automaton bundled_automaton(const std::string& name);
Presentation bundled_presentation(const std::string& name);

}  // namespace csc

#endif
