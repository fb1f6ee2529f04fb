#include "csc/words.hpp"

namespace csc {

void push_reduced(Word& w, Sym s) {
    if (!w.empty() && w.back() == s.inverse()) {
        w.pop_back();
    } else {
        w.push_back(s);
    }
}

Word reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const Sym& s : w) push_reduced(out, s);
    return out;
}

bool is_reduced(const Word& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1].inverse()) return false;
    return true;
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

Word concat(const Word& w1, const Word& w2) {
    Word out = w1;
    for (const Sym& s : w2) push_reduced(out, s);
    return out;
}

Word power(const Word& w, int n) {
    Word base = n < 0 ? inverse(w) : w;
    int reps = n < 0 ? -n : n;
    Word out;
    for (int i = 0; i < reps; ++i)
        for (const Sym& s : base) push_reduced(out, s);
    return out;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

std::string word_key(const Word& w) {
    std::string key;
    key.reserve(w.size() * 2);
    for (const Sym& s : w) {
        int v = s.code() | (s.kind == Kind::Letter ? 1 << 15 : 0);
        key.push_back(static_cast<char>(v & 0xff));
        key.push_back(static_cast<char>((v >> 8) & 0xff));
    }
    return key;
}

std::pair<std::string, int> split_ident(const std::string& ident) {
    static const std::string suffix = "^-1";
    if (ident.size() > suffix.size() &&
        ident.compare(ident.size() - suffix.size(), suffix.size(), suffix) == 0) {
        return {ident.substr(0, ident.size() - suffix.size()), -1};
    }
    return {ident, +1};
}

}  // namespace csc
