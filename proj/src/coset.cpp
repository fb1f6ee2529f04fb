#include "csc/coset.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

namespace csc {

namespace {

// Working state of one enumeration.  Cosets are rows; merged rows point to
// their survivor through `parent` (path-compressed).  Every recorded edge
// goes onto a deduction stack; draining the stack scans each relator
// rotation through the new edge, so consequences propagate while the table
// is still small.  Scans that stop two edges short queue the leading edge as
// a preferred definition: defining it completes that relator cycle.
struct Enumerator {
    int ngen;
    size_t cap;
    std::vector<std::vector<int>> tab;  // tab[c][slot], -1 undefined
    std::vector<int> parent;
    std::vector<std::pair<int, int>> deductions;  // (coset, slot) edges to scan
    std::deque<std::pair<int, int>> preferred;    // (coset, rotation id) near-closed cycles
    size_t live = 0;
    bool capped = false;

    explicit Enumerator(int n, size_t cap_) : ngen(n), cap(cap_) { new_coset(); }

    int find(int c) {
        while (parent[c] != c) {
            parent[c] = parent[parent[c]];
            c = parent[c];
        }
        return c;
    }

    int new_coset() {
        if (tab.size() >= cap) {
            capped = true;
            return -1;
        }
        tab.emplace_back(2 * ngen, -1);
        parent.push_back(static_cast<int>(tab.size()) - 1);
        ++live;
        return static_cast<int>(tab.size()) - 1;
    }

    // Records c --slot--> d (and the inverse edge), merging on conflicts.
    void set_edge(int c, int slot, int d) {
        c = find(c);
        d = find(d);
        int cur = tab[c][slot];
        if (cur != -1) {
            if (find(cur) != d) coincide(cur, d);
            return;
        }
        tab[c][slot] = d;
        deductions.push_back({c, slot});
        int back = tab[d][slot ^ 1];
        if (back == -1) {
            tab[d][slot ^ 1] = c;
            deductions.push_back({d, slot ^ 1});
        } else if (find(back) != c) {
            coincide(back, c);
        }
    }

    void coincide(int a, int b) {
        std::vector<std::pair<int, int>> pending{{a, b}};
        while (!pending.empty()) {
            auto [p, q] = pending.back();
            pending.pop_back();
            p = find(p);
            q = find(q);
            if (p == q) continue;
            if (p > q) std::swap(p, q);  // the smaller index survives
            parent[q] = p;
            --live;
            for (int slot = 0; slot < 2 * ngen; ++slot) {
                int t = tab[q][slot];
                if (t == -1) continue;
                int u = tab[p][slot];
                if (u == -1) {
                    tab[p][slot] = t;
                    deductions.push_back({p, slot});
                    int tr = find(t);
                    int back = tab[tr][slot ^ 1];
                    if (back == -1) {
                        tab[tr][slot ^ 1] = p;
                        deductions.push_back({tr, slot ^ 1});
                    } else if (find(back) != p) {
                        pending.push_back({back, p});
                    }
                } else if (find(u) != find(t)) {
                    pending.push_back({u, t});
                }
            }
        }
    }

    // Scans `word` as a loop at coset c without creating cosets: a complete
    // scan checks the loop closes (coinciding otherwise), a one-edge gap is
    // deduced, and a two-edge gap queues the scan as a preferred definition.
    void scan(int c, const std::vector<int>& word, int rid) {
        c = find(c);
        int n = static_cast<int>(word.size());
        int f = c, i = 0;
        while (i < n) {
            int next = tab[f][word[i]];
            if (next == -1) break;
            f = find(next);
            ++i;
        }
        if (i == n) {
            if (f != c) coincide(f, c);
            return;
        }
        int b = c, j = n;
        while (j > i + 1) {
            int prev = tab[b][word[j - 1] ^ 1];
            if (prev == -1) break;
            b = find(prev);
            --j;
        }
        if (j == i + 1) {
            set_edge(f, word[i], b);
        } else if (j == i + 2) {
            preferred.push_back({c, rid});
        }
    }

    // Re-runs a queued scan when it is popped.  The table has moved on since
    // the scan was queued, so act on what the gap is now: a closed loop
    // coincides, a one-edge gap is deduced, a two-edge gap gets the fresh
    // coset that the queue promised, and a wider gap means the entry is
    // stale.  Returns true if the table changed.
    bool close_scan(int c, const std::vector<int>& word) {
        c = find(c);
        int n = static_cast<int>(word.size());
        int f = c, i = 0;
        while (i < n) {
            int next = tab[f][word[i]];
            if (next == -1) break;
            f = find(next);
            ++i;
        }
        if (i == n) {
            if (f == c) return false;
            coincide(f, c);
            return true;
        }
        int b = c, j = n;
        while (j > i + 1) {
            int prev = tab[b][word[j - 1] ^ 1];
            if (prev == -1) break;
            b = find(prev);
            --j;
        }
        if (j > i + 2) return false;
        if (j == i + 2) {
            int d = new_coset();
            if (d == -1) return false;
            set_edge(f, word[i], d);
            return true;
        }
        set_edge(f, word[i], b);
        return true;
    }

    // Drains the deduction stack: each recorded edge is scanned against every
    // relator rotation that begins with its slot.
    void process_deductions(const std::vector<std::vector<int>>& by_slot,
                            const std::vector<std::vector<int>>& all_rots) {
        while (!deductions.empty()) {
            auto [c, slot] = deductions.back();
            deductions.pop_back();
            c = find(c);
            if (tab[c][slot] == -1) continue;
            for (int rid : by_slot[static_cast<size_t>(slot)]) {
                scan(c, all_rots[static_cast<size_t>(rid)], rid);
                c = find(c);
            }
        }
    }

    // Scans `word` from coset c and back, filling the gap with fresh cosets;
    // used to seed the subgroup generators at coset 0.
    void scan_and_fill(int c, const std::vector<int>& word) {
        if (word.empty()) return;
        int n = static_cast<int>(word.size());
        while (true) {
            c = find(c);
            int f = c, i = 0;
            while (i < n) {
                int next = tab[f][word[i]];
                if (next == -1) break;
                f = find(next);
                ++i;
            }
            if (i == n) {
                if (f != c) coincide(f, c);
                return;
            }
            int b = c, j = n;
            while (j > i + 1) {
                int prev = tab[b][word[j - 1] ^ 1];
                if (prev == -1) break;
                b = find(prev);
                --j;
            }
            if (j == i + 1) {
                set_edge(f, word[i], b);
                return;
            }
            int d = new_coset();
            if (d == -1) return;  // capped
            set_edge(f, word[i], d);
            if (capped) return;
            // rescan from the top; the new edge extends the forward scan
        }
    }
};

std::vector<int> to_slots(const Presentation::GWord& w, size_t ngen) {
    std::vector<int> slots;
    slots.reserve(w.size());
    for (auto [g, s] : w) {
        if (g < 0 || static_cast<size_t>(g) >= ngen)
            throw Error("UnknownSymbol", "relator references generator index " + std::to_string(g));
        slots.push_back(2 * g + (s < 0 ? 1 : 0));
    }
    return slots;
}


void validate_closed(const CosetTable& t, const std::vector<std::vector<int>>& relators,
                     const std::vector<std::vector<int>>& subgroup) {
    size_t n = t.n_cosets;
    for (size_t slot = 0; slot < 2 * t.n_generators; ++slot) {
        std::vector<char> hit(n, 0);
        for (size_t c = 0; c < n; ++c) {
            int d = t.table[c][slot];
            if (d < 0 || static_cast<size_t>(d) >= n)
                throw Error("InternalError", "closed coset table has an undefined entry");
            if (t.table[d][slot ^ 1] != static_cast<int>(c))
                throw Error("InternalError", "closed coset table breaks inverse symmetry");
            if (hit[d]) throw Error("InternalError", "coset table column is not a permutation");
            hit[d] = 1;
        }
    }
    auto trace = [&](size_t c, const std::vector<int>& w) {
        size_t at = c;
        for (int slot : w) at = static_cast<size_t>(t.table[at][slot]);
        return at;
    };
    for (const auto& r : relators)
        for (size_t c = 0; c < n; ++c)
            if (trace(c, r) != c)
                throw Error("InternalError", "a relator does not trace trivially on the closed table");
    for (const auto& w : subgroup)
        if (trace(0, w) != 0)
            throw Error("InternalError", "a subgroup generator moves coset 0 on the closed table");
}

}  // namespace

CosetTable todd_coxeter(const Presentation& p, size_t cap) {
    size_t ngen = p.generators.size();
    if (ngen == 0) throw Error("ParseError", "presentation has no generators");
    std::vector<std::vector<int>> relators, subgroup;
    for (const auto& r : p.relators) relators.push_back(to_slots(r, ngen));
    for (const auto& w : p.subgroup) subgroup.push_back(to_slots(w, ngen));

    // Every cyclic rotation of every relator, grouped by leading slot, so a
    // new edge triggers exactly the scans that pass through it.  Short
    // rotations run first: their deductions are the cheapest wins.
    std::vector<std::vector<int>> all_rots;
    std::vector<std::vector<int>> by_slot(2 * ngen);
    for (const auto& r : relators) {
        for (size_t i = 0; i < r.size(); ++i) {
            std::vector<int> w(r.begin() + static_cast<long>(i), r.end());
            w.insert(w.end(), r.begin(), r.begin() + static_cast<long>(i));
            by_slot[static_cast<size_t>(w[0])].push_back(static_cast<int>(all_rots.size()));
            all_rots.push_back(std::move(w));
        }
    }
    for (auto& bucket : by_slot)
        std::stable_sort(bucket.begin(), bucket.end(), [&](int a, int b) {
            return all_rots[static_cast<size_t>(a)].size() < all_rots[static_cast<size_t>(b)].size();
        });

    Enumerator e(static_cast<int>(ngen), cap);
    for (const auto& w : subgroup) {
        e.scan_and_fill(0, w);
        if (e.capped) break;
        e.process_deductions(by_slot, all_rots);
    }
    size_t cursor = 0;
    while (cursor < e.tab.size() && !e.capped) {
        // Re-run a queued near-closed relator cycle if one is still useful;
        // otherwise define the first undefined slot of the lowest live row.
        bool progressed = false;
        while (!e.preferred.empty()) {
            auto [pc, rid] = e.preferred.front();
            e.preferred.pop_front();
            if (e.close_scan(pc, all_rots[static_cast<size_t>(rid)])) {
                e.process_deductions(by_slot, all_rots);
                progressed = true;
                break;
            }
            if (e.capped) break;
        }
        if (e.capped) break;
        if (progressed) continue;
        if (e.find(static_cast<int>(cursor)) != static_cast<int>(cursor)) {
            ++cursor;
            continue;
        }
        int want = -1;
        for (int slot = 0; slot < 2 * static_cast<int>(ngen); ++slot)
            if (e.tab[cursor][slot] == -1) {
                want = slot;
                break;
            }
        if (want == -1) {
            ++cursor;
            continue;
        }
        int d = e.new_coset();
        if (d == -1) break;
        e.set_edge(static_cast<int>(cursor), want, d);
        e.process_deductions(by_slot, all_rots);
    }

    CosetTable out;
    out.n_generators = ngen;
    if (e.capped) {
        out.status = CosetTable::Status::Capped;
        out.n_cosets = e.live;
        return out;
    }

    // Compact to live rows in creation order.
    std::vector<int> renumber(e.tab.size(), -1);
    int next = 0;
    for (size_t c = 0; c < e.tab.size(); ++c)
        if (e.find(static_cast<int>(c)) == static_cast<int>(c)) renumber[c] = next++;
    out.status = CosetTable::Status::Closed;
    out.n_cosets = static_cast<size_t>(next);
    out.table.assign(out.n_cosets, std::vector<int>(2 * ngen, -1));
    for (size_t c = 0; c < e.tab.size(); ++c) {
        if (renumber[c] == -1) continue;
        for (size_t slot = 0; slot < 2 * ngen; ++slot) {
            int d = e.tab[c][slot];
            if (d == -1)
                throw Error("InternalError", "closed enumeration left an undefined entry");
            out.table[renumber[c]][slot] = renumber[e.find(d)];
        }
    }
    validate_closed(out, relators, subgroup);
    return out;
}

namespace {

// Rewrites the presentation to one of the subgroup realized as the stabilizer
// of coset 0 in a closed table: generators are the non-tree edges of the
// coset graph (Schreier), relators are every input relator traced from every
// coset and rewritten over those edges (Reidemeister).
Presentation stabilizer_presentation(const CosetTable& t,
                                     const std::vector<std::vector<int>>& relators) {
    size_t m = t.n_cosets, ngen = t.n_generators;
    std::vector<std::vector<char>> is_tree(m, std::vector<char>(ngen, 0));
    std::vector<char> seen(m, 0);
    std::deque<int> bfs{0};
    seen[0] = 1;
    while (!bfs.empty()) {
        int c = bfs.front();
        bfs.pop_front();
        for (size_t slot = 0; slot < 2 * ngen; ++slot) {
            int d = t.table[static_cast<size_t>(c)][slot];
            if (seen[static_cast<size_t>(d)]) continue;
            seen[static_cast<size_t>(d)] = 1;
            if (slot % 2 == 0)
                is_tree[static_cast<size_t>(c)][slot / 2] = 1;
            else
                is_tree[static_cast<size_t>(d)][slot / 2] = 1;
            bfs.push_back(d);
        }
    }

    Presentation out;
    std::vector<std::vector<int>> genidx(m, std::vector<int>(ngen, -1));
    for (size_t c = 0; c < m; ++c)
        for (size_t g = 0; g < ngen; ++g)
            if (!is_tree[c][g]) {
                genidx[c][g] = static_cast<int>(out.generators.size());
                out.generators.push_back("s" + std::to_string(out.generators.size()));
            }

    auto push_reduced = [](Presentation::GWord& w, int g, int sign) {
        if (!w.empty() && w.back().first == g && w.back().second == -sign)
            w.pop_back();
        else
            w.push_back({g, sign});
    };
    std::set<Presentation::GWord> dedup;
    for (size_t c = 0; c < m; ++c) {
        for (const auto& r : relators) {
            Presentation::GWord w;
            size_t cur = c;
            for (int slot : r) {
                size_t g = static_cast<size_t>(slot) / 2;
                if (slot % 2 == 0) {
                    if (!is_tree[cur][g]) push_reduced(w, genidx[cur][g], +1);
                    cur = static_cast<size_t>(t.table[cur][static_cast<size_t>(slot)]);
                } else {
                    size_t nxt = static_cast<size_t>(t.table[cur][static_cast<size_t>(slot)]);
                    if (!is_tree[nxt][g]) push_reduced(w, genidx[nxt][g], -1);
                    cur = nxt;
                }
            }
            if (!w.empty() && dedup.insert(w).second) out.relators.push_back(std::move(w));
        }
    }
    return out;
}

// Free reduction, then cyclic reduction (relators are loops, so conjugating
// away a cancelling head/tail pair preserves the normal closure).
Presentation::GWord reduce_relator(const Presentation::GWord& r) {
    Presentation::GWord w;
    for (auto [g, s] : r) {
        if (!w.empty() && w.back().first == g && w.back().second == -s)
            w.pop_back();
        else
            w.push_back({g, s});
    }
    size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo].first == w[hi - 1].first && w[lo].second == -w[hi - 1].second) {
        ++lo;
        --hi;
    }
    return {w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi)};
}

// Canonical representative of a relator up to rotation and inversion, for
// deduplication.
Presentation::GWord relator_key(const Presentation::GWord& r) {
    if (r.empty()) return r;
    Presentation::GWord best;
    for (int invert = 0; invert < 2; ++invert) {
        Presentation::GWord w = r;
        if (invert) {
            std::reverse(w.begin(), w.end());
            for (auto& [g, s] : w) s = -s;
        }
        for (size_t i = 0; i < w.size(); ++i) {
            Presentation::GWord rot(w.begin() + static_cast<long>(i), w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(i));
            if (best.empty() || rot < best) best = std::move(rot);
        }
    }
    return best;
}

void normalize_relators(Presentation& p) {
    std::set<Presentation::GWord> seen;
    std::vector<Presentation::GWord> kept;
    for (const auto& r : p.relators) {
        Presentation::GWord w = reduce_relator(r);
        if (w.empty()) continue;
        if (seen.insert(relator_key(w)).second) kept.push_back(std::move(w));
    }
    p.relators = std::move(kept);
}

// Tietze simplification: repeatedly eliminate a generator that occurs exactly
// once in some relator of length at most three (that relator then solves for
// it with a replacement of at most two symbols), preferring the shortest such
// relator.  The length gate keeps substitution from trading a short-relator
// presentation, which enumerates well, for a dense one that does not.
Presentation tietze_simplify(Presentation p) {
    normalize_relators(p);
    const size_t kLenBudget = 1 << 16;
    for (int round = 0; round < 1024; ++round) {
        size_t total = 0;
        for (const auto& r : p.relators) total += r.size();
        // Pick the elimination candidate: generator occurring once in the
        // shortest solving relator, ties by relator order then position.
        size_t best_rel = p.relators.size();
        int best_gen = -1;
        for (size_t ri = 0; ri < p.relators.size(); ++ri) {
            const auto& r = p.relators[ri];
            if (r.size() > 3) continue;
            if (best_rel < p.relators.size() && r.size() >= p.relators[best_rel].size()) continue;
            for (auto [g, s] : r) {
                int occurrences = 0;
                for (auto [h, t] : r) occurrences += h == g;
                if (occurrences != 1) continue;
                best_rel = ri;
                best_gen = g;
                break;
            }
        }
        if (best_gen == -1) break;
        const auto r0 = p.relators[best_rel];
        size_t pos = 0;
        while (p.relators[best_rel][pos].first != best_gen) ++pos;
        int sign = r0[pos].second;
        Presentation::GWord repl;  // best_gen = repl
        Presentation::GWord tail(r0.begin() + static_cast<long>(pos) + 1, r0.end());
        Presentation::GWord head(r0.begin(), r0.begin() + static_cast<long>(pos));
        Presentation::GWord loop = tail;
        loop.insert(loop.end(), head.begin(), head.end());
        if (sign > 0) {
            std::reverse(loop.begin(), loop.end());
            for (auto& [g, s] : loop) s = -s;
        }
        repl = std::move(loop);
        // Substitute, renumber the surviving generators, renormalize.
        size_t projected = total;
        for (const auto& r : p.relators)
            for (auto [g, s] : r) projected += g == best_gen ? repl.size() : 0;
        if (projected > kLenBudget) break;
        std::vector<int> remap(p.generators.size());
        std::vector<std::string> names;
        for (size_t g = 0; g < p.generators.size(); ++g) {
            remap[g] = static_cast<int>(g) == best_gen ? -1 : static_cast<int>(names.size());
            if (static_cast<int>(g) != best_gen) names.push_back(p.generators[g]);
        }
        std::vector<Presentation::GWord> rewritten;
        for (size_t ri = 0; ri < p.relators.size(); ++ri) {
            if (ri == best_rel) continue;
            Presentation::GWord w;
            for (auto [g, s] : p.relators[ri]) {
                if (g != best_gen) {
                    w.push_back({remap[g], s});
                } else if (s > 0) {
                    for (auto [h, t] : repl) w.push_back({remap[h], t});
                } else {
                    for (auto it = repl.rbegin(); it != repl.rend(); ++it)
                        w.push_back({remap[it->first], -it->second});
                }
            }
            rewritten.push_back(std::move(w));
        }
        p.generators = std::move(names);
        p.relators = std::move(rewritten);
        normalize_relators(p);
    }
    return p;
}

// Order of the abelianization, or 0 when it is infinite (or too large to
// certify).  Diagonalizes the relator exponent matrix with integer row and
// column operations; the surviving diagonal product is the index of the
// relation lattice in Z^n.
long long abelian_order(const Presentation& p) {
    size_t n = p.generators.size();
    if (n == 0) return 1;
    std::vector<std::vector<long long>> m;
    for (const auto& r : p.relators) {
        std::vector<long long> row(n, 0);
        for (auto [g, s] : r) row[static_cast<size_t>(g)] += s;
        if (std::any_of(row.begin(), row.end(), [](long long v) { return v != 0; }))
            m.push_back(std::move(row));
    }
    long long order = 1;
    size_t top = 0;
    for (size_t c = 0; c < n; ++c) {
        while (true) {
            size_t pi = SIZE_MAX, pj = SIZE_MAX;
            long long best = 0;
            for (size_t i = top; i < m.size(); ++i)
                for (size_t j = c; j < n; ++j)
                    if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
                        best = std::llabs(m[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi == SIZE_MAX) return 0;  // rank below n: a free factor survives
            std::swap(m[top], m[pi]);
            if (pj != c)
                for (auto& row : m) std::swap(row[c], row[pj]);
            long long piv = m[top][c];
            bool dirty = false;
            for (size_t i = 0; i < m.size(); ++i) {
                if (i == top || m[i][c] == 0) continue;
                long long f = m[i][c] / piv;
                if (f != 0)
                    for (size_t j = c; j < n; ++j) m[i][j] -= f * m[top][j];
                if (m[i][c] != 0) dirty = true;
            }
            for (size_t j = c + 1; j < n; ++j) {
                if (m[top][j] == 0) continue;
                long long f = m[top][j] / piv;
                if (f != 0)
                    for (size_t i = 0; i < m.size(); ++i) m[i][j] -= f * m[i][c];
                if (m[top][j] != 0) dirty = true;
            }
            if (!dirty) {
                order *= std::llabs(piv);
                if (order > 1000000000000000LL) return 0;
                ++top;
                break;
            }
        }
    }
    return order;
}

QuotientOrder quotient_order_rec(const Presentation& q_in, size_t cap, int depth) {
    Presentation q = tietze_simplify(q_in);
    if (q.generators.empty()) return {true, 1};
    long long ab = abelian_order(q);
    // A one-generator group is cyclic, hence equal to its abelianization.
    if (q.generators.size() == 1 && ab > 0) return {true, ab};
    std::vector<std::vector<int>> relator_slots;
    for (const auto& r : q.relators) relator_slots.push_back(to_slots(r, q.generators.size()));

    CosetTable t = todd_coxeter(q, cap);
    if (t.status == CosetTable::Status::Closed)
        return {true, static_cast<long long>(t.n_cosets)};
    QuotientOrder fallback{false, static_cast<long long>(t.n_cosets)};
    if (depth <= 0) return fallback;

    // The whole-group enumeration is out of budget; enumerate the cosets of a
    // proper subgroup instead, rewrite the presentation for that subgroup,
    // and recurse: the order is the index times the subgroup order.
    size_t n = q.generators.size();
    std::vector<std::vector<int>> candidates;
    if (n >= 2) {
        std::vector<int> first, second;
        for (size_t g = 0; g < n; ++g) (g < n / 2 ? first : second).push_back(static_cast<int>(g));
        candidates.push_back(second);
        candidates.push_back(first);
        for (size_t skip = 0; skip < n; ++skip) {
            std::vector<int> rest;
            for (size_t g = 0; g < n; ++g)
                if (g != skip) rest.push_back(static_cast<int>(g));
            candidates.push_back(rest);
        }
    }
    for (size_t g = 0; g < n; ++g) candidates.push_back({static_cast<int>(g)});
    for (const auto& gens : candidates) {
        Presentation sub = q;
        sub.subgroup.clear();
        for (int g : gens) sub.subgroup.push_back({{g, +1}});
        CosetTable st = todd_coxeter(sub, cap);
        if (st.status != CosetTable::Status::Closed) continue;
        if (st.n_cosets < 2) {
            // A single generator reaching every coset makes the group cyclic,
            // so its order is its abelianization's.
            if (gens.size() == 1 && ab > 0) return {true, ab};
            continue;
        }
        Presentation hp = stabilizer_presentation(st, relator_slots);
        if (hp.generators.empty())  // the subgroup is free of relations and trivial
            return {true, static_cast<long long>(st.n_cosets)};
        QuotientOrder inner = quotient_order_rec(hp, cap, depth - 1);
        if (inner.exact)
            return {true, static_cast<long long>(st.n_cosets) * inner.value};
    }
    return fallback;
}

}  // namespace

QuotientOrder quotient_order(const Presentation& p,
                             const std::vector<Presentation::GWord>& extra, size_t cap) {
    Presentation q = p;
    q.subgroup.clear();
    for (const auto& r : extra) q.relators.push_back(r);
    return quotient_order_rec(q, cap, 8);
}

namespace {

std::vector<std::string> line_tokens(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    int section = 0;  // 0 = expect generators, 1 = relators, 2 = subgroup
    auto parse_gword = [&](const std::vector<std::string>& tokens) {
        Presentation::GWord w;
        for (const auto& tok : tokens) {
            auto [base, sign] = split_ident(tok);
            auto it = std::find(p.generators.begin(), p.generators.end(), base);
            if (it == p.generators.end())
                throw Error("UnknownSymbol", "word uses undeclared generator '" + base + "'");
            w.push_back({static_cast<int>(it - p.generators.begin()), sign});
        }
        return w;
    };
    while (std::getline(in, line)) {
        auto tokens = line_tokens(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "generators:") {
            if (section != 0 || tokens.size() < 2)
                throw Error("ParseError", "expected 'generators: <name>...' first");
            for (size_t i = 1; i < tokens.size(); ++i) {
                if (std::find(p.generators.begin(), p.generators.end(), tokens[i]) !=
                    p.generators.end())
                    throw Error("ParseError", "generator '" + tokens[i] + "' declared twice");
                p.generators.push_back(tokens[i]);
            }
            section = 1;
            continue;
        }
        if (tokens[0] == "relators:") {
            if (section < 1) throw Error("ParseError", "'relators:' before 'generators:'");
            section = 1;
            continue;
        }
        if (tokens[0] == "subgroup:") {
            if (section < 1) throw Error("ParseError", "'subgroup:' before 'generators:'");
            section = 2;
            continue;
        }
        if (section == 0) throw Error("ParseError", "expected 'generators: <name>...', got: " + line);
        if (section == 1)
            p.relators.push_back(parse_gword(tokens));
        else
            p.subgroup.push_back(parse_gword(tokens));
    }
    if (p.generators.empty()) throw Error("ParseError", "presentation has no generators");
    return p;
}

std::string serialize_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "generators:";
    for (const auto& g : p.generators) os << ' ' << g;
    os << "\nrelators:\n";
    auto put = [&](const Presentation::GWord& w) {
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << ' ';
            os << p.generators[w[i].first] << (w[i].second < 0 ? "^-1" : "");
        }
        os << "\n";
    };
    for (const auto& r : p.relators) put(r);
    if (!p.subgroup.empty()) {
        os << "subgroup:\n";
        for (const auto& w : p.subgroup) put(w);
    }
    return os.str();
}

}  // namespace csc
