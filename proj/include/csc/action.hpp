// The left action of state words on letter words (and sections, its
// right-hand companion), the word problem for the automaton group, orbits,
// transitivity, finiteness probing and the replication certificate.
#ifndef CSC_ACTION_HPP
#define CSC_ACTION_HPP

#include <optional>

#include "csc/automaton.hpp"

namespace csc {

// A certified scale-embedding x ↦ x^(sigma_sign·k), s ↦ s^(tau_sign·m) that
// carries arrows to arrows, together with a pumped orbit witness: the orbit
// of base_word under the pumped state has size divisible by m (m ≥ 2),
// which forces orbit sizes to grow without bound under iteration.
struct ReplicationCert {
    int k = 1;
    int sigma_sign = +1;
    int m = 1;
    int tau_sign = +1;
    Sym pumped_state;
    Word base_word;
    long long base_orbit = 0;
};

struct Verdict {
    enum class Type { Finite, InfiniteCertified, LowerBound };
    Type type = Type::LowerBound;
    long long count = 0;            // group order (Finite) / distinct elements found (LowerBound)
    std::vector<Word> elements;     // Finite only: shortlex-least representatives
    std::optional<ReplicationCert> certificate;  // InfiniteCertified only
};

struct GroupOrderCaps {
    size_t max_elements = 100000;
    size_t max_len = 24;
};

struct ReplicationBounds {
    int max_k = 4;
    int max_m = 4;
    int witness_len = 4;        // longest base word tried
    long long orbit_cap = 100000;
};

struct OrderResult {
    bool exact = false;
    int value = 0;  // order when exact, else the cutoff that was reached
};

// All action computation for one automaton, routed through its signed
// closure (built once).  Requires bireversibility.
class Action {
public:
    explicit Action(const Automaton& a);

    const Automaton& base() const { return base_; }
    const Automaton& closed() const { return closed_; }

    // g(v); both inputs freely reduced, |g(v)| = |v|.
    Word act(const Word& g, const Word& v) const;
    // The state word reached after g has processed v; length ≤ |g|.
    Word section(const Word& g, const Word& v) const;

    // Word problem: does g act trivially on every letter word?  BFS over
    // single-letter sections with memoization; section lengths never exceed
    // |g|, so the search space is finite.
    bool is_trivial(const Word& g) const;

    OrderResult element_order(const Word& g, int cutoff) const;

    // Closure of {seed} under the generators and their inverses; BFS order,
    // deterministic.  Throws OrbitCapExceeded beyond `cap`.
    std::vector<Word> orbit(const Word& seed, const std::vector<Word>& generators,
                            size_t cap = 1000000) const;

    // Entry n: does the group act transitively on reduced letter words of
    // length n?  Index 0 (empty word) is trivially true.
    std::vector<bool> level_transitive(int max_level, size_t cap = 1000000) const;

    // All freely reduced letter words of exactly `length`, shortlex order.
    std::vector<Word> reduced_letter_words(int length) const;
    std::vector<Word> reduced_state_words(int length) const;
    // Positive-only variants (no inverse symbols).
    std::vector<Word> positive_letter_words(int length) const;
    std::vector<Word> positive_state_words(int length) const;

    // Generator symbols in canonical order (each base, + then -).
    std::vector<Sym> state_generators() const;
    std::vector<Sym> letter_symbols() const;

    // Schreier generators of the stabilizer of the first level (the kernel
    // of the induced permutation action on single letters).
    std::vector<Word> level_one_stabilizer_generators() const;

    std::optional<ReplicationCert> replication_certificate(const ReplicationBounds& bounds = {}) const;

    Verdict group_order(const GroupOrderCaps& caps = {},
                        const ReplicationBounds& bounds = {}) const;

private:
    Automaton base_, closed_;
    int nsc_ = 0, nlc_ = 0;  // signed code counts
    std::vector<int16_t> fwd_out_, fwd_dst_;  // [s_code * nlc_ + x_code]
    std::vector<int16_t> rev_in_, rev_src_;   // [t_code * nlc_ + y_code]

    std::vector<int> to_state_codes(const Word& g) const;
    std::vector<int> to_letter_codes(const Word& v) const;
    Word from_state_codes(const std::vector<int>& codes) const;
    Word from_letter_codes(const std::vector<int>& codes) const;

    // One letter through the whole state word, right to left; returns the
    // output letter code and fills the (unreduced) section codes.
    int pass_letter(const std::vector<int>& h, int z, std::vector<int>& sections) const;

    // Action fingerprint used to bucket candidate group elements before the
    // exact word-problem comparison.
    std::string action_signature(const std::vector<int>& g, int depth) const;

    friend class Pi1;
};

}  // namespace csc

#endif
