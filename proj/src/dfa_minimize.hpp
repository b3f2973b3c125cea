// Internal: generic DFA minimization shared by Dfao and MultiDfa.
//
// Moore partition refinement over labelled complete DFAs, with per-symbol
// counting-sort refinement sweeps.  The result is restricted to reachable
// states and renumbered by BFS from the initial state, symbols ascending,
// which makes the output canonical (and byte-deterministic) regardless of
// refinement order.

#ifndef CTSEQ_SRC_DFA_MINIMIZE_HPP
#define CTSEQ_SRC_DFA_MINIMIZE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace ctseq::detail {

struct MinDfa {
    std::uint32_t num_states = 0;
    std::uint32_t initial = 0;
    std::vector<std::uint32_t> delta;   // num_states * k
    std::vector<std::uint32_t> labels;  // output/acceptance label per state
};

inline MinDfa minimize_dfa(std::uint32_t n, std::uint32_t k,
                           const std::vector<std::uint32_t>& delta,
                           std::uint32_t initial,
                           const std::vector<std::uint32_t>& labels) {
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

    // Reachable part, in BFS discovery order.
    std::vector<std::uint32_t> order;
    order.reserve(n);
    std::vector<std::uint32_t> remap(n, kUnset);
    order.push_back(initial);
    remap[initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t row = static_cast<std::size_t>(order[i]) * k;
        for (std::uint32_t c = 0; c < k; ++c) {
            const std::uint32_t t = delta[row + c];
            if (remap[t] == kUnset) {
                remap[t] = static_cast<std::uint32_t>(order.size());
                order.push_back(t);
            }
        }
    }
    const std::uint32_t m = static_cast<std::uint32_t>(order.size());

    std::vector<std::uint32_t> d2(static_cast<std::size_t>(m) * k);
    std::vector<std::uint32_t> lab2(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        lab2[i] = labels[order[i]];
        const std::size_t src = static_cast<std::size_t>(order[i]) * k;
        const std::size_t dst = static_cast<std::size_t>(i) * k;
        for (std::uint32_t c = 0; c < k; ++c) d2[dst + c] = remap[delta[src + c]];
    }

    // Initial partition: dense rank of each label value.
    std::vector<std::uint32_t> distinct = lab2;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::uint32_t> cls(m);
    for (std::uint32_t i = 0; i < m; ++i)
        cls[i] = static_cast<std::uint32_t>(
            std::lower_bound(distinct.begin(), distinct.end(), lab2[i]) -
            distinct.begin());
    std::uint32_t nclasses = static_cast<std::uint32_t>(distinct.size());

    // Refine by one symbol at a time until a full sweep changes nothing.
    std::vector<std::uint32_t> key(m), order1(m), order2(m), newcls(m);
    bool changed = true;
    while (changed && nclasses < m) {
        changed = false;
        for (std::uint32_t c = 0; c < k && nclasses < m; ++c) {
            for (std::uint32_t s = 0; s < m; ++s)
                key[s] = cls[d2[static_cast<std::size_t>(s) * k + c]];
            // Stable two-pass counting sort of states by (cls, key).
            std::vector<std::uint32_t> cnt(nclasses + 1, 0);
            for (std::uint32_t s = 0; s < m; ++s) ++cnt[key[s] + 1];
            for (std::uint32_t i = 0; i < nclasses; ++i) cnt[i + 1] += cnt[i];
            for (std::uint32_t s = 0; s < m; ++s) order1[cnt[key[s]]++] = s;
            std::fill(cnt.begin(), cnt.end(), 0);
            for (std::uint32_t s = 0; s < m; ++s) ++cnt[cls[s] + 1];
            for (std::uint32_t i = 0; i < nclasses; ++i) cnt[i + 1] += cnt[i];
            for (std::uint32_t i = 0; i < m; ++i) {
                const std::uint32_t s = order1[i];
                order2[cnt[cls[s]]++] = s;
            }
            // Assign new dense ids along the sorted order.
            std::uint32_t nc = 0;
            newcls[order2[0]] = 0;
            for (std::uint32_t i = 1; i < m; ++i) {
                const std::uint32_t prev = order2[i - 1], cur = order2[i];
                if (cls[cur] != cls[prev] || key[cur] != key[prev]) ++nc;
                newcls[cur] = nc;
            }
            if (nc + 1 != nclasses) {
                cls.swap(newcls);
                nclasses = nc + 1;
                changed = true;
            }
        }
    }

    // Quotient automaton.
    std::vector<std::uint32_t> rep(nclasses, kUnset);
    for (std::uint32_t s = 0; s < m; ++s)
        if (rep[cls[s]] == kUnset) rep[cls[s]] = s;
    std::vector<std::uint32_t> qdelta(static_cast<std::size_t>(nclasses) * k);
    std::vector<std::uint32_t> qlab(nclasses);
    for (std::uint32_t q = 0; q < nclasses; ++q) {
        qlab[q] = lab2[rep[q]];
        const std::size_t src = static_cast<std::size_t>(rep[q]) * k;
        const std::size_t dst = static_cast<std::size_t>(q) * k;
        for (std::uint32_t c = 0; c < k; ++c) qdelta[dst + c] = cls[d2[src + c]];
    }

    // Canonical BFS renumbering of the quotient.
    std::vector<std::uint32_t> qorder;
    qorder.reserve(nclasses);
    std::vector<std::uint32_t> qremap(nclasses, kUnset);
    qorder.push_back(cls[0]);  // compact state 0 is the initial state
    qremap[cls[0]] = 0;
    for (std::size_t i = 0; i < qorder.size(); ++i) {
        const std::size_t row = static_cast<std::size_t>(qorder[i]) * k;
        for (std::uint32_t c = 0; c < k; ++c) {
            const std::uint32_t t = qdelta[row + c];
            if (qremap[t] == kUnset) {
                qremap[t] = static_cast<std::uint32_t>(qorder.size());
                qorder.push_back(t);
            }
        }
    }

    MinDfa out;
    out.num_states = nclasses;
    out.initial = 0;
    out.delta.resize(static_cast<std::size_t>(nclasses) * k);
    out.labels.resize(nclasses);
    for (std::uint32_t i = 0; i < nclasses; ++i) {
        const std::uint32_t q = qorder[i];
        out.labels[i] = qlab[q];
        const std::size_t src = static_cast<std::size_t>(q) * k;
        const std::size_t dst = static_cast<std::size_t>(i) * k;
        for (std::uint32_t c = 0; c < k; ++c) out.delta[dst + c] = qremap[qdelta[src + c]];
    }
    return out;
}

}  // namespace ctseq::detail

#endif
