#pragma once

#include <thread>
#include <unordered_map>

#include "pposet/canonical.hpp"

namespace pposet {

// Enumerates every naturally labeled poset on [n] exactly once, in a
// fixed order: element k is attached above an arbitrary order ideal of
// the poset built on 1..k-1, every ideal choice enumerated ascending.
// `shard`/`nshards` stride-partition the leaf sequence for parallel
// callers; the leaf order is identical across shard counts.
template <class F>
inline void enumerate_natural_posets(int n, int shard, int nshards, F&& sink) {
    if (n < 0 || n > Poset::kMaxElements)
        throw size_limit_error("enumerate_natural_posets: size out of range");
    if (n == 0) {
        if (shard == 0) sink(Poset::from_down_masks(0, {}));
        return;
    }
    std::vector<std::uint32_t> down(n, 0);
    long long leaf = 0;
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            if (leaf++ % nshards == shard) sink(Poset::from_down_masks(n, down));
            return;
        }
        std::uint32_t limit = 1u << k;
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            bool closed = true;
            for (std::uint32_t m = mask; m; m &= m - 1)
                if (down[lowest_bit(m)] & ~mask) {
                    closed = false;
                    break;
                }
            if (!closed) continue;
            down[k] = mask;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

template <class F>
inline void enumerate_natural_posets(int n, F&& sink) {
    enumerate_natural_posets(n, 0, 1, sink);
}

inline long long natural_poset_count(int n) {
    long long c = 0;
    enumerate_natural_posets(n, [&](const Poset&) { ++c; });
    return c;
}

struct GeneratedClass {
    CanonicalKey key;
    Poset representative;  // naturally labeled
};

// One naturally labeled representative per isomorphism class, sorted by
// canonical key. The representative is the first natural poset of its
// class in enumeration order, so the result is independent of the
// number of threads.
inline std::vector<GeneratedClass> generate_poset_classes(int n, int threads = 1) {
    if (threads < 1) threads = 1;
    struct Entry {
        long long first_leaf;
        Poset rep;
    };
    std::vector<std::unordered_map<CanonicalKey, Entry>> maps(threads);

    auto worker = [&](int shard) {
        auto& local = maps[shard];
        long long seen = 0;
        enumerate_natural_posets(n, shard, threads, [&](const Poset& p) {
            long long leaf = shard + (seen++) * threads;
            CanonicalKey key = canonical_form(p);
            auto it = local.find(key);
            if (it == local.end())
                local.emplace(std::move(key), Entry{leaf, p});
            else if (leaf < it->second.first_leaf)
                it->second = Entry{leaf, p};
        });
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    std::unordered_map<CanonicalKey, Entry>& merged = maps[0];
    for (int t = 1; t < threads; ++t) {
        for (auto& [key, entry] : maps[t]) {
            auto it = merged.find(key);
            if (it == merged.end())
                merged.emplace(key, std::move(entry));
            else if (entry.first_leaf < it->second.first_leaf)
                it->second = std::move(entry);
        }
    }

    std::vector<GeneratedClass> out;
    out.reserve(merged.size());
    for (auto& [key, entry] : merged) out.push_back({key, std::move(entry.rep)});
    std::sort(out.begin(), out.end(),
              [](const GeneratedClass& a, const GeneratedClass& b) { return a.key < b.key; });
    return out;
}

inline std::vector<Poset> generate_posets(int n, int threads = 1) {
    std::vector<Poset> out;
    for (auto& g : generate_poset_classes(n, threads)) out.push_back(std::move(g.representative));
    return out;
}

// Shared per-size cache so repeated audits do not regenerate.
class GenerationCache {
public:
    explicit GenerationCache(int threads = 1) : threads_(threads) {}

    const std::vector<GeneratedClass>& classes(int n) {
        auto it = cache_.find(n);
        if (it == cache_.end())
            it = cache_.emplace(n, generate_poset_classes(n, threads_)).first;
        return it->second;
    }

    int threads() const { return threads_; }

private:
    int threads_;
    std::map<int, std::vector<GeneratedClass>> cache_;
};

}  // namespace pposet
