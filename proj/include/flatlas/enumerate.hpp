#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "flatlas/canonical.hpp"
#include "flatlas/common.hpp"
#include "flatlas/diagram.hpp"
#include "flatlas/stratum.hpp"
#include "flatlas/widths.hpp"

namespace flatlas {

struct EnumerationOptions {
    bool up_to_symmetry = false; // also quotient by the half-turn flip
    int threads = 0;             // 0 = hardware concurrency, capped by FLATLAS_THREADS
};

namespace detail {

inline int enumeration_threads(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("FLATLAS_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

// Partitions of total into k descending parts >= 1.
inline void descending_partitions(int total, int k, int maxpart, std::vector<int>& cur,
                                  std::vector<std::vector<int>>& out) {
    if (k == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int p = std::min(total - (k - 1), maxpart); p >= 1; --p) {
        cur.push_back(p);
        descending_partitions(total - p, k - 1, p, cur, out);
        cur.pop_back();
    }
}

// Compositions of total into k parts >= 1.
inline void compositions(int total, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (k == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int p = 1; p <= total - (k - 1); ++p) {
        cur.push_back(p);
        compositions(total - p, k - 1, cur, out);
        cur.pop_back();
    }
}

// One unit of enumeration work: a bottom profile plus a top-length
// composition.  The bottom words are fixed as consecutive label blocks; the
// worker fills in every choice of top cyclic words.
struct EnumerationJob {
    std::vector<int> profile; // descending bottom lengths
    std::vector<int> comp;    // top lengths
};

class TopWordSearch {
public:
    TopWordSearch(const EnumerationJob& job, const std::vector<int>& target_sorted, bool symmetric,
                  std::set<std::string>& sink)
        : job_(job), target_(target_sorted), symmetric_(symmetric), sink_(sink) {
        E_ = 0;
        for (int b : job.profile) E_ += b;
        k_ = static_cast<int>(job.profile.size());
        bottom_cyl_.assign(static_cast<size_t>(E_), 0);
        bot_prev_.assign(static_cast<size_t>(E_), 0);
        int start = 0;
        for (int ci = 0; ci < k_; ++ci) {
            int len = job.profile[static_cast<size_t>(ci)];
            for (int x = start; x < start + len; ++x) {
                bottom_cyl_[static_cast<size_t>(x)] = ci;
                bot_prev_[static_cast<size_t>(x)] = (x == start) ? start + len - 1 : x - 1;
            }
            start += len;
        }
        used_.assign(static_cast<size_t>(E_), false);
        words_.assign(static_cast<size_t>(k_), {});
    }

    void run() { place_word(0); }

private:
    void place_word(int wi) {
        if (wi == k_) {
            leaf();
            return;
        }
        // First element is the minimum of the word; pick it, then arrange the
        // rest from strictly larger labels.
        int len = job_.comp[static_cast<size_t>(wi)];
        auto& w = words_[static_cast<size_t>(wi)];
        for (int first = 0; first < E_; ++first) {
            if (used_[static_cast<size_t>(first)]) continue;
            w.push_back(first);
            used_[static_cast<size_t>(first)] = true;
            extend_word(wi, len, first);
            used_[static_cast<size_t>(first)] = false;
            w.pop_back();
        }
    }

    void extend_word(int wi, int len, int minlab) {
        auto& w = words_[static_cast<size_t>(wi)];
        if (static_cast<int>(w.size()) == len) {
            place_word(wi + 1);
            return;
        }
        for (int x = minlab + 1; x < E_; ++x) {
            if (used_[static_cast<size_t>(x)]) continue;
            w.push_back(x);
            used_[static_cast<size_t>(x)] = true;
            extend_word(wi, len, minlab);
            used_[static_cast<size_t>(x)] = false;
            w.pop_back();
        }
    }

    void leaf() {
        // Vertex-orbit profile first: VERT(y) = top_next(bot_prev(y)).
        std::vector<int> top_next(static_cast<size_t>(E_)), top_cyl(static_cast<size_t>(E_));
        for (int wi = 0; wi < k_; ++wi) {
            const auto& w = words_[static_cast<size_t>(wi)];
            for (size_t j = 0; j < w.size(); ++j) {
                top_next[static_cast<size_t>(w[j])] = w[(j + 1) % w.size()];
                top_cyl[static_cast<size_t>(w[j])] = wi;
            }
        }
        std::vector<int> lens;
        std::vector<char> seen(static_cast<size_t>(E_), 0);
        for (int s = 0; s < E_; ++s) {
            if (seen[static_cast<size_t>(s)]) continue;
            int len = 0, x = s;
            do {
                seen[static_cast<size_t>(x)] = 1;
                ++len;
                x = top_next[static_cast<size_t>(bot_prev_[static_cast<size_t>(x)])];
            } while (x != s);
            lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end());
        if (lens != target_) return;

        // Connectivity across cylinders.
        std::vector<int> parent(static_cast<size_t>(k_));
        for (int i = 0; i < k_; ++i) parent[static_cast<size_t>(i)] = i;
        auto find = [&](int a) {
            while (parent[static_cast<size_t>(a)] != a) {
                parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
                a = parent[static_cast<size_t>(a)];
            }
            return a;
        };
        for (int x = 0; x < E_; ++x)
            parent[static_cast<size_t>(find(bottom_cyl_[static_cast<size_t>(x)]))] = find(top_cyl[static_cast<size_t>(x)]);
        int root = find(0);
        for (int i = 1; i < k_; ++i)
            if (find(i) != root) return;

        // Assemble and test width solvability, then record the canonical key.
        CylinderDiagram cand;
        int start = 0;
        for (int ci = 0; ci < k_; ++ci) {
            CylinderDiagram::Cyl cyl;
            int len = job_.profile[static_cast<size_t>(ci)];
            for (int x = start; x < start + len; ++x) cyl.bottom.push_back(x);
            start += len;
            cyl.top = words_[static_cast<size_t>(ci)];
            cand.cylinders.push_back(std::move(cyl));
        }
        auto ix = index_diagram(cand);
        if (!every_arc_on_cycle(ix, k_)) return;
        sink_.insert(symmetric_ ? canonical_key_up_to_symmetry(cand) : canonical_key(cand));
    }

    const EnumerationJob& job_;
    const std::vector<int>& target_;
    bool symmetric_;
    std::set<std::string>& sink_;
    int E_ = 0, k_ = 0;
    std::vector<int> bottom_cyl_, bot_prev_;
    std::vector<char> used_;
    std::vector<std::vector<int>> words_;
};

} // namespace detail

// All connected cylinder diagrams with k cylinders in the given abelian
// stratum that admit positive widths, one representative per isomorphism
// class, canonical and sorted by canonical key.
inline std::vector<CylinderDiagram> enumerate_diagrams(const StratumSignature& sig, int k,
                                                       EnumerationOptions opts = {}) {
    check(sig.type == StratumSignature::Type::abelian, errc::bad_input,
          "enumeration expects an abelian stratum");
    check(sig.consistent(), errc::bad_input, "inconsistent stratum signature");
    check(k >= 1, errc::bad_input, "need at least one cylinder");
    int E = 0;
    std::vector<int> target;
    for (int m : sig.orders) {
        E += m + 1;
        target.push_back(m + 1);
    }
    std::sort(target.begin(), target.end());
    std::vector<CylinderDiagram> out;
    if (k > E || E == 0) return out;

    std::vector<std::vector<int>> profiles;
    {
        std::vector<int> cur;
        detail::descending_partitions(E, k, E, cur, profiles);
    }
    std::vector<std::vector<int>> comps;
    {
        std::vector<int> cur;
        detail::compositions(E, k, cur, comps);
    }
    std::vector<detail::EnumerationJob> jobs;
    for (const auto& p : profiles)
        for (const auto& c : comps) jobs.push_back({p, c});

    int nthreads = detail::enumeration_threads(opts.threads);
    nthreads = std::min<int>(nthreads, static_cast<int>(jobs.size()));
    if (nthreads < 1) nthreads = 1;

    std::vector<std::set<std::string>> partial(static_cast<size_t>(nthreads));
    std::atomic<size_t> next{0};
    auto work = [&](int tid) {
        for (;;) {
            size_t j = next.fetch_add(1);
            if (j >= jobs.size()) break;
            detail::TopWordSearch search(jobs[j], target, opts.up_to_symmetry, partial[static_cast<size_t>(tid)]);
            search.run();
        }
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    std::set<std::string> keys;
    for (auto& p : partial) keys.merge(p);
    for (const auto& key : keys) out.push_back(parse_diagram(key));
    return out;
}

// Convenience: number of isomorphism classes.
inline int count_diagrams(const StratumSignature& sig, int k, EnumerationOptions opts = {}) {
    return static_cast<int>(enumerate_diagrams(sig, k, opts).size());
}

} // namespace flatlas
