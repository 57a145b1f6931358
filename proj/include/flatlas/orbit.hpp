#pragma once

#include <deque>
#include <map>
#include <utility>
#include <vector>

#include "flatlas/common.hpp"
#include "flatlas/cylinders.hpp"
#include "flatlas/origami.hpp"

namespace flatlas {

struct OrbitResult {
    std::vector<Origami> elements; // canonical forms, sorted
    bool truncated = false;
};

// Orbit of an origami under the standard SL(2,Z) generators S (quarter turn)
// and T (full twist of every horizontal cylinder).  Both act bijectively on
// the finite set of n-square origamis, so the forward closure is the whole
// group orbit.
inline OrbitResult sl2z_orbit(const Origami& o, long limit = 0) {
    validate_origami(o);
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    std::map<Key, Origami> seen;
    std::deque<Origami> queue;
    auto push = [&](const Origami& x) {
        Origami canon = canonical_origami_form(x);
        Key key{canon.r.img, canon.u.img};
        if (seen.count(key)) return;
        seen.emplace(std::move(key), canon);
        queue.push_back(std::move(canon));
    };
    push(o);
    OrbitResult res;
    while (!queue.empty()) {
        if (limit > 0 && static_cast<long>(seen.size()) > limit) {
            res.truncated = true;
            break;
        }
        Origami cur = std::move(queue.front());
        queue.pop_front();
        push(sl2z_S(cur));
        push(sl2z_T(cur));
    }
    for (auto& [key, val] : seen) res.elements.push_back(std::move(val));
    return res;
}

} // namespace flatlas
