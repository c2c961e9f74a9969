#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "umlat/errors.hpp"

namespace umlat {

// Capability set every concrete lattice provides. Elements are immutable
// values with decidable equality; encode() is a canonical string, unique per
// element, used for hashing, deterministic scan orders and JSON I/O.
template <typename L>
concept LatticeInstance = requires(const L& lat, const typename L::Element& x,
                                   const typename L::Element& y, const std::string& s) {
    typename L::Element;
    { lat.uniform_rank() } -> std::convertible_to<int>;
    { lat.base() } -> std::convertible_to<typename L::Element>;
    { lat.leq(x, y) } -> std::convertible_to<bool>;
    { lat.meet(x, y) } -> std::convertible_to<typename L::Element>;
    { lat.join(x, y) } -> std::convertible_to<typename L::Element>;
    { lat.covers(x) } -> std::convertible_to<std::vector<typename L::Element>>;
    { lat.cocovers(x) } -> std::convertible_to<std::vector<typename L::Element>>;
    { lat.encode(x) } -> std::convertible_to<std::string>;
    { lat.decode(s) } -> std::convertible_to<typename L::Element>;
    { lat.enum_cap() } -> std::convertible_to<std::size_t>;
    { x == y } -> std::convertible_to<bool>;
};

template <LatticeInstance L>
using elem_t = typename L::Element;

// Instances may ship the closed-form ascending operator / valuation of their
// defining example; generic routes below stay available and the test suite
// checks both agree.
template <typename L>
concept HasNativeAscend = requires(const L& lat, const typename L::Element& x) {
    { lat.ascend(x) } -> std::convertible_to<typename L::Element>;
    { lat.descend(x) } -> std::convertible_to<typename L::Element>;
};

template <typename L>
concept HasNativeValuation = requires(const L& lat, const typename L::Element& x) {
    { lat.valuation(x) } -> std::convertible_to<long long>;
};

inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// Deterministic candidate order: canonical encodings ascending; a nonzero
// seed applies a reproducible permutation on top (used to exercise
// choice-independence of the existential steps).
template <LatticeInstance L>
std::vector<elem_t<L>> scan_order(const L& lat, std::vector<elem_t<L>> xs, std::uint64_t seed = 0) {
    std::sort(xs.begin(), xs.end(), [&](const elem_t<L>& a, const elem_t<L>& b) {
        return lat.encode(a) < lat.encode(b);
    });
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(xs.begin(), xs.end(), rng);
    }
    return xs;
}

template <LatticeInstance L>
elem_t<L> join_all(const L& lat, const std::vector<elem_t<L>>& xs) {
    if (xs.empty()) throw ValidationError("join of empty set");
    elem_t<L> acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = lat.join(acc, xs[i]);
    return acc;
}

template <LatticeInstance L>
elem_t<L> meet_all(const L& lat, const std::vector<elem_t<L>>& xs) {
    if (xs.empty()) throw ValidationError("meet of empty set");
    elem_t<L> acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = lat.meet(acc, xs[i]);
    return acc;
}

// Defining route: join of all covers. Kept callable on every instance so the
// closed-form operator can be checked against it.
template <LatticeInstance L>
elem_t<L> ascend_generic(const L& lat, const elem_t<L>& x) {
    auto cs = lat.covers(x);
    if (cs.empty())
        throw AssertionError("ascend: element has no covers (broken instance)",
                             "{\"element\":\"" + lat.encode(x) + "\"}");
    return join_all(lat, cs);
}

template <LatticeInstance L>
elem_t<L> descend_generic(const L& lat, const elem_t<L>& x) {
    auto cs = lat.cocovers(x);
    if (cs.empty())
        throw AssertionError("descend: element has no cocovers (broken instance)",
                             "{\"element\":\"" + lat.encode(x) + "\"}");
    return meet_all(lat, cs);
}

template <LatticeInstance L>
elem_t<L> ascend(const L& lat, const elem_t<L>& x) {
    if constexpr (HasNativeAscend<L>)
        return lat.ascend(x);
    else
        return ascend_generic(lat, x);
}

template <LatticeInstance L>
elem_t<L> descend(const L& lat, const elem_t<L>& x) {
    if constexpr (HasNativeAscend<L>)
        return lat.descend(x);
    else
        return descend_generic(lat, x);
}

template <LatticeInstance L>
elem_t<L> shift(const L& lat, elem_t<L> x, int k) {
    for (; k > 0; --k) x = ascend(lat, x);
    for (; k < 0; ++k) x = descend(lat, x);
    return x;
}

// Length of a maximal chain from x to y, built greedily through covers that
// stay below y; well-defined by the Jordan-Dedekind condition.
template <LatticeInstance L>
int interval_rank(const L& lat, const elem_t<L>& x, const elem_t<L>& y) {
    if (!lat.leq(x, y)) throw ValidationError("interval_rank: x is not below y");
    int r = 0;
    elem_t<L> z = x;
    while (!(z == y)) {
        bool advanced = false;
        for (const auto& c : lat.covers(z)) {
            if (lat.leq(c, y)) {
                z = c;
                ++r;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw AssertionError("interval_rank: no cover below the top",
                                 "{\"z\":\"" + lat.encode(z) + "\",\"y\":\"" + lat.encode(y) + "\"}");
    }
    return r;
}

template <LatticeInstance L>
long long relative_valuation_generic(const L& lat, const elem_t<L>& base, const elem_t<L>& x) {
    elem_t<L> m = lat.meet(x, base);
    return interval_rank(lat, m, x) - interval_rank(lat, m, base);
}

// Valuation normalized to 0 at `base`; satisfies v(x)+v(y) = v(x^y)+v(xvy)
// and v(ascend(x)) = v(x) + n.
template <LatticeInstance L>
long long relative_valuation(const L& lat, const elem_t<L>& base, const elem_t<L>& x) {
    if constexpr (HasNativeValuation<L>)
        return lat.valuation(x) - lat.valuation(base);
    else
        return relative_valuation_generic(lat, base, x);
}

// All elements of [x, y], in canonical encoding order.
template <LatticeInstance L>
std::vector<elem_t<L>> enumerate_interval(const L& lat, const elem_t<L>& x, const elem_t<L>& y) {
    if (!lat.leq(x, y)) throw ValidationError("enumerate_interval: x is not below y");
    std::map<std::string, elem_t<L>> seen;
    std::vector<elem_t<L>> queue{x};
    seen.emplace(lat.encode(x), x);
    while (!queue.empty()) {
        elem_t<L> z = queue.back();
        queue.pop_back();
        if (z == y) continue;
        for (const auto& c : lat.covers(z)) {
            if (!lat.leq(c, y)) continue;
            std::string key = lat.encode(c);
            if (seen.count(key)) continue;
            if (seen.size() + 1 > lat.enum_cap())
                throw CapExceeded("enumerate_interval: cap exceeded at " + std::to_string(lat.enum_cap()));
            seen.emplace(std::move(key), c);
            queue.push_back(c);
        }
    }
    std::vector<elem_t<L>> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(v);
    return out;
}

// Least k >= 0 with x below shift(y, k); exists, and is bounded by
// interval_rank(x ^ y, x).
template <LatticeInstance L>
int leq_shift(const L& lat, const elem_t<L>& x, const elem_t<L>& y) {
    int bound = interval_rank(lat, lat.meet(x, y), x);
    int k = 0;
    elem_t<L> g = y;
    while (!lat.leq(x, g)) {
        g = ascend(lat, g);
        ++k;
        lattice_assert(k <= bound, "leq_shift exceeded its rank bound",
                       "{\"x\":\"" + lat.encode(x) + "\",\"y\":\"" + lat.encode(y) + "\"}");
    }
    return k;
}

// ---- chains ----------------------------------------------------------------

template <LatticeInstance L>
void validate_chain(const L& lat, const std::vector<elem_t<L>>& es) {
    if (es.empty()) throw ValidationError("chain must be nonempty");
    for (std::size_t i = 0; i + 1 < es.size(); ++i) {
        if (!(lat.leq(es[i], es[i + 1]) && !(es[i] == es[i + 1])))
            throw ValidationError("chain elements are not strictly increasing");
    }
}

template <LatticeInstance L>
void validate_short_chain(const L& lat, const std::vector<elem_t<L>>& es) {
    validate_chain(lat, es);
    if (!lat.leq(es.back(), ascend(lat, es.front())))
        throw ValidationError("chain is not short: top is not below ascend(bottom)");
}

// Verified chain wrappers; elems stay publicly readable.
template <LatticeInstance L>
struct Chain {
    std::vector<elem_t<L>> elems;
    Chain(const L& lat, std::vector<elem_t<L>> es) : elems(std::move(es)) { validate_chain(lat, elems); }
};

template <LatticeInstance L>
struct ShortChain {
    std::vector<elem_t<L>> elems;
    ShortChain(const L& lat, std::vector<elem_t<L>> es) : elems(std::move(es)) {
        validate_short_chain(lat, elems);
    }
};

template <LatticeInstance L>
std::vector<elem_t<L>> shift_chain(const L& lat, const std::vector<elem_t<L>>& es, int k) {
    std::vector<elem_t<L>> out;
    out.reserve(es.size());
    for (const auto& e : es) out.push_back(shift(lat, e, k));
    return out;
}

// Strictly increasing dedup of a weakly increasing element list.
template <LatticeInstance L>
std::vector<elem_t<L>> dedup_chain(const L& lat, const std::vector<elem_t<L>>& es) {
    std::vector<elem_t<L>> out;
    for (const auto& e : es)
        if (out.empty() || !(out.back() == e)) out.push_back(e);
    validate_chain(lat, out);
    return out;
}

// Refine a chain inside [bottom, top] to a maximal one, inserting at each gap
// the first cover toward the next element in scan order.
template <LatticeInstance L>
std::vector<elem_t<L>> maximalize_in_interval(const L& lat, const std::vector<elem_t<L>>& chain,
                                              const elem_t<L>& bottom, const elem_t<L>& top,
                                              std::uint64_t seed = 0) {
    std::vector<elem_t<L>> anchors{bottom};
    for (const auto& e : chain) {
        if (!(lat.leq(bottom, e) && lat.leq(e, top)))
            throw ValidationError("maximalize: chain leaves the interval");
        anchors.push_back(e);
    }
    anchors.push_back(top);
    anchors = dedup_chain(lat, anchors);

    std::vector<elem_t<L>> out;
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
        elem_t<L> z = anchors[i];
        out.push_back(z);
        while (!(z == anchors[i + 1])) {
            std::vector<elem_t<L>> next;
            for (const auto& c : lat.covers(z))
                if (lat.leq(c, anchors[i + 1])) next.push_back(c);
            lattice_assert(!next.empty(), "maximalize: no cover toward the next anchor");
            z = scan_order(lat, next, seed).front();
            if (!(z == anchors[i + 1])) out.push_back(z);
        }
    }
    out.push_back(anchors.back());
    validate_chain(lat, out);
    return out;
}

// Maximal short chain (x = x^0 < ... < x^n = ascend(x)) refining a short chain.
template <LatticeInstance L>
std::vector<elem_t<L>> maximalize_short(const L& lat, const std::vector<elem_t<L>>& chain,
                                        std::uint64_t seed = 0) {
    validate_short_chain(lat, chain);
    elem_t<L> bottom = chain.front();
    elem_t<L> top = ascend(lat, bottom);
    auto out = maximalize_in_interval(lat, chain, bottom, top, seed);
    lattice_assert(static_cast<int>(out.size()) == lat.uniform_rank() + 1,
                   "maximal short chain has wrong length");
    return out;
}

// ---- sampling ---------------------------------------------------------------

// Random walk from base through covers/cocovers; window violations stop the
// offending step but not the walk.
template <LatticeInstance L>
elem_t<L> random_element(const L& lat, std::mt19937_64& rng, int steps) {
    elem_t<L> z = lat.base();
    for (int s = 0; s < steps; ++s) {
        try {
            std::vector<elem_t<L>> moves = (rng() & 1) ? lat.covers(z) : lat.cocovers(z);
            if (moves.empty()) continue;
            z = moves[rng() % moves.size()];
        } catch (const WindowError&) {
            continue;
        }
    }
    return z;
}

template <LatticeInstance L>
std::vector<elem_t<L>> random_maximal_short_chain(const L& lat, std::mt19937_64& rng,
                                                  const elem_t<L>& bottom) {
    elem_t<L> top = ascend(lat, bottom);
    std::vector<elem_t<L>> out{bottom};
    elem_t<L> z = bottom;
    while (!(z == top)) {
        std::vector<elem_t<L>> next;
        for (const auto& c : lat.covers(z))
            if (lat.leq(c, top)) next.push_back(c);
        lattice_assert(!next.empty(), "maximal short chain sampling stalled");
        z = next[rng() % next.size()];
        out.push_back(z);
    }
    return out;
}

// Random (not necessarily maximal) short chain: a nonempty subset of a random
// maximal one; any such subset is again short.
template <LatticeInstance L>
std::vector<elem_t<L>> random_short_chain(const L& lat, std::mt19937_64& rng, const elem_t<L>& bottom) {
    auto full = random_maximal_short_chain(lat, rng, bottom);
    std::vector<elem_t<L>> out;
    for (const auto& e : full)
        if (rng() % 2) out.push_back(e);
    if (out.empty()) out.push_back(full[rng() % full.size()]);
    return out;
}

}  // namespace umlat
