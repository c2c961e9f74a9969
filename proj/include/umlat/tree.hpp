#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "umlat/core.hpp"

namespace umlat {

// The lattice V x Z over a (d0, d1)-biregular tree. Vertices are materialized
// lazily as root paths (sequences of child indices); the color of a vertex is
// its depth parity, the root has color 0. An element (x, k) is covered by the
// neighbors of x at the level dictated by the edge rule
//   color(x') + 2k' = color(x) + 2k + 1,
// and meets/joins are taken inside the Z^2 coordinatization of the unique
// tree path between the two vertices.
class TreeLattice {
  public:
    struct Element {
        std::vector<int> path;
        int level = 0;
        bool operator==(const Element& o) const = default;
    };

    TreeLattice(int d0, int d1, std::size_t cap = 1u << 20) : d0_(d0), d1_(d1), cap_(cap) {
        if (d0 < 2 || d1 < 2) throw ValidationError("tree: degrees must be >= 2 (no leaves)");
    }

    int uniform_rank() const { return 2; }
    std::size_t enum_cap() const { return cap_; }
    Element base() const { return Element{{}, 0}; }

    int color(const std::vector<int>& path) const { return static_cast<int>(path.size() % 2); }

    Element make(std::vector<int> path, int level) const {
        check_path(path);
        return Element{std::move(path), level};
    }

    long long valuation(const Element& x) const { return color(x.path) + 2LL * x.level; }

    std::vector<Element> covers(const Element& x) const {
        int lvl = x.level + (color(x.path) == 1 ? 1 : 0);
        std::vector<Element> out;
        for (auto& p : neighbors(x.path)) out.push_back(Element{std::move(p), lvl});
        return out;
    }

    std::vector<Element> cocovers(const Element& x) const {
        int lvl = x.level - (color(x.path) == 0 ? 1 : 0);
        std::vector<Element> out;
        for (auto& p : neighbors(x.path)) out.push_back(Element{std::move(p), lvl});
        return out;
    }

    Element ascend(const Element& x) const { return Element{x.path, x.level + 1}; }
    Element descend(const Element& x) const { return Element{x.path, x.level - 1}; }

    bool leq(const Element& a, const Element& b) const { return meet(a, b) == a; }

    Element meet(const Element& a, const Element& b) const { return bound(a, b, /*lower=*/true); }
    Element join(const Element& a, const Element& b) const { return bound(a, b, /*lower=*/false); }

    std::string encode(const Element& x) const {
        nlohmann::json j;
        j["k"] = x.level;
        j["path"] = x.path;
        return j.dump();
    }

    Element decode(const std::string& s) const {
        nlohmann::json j = nlohmann::json::parse(s, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("path") || !j.contains("k"))
            throw ValidationError("tree: element must be {\"path\":[...],\"k\":int}");
        std::vector<int> path;
        for (const auto& v : j["path"]) {
            if (!v.is_number_integer()) throw ValidationError("tree: path entries must be integers");
            path.push_back(v.get<int>());
        }
        check_path(path);
        return Element{std::move(path), j["k"].get<int>()};
    }

    // The unique tree path from x to y, as root paths. x first.
    std::vector<std::vector<int>> path_between(const std::vector<int>& x, const std::vector<int>& y) const {
        std::size_t common = 0;
        while (common < x.size() && common < y.size() && x[common] == y[common]) ++common;
        std::vector<std::vector<int>> out;
        for (std::size_t len = x.size(); len + 1 > common + 1; --len)
            out.emplace_back(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(len));
        out.emplace_back(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(common));
        for (std::size_t len = common + 1; len <= y.size(); ++len)
            out.emplace_back(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(len));
        return out;
    }

    // Z^2 coordinates of (vertex at position i on a fixed path, level) with
    // origin (path.front(), 0): z1 + z2 tracks the valuation, z1 - z2 = i.
    std::pair<int, int> path_coords(const std::vector<std::vector<int>>& path, std::size_t i, int level) const {
        int d = static_cast<int>(color(path[i]) + 2 * level - color(path.front()));
        int pos = static_cast<int>(i);
        return {(d + pos) / 2, (d - pos) / 2};
    }

  private:
    std::vector<std::vector<int>> neighbors(const std::vector<int>& path) const {
        check_path(path);
        std::vector<std::vector<int>> out;
        if (!path.empty()) {
            out.emplace_back(path.begin(), path.end() - 1);
        }
        int nchildren = child_count(path);
        for (int i = 0; i < nchildren; ++i) {
            std::vector<int> c = path;
            c.push_back(i);
            out.push_back(std::move(c));
        }
        return out;
    }

    int degree_of_color(int col) const { return col == 0 ? d0_ : d1_; }

    int child_count(const std::vector<int>& path) const {
        int d = degree_of_color(color(path));
        return path.empty() ? d : d - 1;
    }

    void check_path(const std::vector<int>& path) const {
        for (std::size_t i = 0; i < path.size(); ++i) {
            std::vector<int> prefix(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i));
            if (path[i] < 0 || path[i] >= child_count(prefix))
                throw ValidationError("tree: path index out of range for the degree profile");
        }
    }

    Element bound(const Element& a, const Element& b, bool lower) const {
        auto path = path_between(a.path, b.path);
        std::size_t m = path.size() - 1;
        auto [a1, a2] = path_coords(path, 0, a.level);
        auto [b1, b2] = path_coords(path, m, b.level);
        int z1 = lower ? std::min(a1, b1) : std::max(a1, b1);
        int z2 = lower ? std::min(a2, b2) : std::max(a2, b2);
        int pos = z1 - z2;
        int d = z1 + z2 + color(a.path);
        const std::vector<int>& v = path[static_cast<std::size_t>(pos)];
        return Element{v, (d - color(v)) / 2};
    }

    int d0_, d1_;
    std::size_t cap_;
};

}  // namespace umlat
