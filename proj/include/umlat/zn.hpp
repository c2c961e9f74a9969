#pragma once

#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "umlat/core.hpp"

namespace umlat {

// Z^n with the componentwise order: meet/join are min/max, covers add a unit
// vector, the ascending operator is x -> x + 1.
class ZnLattice {
  public:
    struct Element {
        std::vector<int> c;
        bool operator==(const Element& o) const = default;
    };

    explicit ZnLattice(int n, std::size_t cap = 1u << 20) : n_(n), cap_(cap) {
        if (n < 1) throw ValidationError("Zn: dimension must be >= 1");
    }

    int uniform_rank() const { return n_; }
    std::size_t enum_cap() const { return cap_; }
    Element base() const { return Element{std::vector<int>(static_cast<std::size_t>(n_), 0)}; }
    Element make(std::vector<int> c) const {
        check(c);
        return Element{std::move(c)};
    }

    bool leq(const Element& x, const Element& y) const {
        check(x.c);
        check(y.c);
        for (int i = 0; i < n_; ++i)
            if (x.c[static_cast<std::size_t>(i)] > y.c[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    Element meet(const Element& x, const Element& y) const {
        check(x.c);
        check(y.c);
        Element r = x;
        for (int i = 0; i < n_; ++i)
            r.c[static_cast<std::size_t>(i)] = std::min(x.c[static_cast<std::size_t>(i)], y.c[static_cast<std::size_t>(i)]);
        return r;
    }

    Element join(const Element& x, const Element& y) const {
        check(x.c);
        check(y.c);
        Element r = x;
        for (int i = 0; i < n_; ++i)
            r.c[static_cast<std::size_t>(i)] = std::max(x.c[static_cast<std::size_t>(i)], y.c[static_cast<std::size_t>(i)]);
        return r;
    }

    std::vector<Element> covers(const Element& x) const {
        check(x.c);
        std::vector<Element> out;
        out.reserve(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            Element e = x;
            e.c[static_cast<std::size_t>(i)] += 1;
            out.push_back(std::move(e));
        }
        return out;
    }

    std::vector<Element> cocovers(const Element& x) const {
        check(x.c);
        std::vector<Element> out;
        out.reserve(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            Element e = x;
            e.c[static_cast<std::size_t>(i)] -= 1;
            out.push_back(std::move(e));
        }
        return out;
    }

    Element ascend(const Element& x) const {
        check(x.c);
        Element r = x;
        for (int& v : r.c) ++v;
        return r;
    }

    Element descend(const Element& x) const {
        check(x.c);
        Element r = x;
        for (int& v : r.c) --v;
        return r;
    }

    long long valuation(const Element& x) const {
        check(x.c);
        return std::accumulate(x.c.begin(), x.c.end(), 0LL);
    }

    std::string encode(const Element& x) const {
        check(x.c);
        return nlohmann::json(x.c).dump();
    }

    Element decode(const std::string& s) const {
        nlohmann::json j = nlohmann::json::parse(s, nullptr, false);
        if (j.is_discarded() || !j.is_array()) throw ValidationError("Zn: element must be a JSON int array");
        std::vector<int> c;
        for (const auto& v : j) {
            if (!v.is_number_integer()) throw ValidationError("Zn: element coordinates must be integers");
            c.push_back(v.get<int>());
        }
        check(c);
        return Element{std::move(c)};
    }

  private:
    void check(const std::vector<int>& c) const {
        if (static_cast<int>(c.size()) != n_) throw ValidationError("Zn: dimension mismatch");
    }

    int n_;
    std::size_t cap_;
};

}  // namespace umlat
