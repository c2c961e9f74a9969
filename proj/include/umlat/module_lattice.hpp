#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "umlat/core.hpp"
#include "umlat/rat_matrix.hpp"

namespace umlat {

// Full-rank free R-submodules of K^n for K = F_q(t) and R the valuation ring
// at t = 0, ordered by inclusion. An element is its canonical dvr_hermite
// basis, so equality is structural. The window bound B confines every module
// to t^B R^n <= L <= t^-B R^n; operations that would leave it throw.
class ModuleLattice {
  public:
    struct Element {
        RatMatrix H;
        bool operator==(const Element& o) const = default;
    };

    ModuleLattice(int n, int q, int window, std::size_t cap = 1u << 20)
        : n_(n), window_(window), cap_(cap), F_(q) {
        if (n < 1) throw ValidationError("module: rank must be >= 1");
        if (window < 1) throw ValidationError("module: window bound must be >= 1");
    }

    int uniform_rank() const { return n_; }
    std::size_t enum_cap() const { return cap_; }
    const PrimeField& field() const { return F_; }
    int q() const { return F_.p(); }
    int window_bound() const { return window_; }

    Element base() const { return Element{matrix::identity(n_)}; }

    // Canonicalize a generator matrix (n rows, >= n columns) into an element.
    Element make(const RatMatrix& generators) const {
        if (generators.rows != n_) throw ValidationError("module: generator row count mismatch");
        Element e{matrix::dvr_hermite(F_, generators)};
        check_window(e.H);
        return e;
    }

    bool member(const Element& L, const std::vector<RationalFunction>& x) const {
        return matrix::in_column_span(F_, L.H, x);
    }

    bool leq(const Element& a, const Element& b) const {
        for (int j = 0; j < n_; ++j) {
            std::vector<RationalFunction> c(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i) c[static_cast<std::size_t>(i)] = a.H.at(i, j);
            if (!member(b, c)) return false;
        }
        return true;
    }

    Element join(const Element& a, const Element& b) const {
        return make(matrix::concat_cols(a.H, b.H));
    }

    // Intersection through duality: (L ^ M)* = L* + M*, where the dual module
    // is spanned by the inverse transpose of the basis.
    Element meet(const Element& a, const Element& b) const {
        RatMatrix da = dual_basis(a.H), db = dual_basis(b.H);
        RatMatrix sum = matrix::dvr_hermite(F_, matrix::concat_cols(da, db));
        return make(dual_basis(sum));
    }

    // Covers are L + R t^-1 v over the (q^n - 1)/(q - 1) lines of the
    // quotient ascend(L)/L, lifted through the basis columns.
    std::vector<Element> covers(const Element& L) const {
        std::vector<Element> out;
        for (const auto& c : projective_points()) {
            RatMatrix ext(n_, n_ + 1);
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) ext.at(i, j) = L.H.at(i, j);
            for (int i = 0; i < n_; ++i) {
                RationalFunction acc = ratfun::zero();
                for (int j = 0; j < n_; ++j) {
                    if (c[static_cast<std::size_t>(j)] == 0) continue;
                    acc = ratfun::add(F_, acc,
                                      ratfun::mul(F_, ratfun::from_int(F_, c[static_cast<std::size_t>(j)]),
                                                  L.H.at(i, j)));
                }
                ext.at(i, n_) = ratfun::mul(F_, acc, ratfun::t_power(-1));
            }
            out.push_back(make(ext));
        }
        return out;
    }

    // Cocovers correspond dually to hyperplanes of L/descend(L).
    std::vector<Element> cocovers(const Element& L) const {
        std::vector<Element> out;
        for (const auto& phi : projective_points()) {
            int pivot = 0;
            while (phi[static_cast<std::size_t>(pivot)] == 0) ++pivot;
            RatMatrix gen(n_, 2 * n_ - 1);
            int col = 0;
            for (int i = 0; i < n_; ++i) {
                if (i == pivot) continue;
                // kernel vector e_i - phi_i e_pivot of the functional phi
                for (int r = 0; r < n_; ++r) {
                    RationalFunction v = L.H.at(r, i);
                    if (phi[static_cast<std::size_t>(i)] != 0) {
                        RationalFunction s = ratfun::mul(
                            F_, ratfun::from_int(F_, phi[static_cast<std::size_t>(i)]), L.H.at(r, pivot));
                        v = ratfun::sub(F_, v, s);
                    }
                    gen.at(r, col) = v;
                }
                ++col;
            }
            for (int j = 0; j < n_; ++j) {
                for (int r = 0; r < n_; ++r)
                    gen.at(r, col) = ratfun::mul(F_, L.H.at(r, j), ratfun::t_power(1));
                ++col;
            }
            out.push_back(make(gen));
        }
        return out;
    }

    Element ascend(const Element& L) const {
        Element e{matrix::scale(F_, L.H, ratfun::t_power(-1))};
        check_window(e.H);
        return e;
    }

    Element descend(const Element& L) const {
        Element e{matrix::scale(F_, L.H, ratfun::t_power(1))};
        check_window(e.H);
        return e;
    }

    long long h_value(const Element& L) const {
        return ratfun::val(matrix::det(F_, L.H));
    }

    // -h is the valuation: larger modules have smaller h.
    long long valuation(const Element& L) const { return -h_value(L); }

    std::string encode(const Element& L) const {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < n_; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < n_; ++j) row.push_back(ratfun::to_string(L.H.at(i, j)));
            rows.push_back(std::move(row));
        }
        nlohmann::json j;
        j["basis"] = std::move(rows);
        return j.dump();
    }

    Element decode(const std::string& s) const {
        nlohmann::json j = nlohmann::json::parse(s, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("basis"))
            throw ValidationError("module: element must be {\"basis\":[[ratfun,...],...]}");
        const auto& rows = j["basis"];
        if (!rows.is_array() || static_cast<int>(rows.size()) != n_)
            throw ValidationError("module: basis must have n rows");
        RatMatrix M(n_, n_);
        for (int i = 0; i < n_; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != n_)
                throw ValidationError("module: basis rows must have n entries");
            for (int jj = 0; jj < n_; ++jj) {
                if (!row[static_cast<std::size_t>(jj)].is_string())
                    throw ValidationError("module: basis entries must be ratfun strings");
                M.at(i, jj) = ratfun::parse(F_, row[static_cast<std::size_t>(jj)].get<std::string>());
            }
        }
        return make(M);
    }

    // Diagonal module t^-a1 R + ... + t^-an R (bigger exponent, bigger module).
    Element diagonal(const std::vector<int>& a) const {
        if (static_cast<int>(a.size()) != n_) throw ValidationError("module: diagonal length mismatch");
        RatMatrix M(n_, n_);
        for (int i = 0; i < n_; ++i) M.at(i, i) = ratfun::t_power(-a[static_cast<std::size_t>(i)]);
        return make(M);
    }

  private:
    // Basis of the dual module {y : <x,y> in R for all x in L}.
    RatMatrix dual_basis(const RatMatrix& H) const {
        return matrix::transpose(F_, matrix::inverse(F_, H));
    }

    void check_window(const RatMatrix& H) const {
        for (const auto& e : H.a)
            if (!e.is_zero() && ratfun::val(e) < -window_)
                throw WindowError("module: basis entry below t^-B window");
        RatMatrix inv = matrix::inverse(F_, H);
        for (const auto& e : inv.a)
            if (!e.is_zero() && ratfun::val(e) < -window_)
                throw WindowError("module: module does not contain t^B R^n");
    }

    // Representatives of P(F_q^n): first nonzero coordinate 1, lex order.
    std::vector<std::vector<int>> projective_points() const {
        std::vector<std::vector<int>> out;
        std::vector<int> v(static_cast<std::size_t>(n_), 0);
        for (;;) {
            int i = n_ - 1;
            while (i >= 0 && v[static_cast<std::size_t>(i)] == F_.p() - 1) {
                v[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++v[static_cast<std::size_t>(i)];
            int first = 0;
            while (v[static_cast<std::size_t>(first)] == 0) ++first;
            if (v[static_cast<std::size_t>(first)] == 1) out.push_back(v);
        }
        return out;
    }

    int n_;
    int window_;
    std::size_t cap_;
    PrimeField F_;
};

}  // namespace umlat
