#pragma once

#include "umlat/core.hpp"

namespace umlat {

// Order-reversing adapter: meets become joins, covers become cocovers. The
// opposite of a uniform modular lattice is again one, with ascend and descend
// exchanged.
template <LatticeInstance L>
class OppositeLattice {
  public:
    using Element = typename L::Element;

    explicit OppositeLattice(const L& inner) : inner_(&inner) {}

    int uniform_rank() const { return inner_->uniform_rank(); }
    std::size_t enum_cap() const { return inner_->enum_cap(); }
    Element base() const { return inner_->base(); }

    bool leq(const Element& x, const Element& y) const { return inner_->leq(y, x); }
    Element meet(const Element& x, const Element& y) const { return inner_->join(x, y); }
    Element join(const Element& x, const Element& y) const { return inner_->meet(x, y); }
    std::vector<Element> covers(const Element& x) const { return inner_->cocovers(x); }
    std::vector<Element> cocovers(const Element& x) const { return inner_->covers(x); }

    Element ascend(const Element& x) const { return umlat::descend(*inner_, x); }
    Element descend(const Element& x) const { return umlat::ascend(*inner_, x); }

    std::string encode(const Element& x) const { return inner_->encode(x); }
    Element decode(const std::string& s) const { return inner_->decode(s); }

  private:
    const L* inner_;
};

}  // namespace umlat
