#pragma once
// Left M-linear combinations over an ordered key set.  Used both for
// Steenrod algebra elements (keys = admissible sequences) and for module
// elements (keys = generator indices).

#include <functional>
#include <map>
#include <string>

#include "rmot/ground.hpp"

namespace rmot {

template <class Key>
class MComb {
  public:
    using Map = std::map<Key, GroundElement>;

    MComb() = default;
    MComb(const Key& k, GroundElement c = GroundElement::one()) { add(k, c); }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    GroundElement coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? GroundElement{} : it->second;
    }

    void add(const Key& k, const GroundElement& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    MComb& operator+=(const MComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    MComb operator+(const MComb& o) const {
        MComb x = *this;
        x += o;
        return x;
    }
    // Left scalar multiplication.
    MComb scaled(const GroundElement& c) const {
        MComb out;
        if (c.is_zero()) return out;
        for (const auto& [k, d] : terms_) out.add(k, c * d);
        return out;
    }
    void add_scaled(const MComb& o, const GroundElement& c) {
        if (c.is_zero()) return;
        for (const auto& [k, d] : o.terms_) add(k, c * d);
    }
    // Coefficients sent through a ring map F2[t,r] -> F2 given by (tv, rv).
    MComb specialized(int tv, int rv) const {
        MComb out;
        for (const auto& [k, c] : terms_)
            if (c.evaluate(tv, rv)) out.add(k, GroundElement::one());
        return out;
    }
    bool operator==(const MComb&) const = default;

    std::string str(const std::function<std::string(const Key&)>& name) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            for (const Mono& m : c.monos()) {
                if (!out.empty()) out += " + ";
                std::string cs = GroundElement(m).str();
                std::string ks = name(k);
                if (cs == "1")
                    out += ks.empty() ? "1" : ks;
                else
                    out += ks.empty() ? cs : cs + " " + ks;
            }
        }
        return out;
    }

  private:
    Map terms_;
};

}  // namespace rmot
