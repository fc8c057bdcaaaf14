#pragma once

#include <map>
#include <string>
#include <utility>

#include "surfcohom/bigint.hpp"
#include "surfcohom/presentation.hpp"

namespace surfcohom {

/// Element of the integral group ring of the free group: a finite map
/// Word -> nonzero integer. The empty map is 0.
class GroupRingElement {
public:
    using Terms = std::map<Word, BigInt>;

    GroupRingElement() = default;
    explicit GroupRingElement(const Word& w, BigInt c = 1) { add(w, std::move(c)); }

    static GroupRingElement zero() { return {}; }
    static GroupRingElement one() { return GroupRingElement(Word{}); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    BigInt coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add(const Word& w, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GroupRingElement& operator+=(const GroupRingElement& rhs) {
        for (const auto& [w, c] : rhs.terms_) add(w, c);
        return *this;
    }
    GroupRingElement& operator-=(const GroupRingElement& rhs) {
        for (const auto& [w, c] : rhs.terms_) add(w, -c);
        return *this;
    }
    GroupRingElement& operator*=(const BigInt& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
        return a += b;
    }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
        return a -= b;
    }
    friend GroupRingElement operator-(GroupRingElement a) { return a *= BigInt(-1); }
    friend GroupRingElement operator*(GroupRingElement a, const BigInt& s) { return a *= s; }
    friend GroupRingElement operator*(const BigInt& s, GroupRingElement a) { return a *= s; }

    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        GroupRingElement out;
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) out.add(u * v, cu * cv);
        return out;
    }

    /// Left multiplication by a single word.
    friend GroupRingElement operator*(const Word& g, const GroupRingElement& r) {
        GroupRingElement out;
        for (const auto& [v, c] : r.terms_) out.add(g * v, c);
        return out;
    }

    bool operator==(const GroupRingElement&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            if (mag != 1 || w.empty()) out += mag.str();
            if (mag != 1 && !w.empty()) out += " ";
            if (!w.empty()) out += w.str();
        }
        return out;
    }

private:
    Terms terms_;
};

/// Sum of all coefficients; the ring map sending every word to 1.
inline BigInt augmentation(const GroupRingElement& r) {
    BigInt s = 0;
    for (const auto& [w, c] : r.terms()) s += c;
    return s;
}

/// Throws PresentationMismatch if a term uses a generator outside pres.
inline void check_presentation(const SurfacePresentation& pres, const GroupRingElement& r) {
    for (const auto& [w, c] : r.terms()) pres.check(w);
}

/// Fox derivative d(word)/d(gen). One left-to-right pass: a letter gen^+1
/// contributes +prefix, a letter gen^-1 contributes -(prefix gen^-1).
inline GroupRingElement fox_derivative(const Word& word, Generator gen) {
    GroupRingElement out;
    Word prefix;
    for (const auto& l : word.letters()) {
        if (l.generator == gen && l.exponent == 1) out.add(prefix, 1);
        prefix *= Word({l});
        if (l.generator == gen && l.exponent == -1) out.add(prefix, -1);
    }
    return out;
}

/// Linear extension of the Fox derivative to the group ring.
inline GroupRingElement fox_derivative(const GroupRingElement& r, Generator gen) {
    GroupRingElement out;
    for (const auto& [w, c] : r.terms()) out += fox_derivative(w, gen) * c;
    return out;
}

} // namespace surfcohom
