#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "surfcohom/errors.hpp"

namespace surfcohom {

enum class Family : unsigned char { A, B };

struct Generator {
    Family family = Family::A;
    int index = 1;

    auto operator<=>(const Generator&) const = default;

    std::string name() const {
        return (family == Family::A ? "a" : "b") + std::to_string(index);
    }
};

inline Generator gen_a(int i) { return {Family::A, i}; }
inline Generator gen_b(int i) { return {Family::B, i}; }

/// A generator raised to +1 or -1. Powers are written as repeated letters.
struct Letter {
    Generator generator;
    int exponent = 1;

    auto operator<=>(const Letter&) const = default;

    Letter inverse() const { return {generator, -exponent}; }
    bool cancels(const Letter& other) const {
        return generator == other.generator && exponent == -other.exponent;
    }
};

/// Freely reduced word in the free group on the surface generators.
/// The empty word is the identity.
class Word {
public:
    Word() = default;

    explicit Word(std::vector<Letter> letters) {
        letters_.reserve(letters.size());
        for (const auto& l : letters) push(l);
    }

    Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

    static Word of(Generator g, int exponent = 1) { return Word({Letter{g, exponent}}); }

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    Word inverse() const {
        Word out;
        out.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            out.letters_.push_back(it->inverse());
        return out;
    }

    /// Prefix of the first n letters (already reduced).
    Word prefix(std::size_t n) const {
        Word out;
        out.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n));
        return out;
    }

    Word& operator*=(const Word& rhs) {
        for (const auto& l : rhs.letters_) push(l);
        return *this;
    }

    friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

    auto operator<=>(const Word&) const = default;

    std::string str() const {
        if (letters_.empty()) return "1";
        std::string out;
        for (const auto& l : letters_) {
            if (!out.empty()) out += ' ';
            out += l.generator.name();
            if (l.exponent < 0) out += "^-1";
        }
        return out;
    }

private:
    void push(const Letter& l) {
        if (l.exponent != 1 && l.exponent != -1)
            throw InvalidArgument("letter exponent must be +1 or -1");
        if (!letters_.empty() && letters_.back().cancels(l))
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    std::vector<Letter> letters_;
};

enum class SurfaceKind : unsigned char { Orientable, NonOrientable };

/// Standard one-relator presentation of a closed surface group other than
/// S^2 and RP^2: genus >= 1 when orientable, >= 2 otherwise.
class SurfacePresentation {
public:
    SurfacePresentation(SurfaceKind kind, int genus) : kind_(kind), genus_(genus) {
        const int min_genus = kind == SurfaceKind::Orientable ? 1 : 2;
        if (genus < min_genus)
            throw InvalidArgument("genus " + std::to_string(genus) + " is below the minimum " +
                                  std::to_string(min_genus) + " for this surface kind");
    }

    static SurfacePresentation orientable(int genus) { return {SurfaceKind::Orientable, genus}; }
    static SurfacePresentation nonorientable(int genus) {
        return {SurfaceKind::NonOrientable, genus};
    }

    SurfaceKind kind() const noexcept { return kind_; }
    int genus() const noexcept { return genus_; }
    bool is_orientable() const noexcept { return kind_ == SurfaceKind::Orientable; }

    /// a1..an, then b1..bn in the orientable case.
    std::vector<Generator> generators() const {
        std::vector<Generator> out;
        for (int i = 1; i <= genus_; ++i) out.push_back(gen_a(i));
        if (is_orientable())
            for (int i = 1; i <= genus_; ++i) out.push_back(gen_b(i));
        return out;
    }

    std::size_t generator_count() const noexcept {
        return static_cast<std::size_t>(is_orientable() ? 2 * genus_ : genus_);
    }

    /// Position of g in generators().
    std::size_t generator_position(Generator g) const {
        check(g);
        return static_cast<std::size_t>(g.index - 1 + (g.family == Family::B ? genus_ : 0));
    }

    bool contains(Generator g) const noexcept {
        if (g.index < 1 || g.index > genus_) return false;
        return g.family == Family::A || is_orientable();
    }

    bool contains(const Word& w) const noexcept {
        for (const auto& l : w.letters())
            if (!contains(l.generator)) return false;
        return true;
    }

    void check(Generator g) const {
        if (!contains(g))
            throw PresentationMismatch("generator " + g.name() + " is not in " + str());
    }

    void check(const Word& w) const {
        for (const auto& l : w.letters()) check(l.generator);
    }

    /// [a_i, b_i] = a_i b_i a_i^-1 b_i^-1.
    Word commutator(int i) const {
        return Word({{gen_a(i), 1}, {gen_b(i), 1}, {gen_a(i), -1}, {gen_b(i), -1}});
    }

    /// Product of the first k relator blocks: p_1...p_k, or a_1^2...a_k^2.
    Word relator_prefix(int k) const {
        Word out;
        for (int i = 1; i <= k; ++i) {
            if (is_orientable())
                out *= commutator(i);
            else
                out *= Word({{gen_a(i), 1}, {gen_a(i), 1}});
        }
        return out;
    }

    Word relator() const { return relator_prefix(genus_); }

    std::string str() const {
        return std::string(is_orientable() ? "orientable" : "nonorientable") + " genus " +
               std::to_string(genus_);
    }

    /// Euler characteristic of the surface.
    int euler_characteristic() const noexcept {
        return is_orientable() ? 2 - 2 * genus_ : 2 - genus_;
    }

    bool operator==(const SurfacePresentation&) const = default;

private:
    SurfaceKind kind_;
    int genus_;
};

inline Word relator(const SurfacePresentation& pres) { return pres.relator(); }

inline Word word_product(const SurfacePresentation& pres, const Word& u, const Word& v) {
    pres.check(u);
    pres.check(v);
    return u * v;
}

/// Parses whitespace-separated tokens `a<k>`, `b<k>`, each optionally
/// followed by `^-1`. The empty string is the identity.
inline Word parse_word(std::string_view text, const SurfacePresentation& pres) {
    std::istringstream in{std::string(text)};
    std::vector<Letter> letters;
    std::string tok;
    while (in >> tok) {
        std::string_view t = tok;
        int exponent = 1;
        if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
            exponent = -1;
            t.remove_suffix(3);
        }
        if (t.size() < 2 || (t[0] != 'a' && t[0] != 'b'))
            throw ParseError("unknown token '" + tok + "'");
        int index = 0;
        for (char c : t.substr(1)) {
            if (c < '0' || c > '9') throw ParseError("unknown token '" + tok + "'");
            index = index * 10 + (c - '0');
            if (index > 1'000'000) throw ParseError("index out of range in '" + tok + "'");
        }
        Generator g{t[0] == 'a' ? Family::A : Family::B, index};
        if (g.family == Family::B && !pres.is_orientable())
            throw ParseError("token '" + tok + "' uses b in a nonorientable presentation");
        if (index < 1 || index > pres.genus())
            throw ParseError("index out of range in '" + tok + "' (genus " +
                             std::to_string(pres.genus()) + ")");
        letters.push_back({g, exponent});
    }
    return Word(std::move(letters));
}

} // namespace surfcohom
