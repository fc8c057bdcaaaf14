#pragma once

#include <map>
#include <string>
#include <vector>

#include "surfcohom/group_ring.hpp"

namespace surfcohom {

/// Free generator of P_0 = <x>, P_1 = <y_i, z_i> or <y_i>, P_2 = <w>.
struct BasisLabel {
    enum class Kind : unsigned char { X, Y, Z, W };

    Kind kind = Kind::X;
    int index = 0;

    static BasisLabel x() { return {Kind::X, 0}; }
    static BasisLabel y(int i) { return {Kind::Y, i}; }
    static BasisLabel z(int i) { return {Kind::Z, i}; }
    static BasisLabel w() { return {Kind::W, 0}; }

    int degree() const noexcept {
        switch (kind) {
        case Kind::X: return 0;
        case Kind::Y:
        case Kind::Z: return 1;
        case Kind::W: return 2;
        }
        return -1;
    }

    auto operator<=>(const BasisLabel&) const = default;

    std::string str() const {
        switch (kind) {
        case Kind::X: return "x";
        case Kind::Y: return "y" + std::to_string(index);
        case Kind::Z: return "z" + std::to_string(index);
        case Kind::W: return "w";
        }
        return "?";
    }
};

/// Element of P_d: one group-ring coordinate per basis label.
class ChainElement {
public:
    using Coords = std::map<BasisLabel, GroupRingElement>;

    explicit ChainElement(int degree = 0) : degree_(degree) {}

    ChainElement(const GroupRingElement& r, BasisLabel label) : degree_(label.degree()) {
        add(label, r);
    }

    int degree() const noexcept { return degree_; }
    const Coords& coords() const noexcept { return coords_; }
    bool is_zero() const noexcept { return coords_.empty(); }

    GroupRingElement coordinate(BasisLabel label) const {
        auto it = coords_.find(label);
        return it == coords_.end() ? GroupRingElement{} : it->second;
    }

    void add(BasisLabel label, const GroupRingElement& r) {
        if (label.degree() != degree_)
            throw InvalidArgument("label " + label.str() + " has the wrong degree");
        if (r.is_zero()) return;
        auto& slot = coords_[label];
        slot += r;
        if (slot.is_zero()) coords_.erase(label);
    }

    ChainElement& operator+=(const ChainElement& rhs) {
        if (!rhs.is_zero() && rhs.degree_ != degree_)
            throw InvalidArgument("adding chains of different degrees");
        for (const auto& [l, r] : rhs.coords_) add(l, r);
        return *this;
    }

    friend ChainElement operator+(ChainElement a, const ChainElement& b) { return a += b; }

    /// Left action of the group ring.
    friend ChainElement operator*(const GroupRingElement& r, const ChainElement& c) {
        ChainElement out(c.degree_);
        for (const auto& [l, coord] : c.coords_) out.add(l, r * coord);
        return out;
    }

    bool operator==(const ChainElement&) const = default;

    std::string str() const {
        if (coords_.empty()) return "0";
        std::string out;
        for (const auto& [l, r] : coords_) {
            if (!out.empty()) out += " + ";
            if (r == GroupRingElement::one())
                out += l.str();
            else
                out += "(" + r.str() + ") " + l.str();
        }
        return out;
    }

private:
    int degree_;
    Coords coords_;
};

/// Length-2 free resolution of Z over ZG for a surface group G:
///   0 -> P_2 -> P_1 -> P_0 -> Z -> 0
/// with d1(y_i) = (a_i - 1)x, d1(z_i) = (b_i - 1)x and the coordinates of
/// d2(w) the Fox derivatives of the relator.
class Resolution {
public:
    explicit Resolution(SurfacePresentation pres) : pres_(pres) {
        for (int i = 1; i <= pres_.genus(); ++i) p1_basis_.push_back(BasisLabel::y(i));
        if (pres_.is_orientable())
            for (int i = 1; i <= pres_.genus(); ++i) p1_basis_.push_back(BasisLabel::z(i));

        const Word p = pres_.relator();
        d2_ = ChainElement(1);
        for (const auto& label : p1_basis_) {
            const Generator g = generator_of(label);
            d1_.emplace(label, ChainElement(GroupRingElement(Word::of(g)) - GroupRingElement::one(),
                                            BasisLabel::x()));
            d2_.add(label, fox_derivative(p, g));
        }
    }

    const SurfacePresentation& presentation() const noexcept { return pres_; }

    /// y_1..y_n, then z_1..z_n when orientable.
    const std::vector<BasisLabel>& p1_basis() const noexcept { return p1_basis_; }
    std::size_t p1_rank() const noexcept { return p1_basis_.size(); }

    std::size_t p1_position(BasisLabel label) const {
        for (std::size_t i = 0; i < p1_basis_.size(); ++i)
            if (p1_basis_[i] == label) return i;
        throw InvalidArgument("label " + label.str() + " is not a basis element of P_1");
    }

    /// The generator whose edge the degree-1 label represents.
    Generator generator_of(BasisLabel label) const {
        if (label.kind == BasisLabel::Kind::Y) return gen_a(label.index);
        if (label.kind == BasisLabel::Kind::Z) return gen_b(label.index);
        throw InvalidArgument("label " + label.str() + " is not of degree 1");
    }

    const ChainElement& d1(BasisLabel label) const {
        auto it = d1_.find(label);
        if (it == d1_.end()) throw InvalidArgument("no degree-1 label " + label.str());
        return it->second;
    }

    const ChainElement& d2() const noexcept { return d2_; }

    /// Boundary of a basis label of degree 1 or 2.
    const ChainElement& boundary(BasisLabel label) const {
        if (label.degree() == 2) return d2_;
        return d1(label);
    }

    /// Chosen free-group representative of the group element a word names,
    /// used wherever a map must be well defined on G rather than on the
    /// free group. The relator names the identity; in the orientable case
    /// the relator with its final b_n^-1 removed names b_n.
    Word representative(const Word& w) const {
        if (w == relator_) return Word{};
        if (pres_.is_orientable() && w == relator_minus_last_) return Word::of(gen_b(pres_.genus()));
        return w;
    }

private:
    SurfacePresentation pres_;
    std::vector<BasisLabel> p1_basis_;
    std::map<BasisLabel, ChainElement> d1_;
    ChainElement d2_;
    Word relator_ = pres_.relator();
    Word relator_minus_last_ = relator_.prefix(relator_.size() - 1);
};

inline Resolution build_resolution(const SurfacePresentation& pres) { return Resolution(pres); }

/// ZG-linear extension of d1 / d2.
inline ChainElement apply_boundary(const Resolution& res, const ChainElement& c) {
    if (c.degree() == 0) throw InvalidArgument("P_0 has no boundary in the resolution");
    if (c.degree() != 1 && c.degree() != 2) throw InvalidArgument("degree out of range");
    ChainElement out(c.degree() - 1);
    for (const auto& [label, r] : c.coords()) out += r * res.boundary(label);
    return out;
}

/// Contracting homotopy s_0 on g.x: sum over generators of (dg/dgen)·e_gen.
/// Satisfies d1(s0(g x)) = (g - 1)x in the free group ring.
inline ChainElement contracting_s0(const Resolution& res, const Word& g) {
    ChainElement out(1);
    for (const auto& label : res.p1_basis()) out.add(label, fox_derivative(g, res.generator_of(label)));
    return out;
}

/// s_{-1}(1) = x.
inline ChainElement contracting_s_minus1() {
    return ChainElement(GroupRingElement::one(), BasisLabel::x());
}

} // namespace surfcohom
