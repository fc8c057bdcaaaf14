#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surfcohom/group_ring.hpp"
#include "surfcohom/smith.hpp"

namespace surfcohom {

/// Z^k with a left action of the surface group through GL_k(Z). Instances
/// are validated on construction: every action matrix is unimodular and
/// the relator acts as the identity.
class CoefficientModule {
public:
    /// `action` is indexed like pres.generators().
    CoefficientModule(SurfacePresentation pres, std::size_t rank, std::vector<IntMatrix> action,
                      std::string name = {})
        : pres_(pres), rank_(rank), action_(std::move(action)), name_(std::move(name)) {
        if (rank_ == 0) throw InvalidArgument("coefficient module rank must be at least 1");
        const auto gens = pres_.generators();
        if (action_.size() != gens.size())
            throw InvalidArgument("expected " + std::to_string(gens.size()) +
                                  " action matrices, got " + std::to_string(action_.size()));
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const IntMatrix& m = action_[i];
            if (m.rows() != rank_ || m.cols() != rank_)
                throw InvalidArgument("action of " + gens[i].name() + " has shape " + m.shape() +
                                      ", expected " + std::to_string(rank_) + "x" +
                                      std::to_string(rank_));
            if (!is_unimodular(m))
                throw DeterminantNotUnit("action of " + gens[i].name() + " = " + m.str() +
                                         " has determinant " + determinant(m).str());
            inverse_.push_back(inverse_unimodular(m));
        }
        IntMatrix rel = evaluate(pres_.relator());
        if (rel != IntMatrix::identity(rank_))
            throw RelatorNotRespected("relator acts as " + rel.str() + ", not the identity");
    }

    const SurfacePresentation& presentation() const noexcept { return pres_; }
    std::size_t rank() const noexcept { return rank_; }
    const std::string& name() const noexcept { return name_; }
    const std::vector<IntMatrix>& action() const noexcept { return action_; }

    const IntMatrix& action(Generator g) const { return action_[pres_.generator_position(g)]; }

    IntMatrix evaluate(const Letter& l) const {
        const std::size_t pos = pres_.generator_position(l.generator);
        return l.exponent > 0 ? action_[pos] : inverse_[pos];
    }

    IntMatrix evaluate(const Word& w) const {
        IntMatrix m = IntMatrix::identity(rank_);
        for (const auto& l : w.letters()) m = m * evaluate(l);
        return m;
    }

    IntMatrix evaluate(const GroupRingElement& r) const {
        IntMatrix m(rank_, rank_);
        for (const auto& [w, c] : r.terms()) m += evaluate(w) * c;
        return m;
    }

    /// Trivial action on Z^rank.
    bool is_trivial() const {
        for (const auto& m : action_)
            if (m != IntMatrix::identity(rank_)) return false;
        return true;
    }

private:
    SurfacePresentation pres_;
    std::size_t rank_;
    std::vector<IntMatrix> action_;
    std::vector<IntMatrix> inverse_;
    std::string name_;
};

/// Validates and builds a module; missing generators act trivially.
inline CoefficientModule make_module(std::size_t rank, const std::map<Generator, IntMatrix>& action,
                                     const SurfacePresentation& pres, std::string name = {}) {
    std::vector<IntMatrix> mats;
    for (const auto& [g, m] : action) pres.check(g);
    for (const auto& g : pres.generators()) {
        auto it = action.find(g);
        mats.push_back(it == action.end() ? IntMatrix::identity(rank) : it->second);
    }
    return CoefficientModule(pres, rank, std::move(mats), std::move(name));
}

inline IntMatrix evaluate(const CoefficientModule& m, const GroupRingElement& r) {
    return m.evaluate(r);
}

inline IntMatrix evaluate(const CoefficientModule& m, const Word& w) { return m.evaluate(w); }

/// M ⊗ N with the diagonal (Kronecker) action.
inline CoefficientModule tensor(const CoefficientModule& m, const CoefficientModule& n) {
    if (!(m.presentation() == n.presentation()))
        throw PresentationMismatch("tensor of modules over different presentations");
    std::vector<IntMatrix> mats;
    for (std::size_t i = 0; i < m.action().size(); ++i)
        mats.push_back(kronecker(m.action()[i], n.action()[i]));
    std::string name;
    if (!m.name().empty() || !n.name().empty()) name = m.name() + "⊗" + n.name();
    return CoefficientModule(m.presentation(), m.rank() * n.rank(), std::move(mats),
                             std::move(name));
}

/// Swaps tensor factors: index i*l + j of M⊗N (rank(N) = l) goes to j*k + i.
inline IntVector swap_tensor_factors(const IntVector& v, std::size_t k, std::size_t l) {
    if (v.size() != k * l) throw InvalidArgument("vector size does not match k*l");
    IntVector out(v.size());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < l; ++j) out[j * k + i] = v[i * l + j];
    return out;
}

inline CoefficientModule trivial_module(const SurfacePresentation& pres, std::size_t rank = 1,
                                        std::string name = "Z") {
    return make_module(rank, {}, pres, std::move(name));
}

/// Rank-1 module given by the set of generators acting as -1.
inline CoefficientModule sign_module(const SurfacePresentation& pres,
                                     const std::vector<Generator>& negated, std::string name) {
    std::map<Generator, IntMatrix> action;
    for (const auto& g : negated) action[g] = IntMatrix{{-1}};
    return make_module(1, action, pres, std::move(name));
}

/// The rank-1 local systems that represent every Z-module structure up to
/// isomorphism: Z and Z~ (b_n -> -1) in the orientable case; θ0 (trivial),
/// θ1 (a1 -> -1) and θ2 (a1, a2 -> -1) in the nonorientable case.
inline std::vector<CoefficientModule> builtin_modules(const SurfacePresentation& pres) {
    std::vector<CoefficientModule> out;
    if (pres.is_orientable()) {
        out.push_back(trivial_module(pres, 1, "Z"));
        out.push_back(sign_module(pres, {gen_b(pres.genus())}, "Ztilde"));
    } else {
        out.push_back(trivial_module(pres, 1, "theta0"));
        out.push_back(sign_module(pres, {gen_a(1)}, "theta1"));
        out.push_back(sign_module(pres, {gen_a(1), gen_a(2)}, "theta2"));
    }
    return out;
}

/// Looks up a built-in module by name; throws if absent.
inline CoefficientModule builtin_module(const SurfacePresentation& pres, const std::string& name) {
    for (auto& m : builtin_modules(pres))
        if (m.name() == name) return m;
    throw InvalidArgument("no built-in module named '" + name + "' for " + pres.str());
}

} // namespace surfcohom
