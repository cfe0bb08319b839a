#include "hyperbell/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperbell {

namespace {
constexpr double kNormEps = 1e-15;        // reject effectively-zero vectors
constexpr double kResidualProbEps = 1e-24; // branch treated as absent below this
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
} // namespace

namespace detail {

int pow4(int n) { return 1 << (2 * n); }

int photon_digit(int global, int photon, int n) {
    return (global >> (2 * (n - 1 - photon))) & 3;
}

} // namespace detail

PhotonBasis PhotonBasis::from_index(int i) {
    if (i < 0 || i > 3) throw std::out_of_range("PhotonBasis index must be in [0,3]");
    return {static_cast<Polarization>(i & 1), static_cast<SpatialPath>(i >> 1)};
}

HyperBellLabel HyperBellLabel::from_index(int i) {
    if (i < 0 || i > 15) throw std::out_of_range("HyperBellLabel index must be in [0,15]");
    return {static_cast<BellKind>(i / 4), static_cast<BellKind>(i % 4)};
}

std::string to_string(BellKind k) {
    switch (k) {
    case BellKind::PhiPlus: return "phi+";
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PsiMinus: return "psi-";
    }
    throw std::logic_error("unreachable BellKind");
}

std::string to_string(const HyperBellLabel& l) {
    return to_string(l.pol) + ":" + to_string(l.spat);
}

std::array<HyperBellLabel, 16> all_hyper_bell_labels() {
    std::array<HyperBellLabel, 16> out;
    for (int i = 0; i < 16; ++i) out[static_cast<size_t>(i)] = HyperBellLabel::from_index(i);
    return out;
}

PureState::PureState(int n_photons, std::vector<Cx> amps)
    : n_photons_(n_photons), amps_(std::move(amps)) {
    if (n_photons_ < 1 || n_photons_ > 4)
        throw std::invalid_argument("PureState supports 1 to 4 photons");
    if (static_cast<int>(amps_.size()) != detail::pow4(n_photons_))
        throw std::invalid_argument("amplitude vector length must be 4^n_photons");
    double n2 = 0.0;
    for (const Cx& a : amps_) n2 += std::norm(a);
    if (n2 < kNormEps)
        throw std::invalid_argument("cannot normalize a zero state vector");
    const double inv = 1.0 / std::sqrt(n2);
    for (Cx& a : amps_) a *= inv;
}

PureState PureState::basis(const std::vector<PhotonBasis>& labels) {
    const int n = static_cast<int>(labels.size());
    if (n < 1 || n > 4) throw std::invalid_argument("basis state needs 1 to 4 photon labels");
    int idx = 0;
    for (const PhotonBasis& b : labels) idx = idx * 4 + b.index();
    std::vector<Cx> amps(static_cast<size_t>(detail::pow4(n)), Cx{0.0, 0.0});
    amps[static_cast<size_t>(idx)] = Cx{1.0, 0.0};
    return PureState(n, std::move(amps));
}

PureState PureState::single_photon_product(Cx alpha, Cx beta, Cx gamma, Cx delta) {
    // index = 2*path + pol
    return PureState(1, {alpha * gamma, beta * gamma, alpha * delta, beta * delta});
}

PhotonBasis PureState::photon_label(int global_index, int photon) const {
    if (photon < 0 || photon >= n_photons_) throw std::out_of_range("photon index out of range");
    return PhotonBasis::from_index(detail::photon_digit(global_index, photon, n_photons_));
}

DofKet bell_ket(BellKind kind) {
    switch (kind) {
    case BellKind::PhiPlus: return {Cx{kInvSqrt2}, Cx{0}, Cx{0}, Cx{kInvSqrt2}};
    case BellKind::PhiMinus: return {Cx{kInvSqrt2}, Cx{0}, Cx{0}, Cx{-kInvSqrt2}};
    case BellKind::PsiPlus: return {Cx{0}, Cx{kInvSqrt2}, Cx{kInvSqrt2}, Cx{0}};
    case BellKind::PsiMinus: return {Cx{0}, Cx{kInvSqrt2}, Cx{-kInvSqrt2}, Cx{0}};
    }
    throw std::logic_error("unreachable BellKind");
}

DofKet dof_basis_ket(int v0, int v1) {
    if ((v0 & ~1) || (v1 & ~1)) throw std::out_of_range("dof values must be 0 or 1");
    DofKet k{Cx{0}, Cx{0}, Cx{0}, Cx{0}};
    k[static_cast<size_t>(2 * v0 + v1)] = Cx{1.0, 0.0};
    return k;
}

namespace {

PureState from_dof_kets(const DofKet& pol, const DofKet& spat) {
    std::vector<Cx> amps(16);
    for (int g = 0; g < 16; ++g) {
        const int i0 = g / 4, i1 = g % 4;
        const int p0 = i0 & 1, q0 = i0 >> 1;
        const int p1 = i1 & 1, q1 = i1 >> 1;
        amps[static_cast<size_t>(g)] =
            pol[static_cast<size_t>(2 * p0 + p1)] * spat[static_cast<size_t>(2 * q0 + q1)];
    }
    return PureState(2, std::move(amps));
}

} // namespace

PureState make_bell(Dof dof, BellKind kind) {
    return make_bell(dof, kind, bell_ket(BellKind::PhiPlus));
}

PureState make_bell(Dof dof, BellKind kind, const DofKet& partner) {
    if (dof == Dof::Polarization) return from_dof_kets(bell_ket(kind), partner);
    return from_dof_kets(partner, bell_ket(kind));
}

PureState make_hyper_bell(HyperBellLabel label) {
    return from_dof_kets(bell_ket(label.pol), bell_ket(label.spat));
}

PureState tensor(const PureState& a, const PureState& b) {
    const int n = a.n_photons() + b.n_photons();
    if (n > 4) throw std::invalid_argument("tensor product would exceed 4 photons");
    std::vector<Cx> amps(static_cast<size_t>(a.dim()) * static_cast<size_t>(b.dim()));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            amps[static_cast<size_t>(i * b.dim() + j)] = a.amp(i) * b.amp(j);
    return PureState(n, std::move(amps));
}

Cx inner(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner product dimension mismatch");
    Cx s{0.0, 0.0};
    for (int i = 0; i < a.dim(); ++i) s += std::conj(a.amp(i)) * b.amp(i);
    return s;
}

double fidelity(const PureState& a, const PureState& b) { return std::norm(inner(a, b)); }

namespace {

void check_pair(const PureState& s, PhotonPair pair) {
    if (s.n_photons() < 2) throw std::invalid_argument("need at least 2 photons");
    if (pair.first == pair.second || pair.first < 0 || pair.second < 0 ||
        pair.first >= s.n_photons() || pair.second >= s.n_photons())
        throw std::out_of_range("invalid photon pair");
}

// Index of `global` restricted to the photons not in `skip` (original order).
int rest_index(int global, int n, int skip_a, int skip_b) {
    int r = 0;
    for (int k = 0; k < n; ++k) {
        if (k == skip_a || k == skip_b) continue;
        r = r * 4 + detail::photon_digit(global, k, n);
    }
    return r;
}

} // namespace

std::vector<BellComponent> decompose_in_bell_basis(const PureState& state, PhotonPair pair) {
    check_pair(state, pair);
    const int n = state.n_photons();
    const int rest_n = n - 2;
    const int rest_dim = detail::pow4(rest_n);

    std::vector<BellComponent> out;
    out.reserve(16);
    for (const HyperBellLabel& label : all_hyper_bell_labels()) {
        const PureState bell = make_hyper_bell(label);
        std::vector<Cx> v(static_cast<size_t>(rest_dim), Cx{0.0, 0.0});
        for (int g = 0; g < state.dim(); ++g) {
            const int p = detail::photon_digit(g, pair.first, n) * 4 +
                          detail::photon_digit(g, pair.second, n);
            v[static_cast<size_t>(rest_index(g, n, pair.first, pair.second))] +=
                std::conj(bell.amp(p)) * state.amp(g);
        }
        if (rest_n == 0) {
            out.push_back({label, v[0], std::nullopt});
            continue;
        }
        double n2 = 0.0;
        for (const Cx& a : v) n2 += std::norm(a);
        if (n2 < kResidualProbEps) {
            out.push_back({label, Cx{0.0, 0.0}, std::nullopt});
        } else {
            out.push_back({label, Cx{std::sqrt(n2), 0.0}, PureState(rest_n, std::move(v))});
        }
    }
    return out;
}

PureState recombine_from_bell(const std::vector<BellComponent>& components,
                              PhotonPair pair, int n_photons) {
    const int dim = detail::pow4(n_photons);
    std::vector<Cx> amps(static_cast<size_t>(dim), Cx{0.0, 0.0});
    for (const BellComponent& c : components) {
        if (std::norm(c.coeff) < kResidualProbEps) continue;
        const PureState bell = make_hyper_bell(c.label);
        for (int g = 0; g < dim; ++g) {
            const int p = detail::photon_digit(g, pair.first, n_photons) * 4 +
                          detail::photon_digit(g, pair.second, n_photons);
            Cx rest{1.0, 0.0};
            if (c.residual)
                rest = c.residual->amp(rest_index(g, n_photons, pair.first, pair.second));
            amps[static_cast<size_t>(g)] += c.coeff * bell.amp(p) * rest;
        }
    }
    return PureState(n_photons, std::move(amps));
}

Projection project_photons(const PureState& state,
                           const std::vector<std::pair<int, PhotonBasis>>& constraints) {
    const int n = state.n_photons();
    if (constraints.empty()) throw std::invalid_argument("no photons to project");
    int mask = 0;
    for (const auto& [photon, basis] : constraints) {
        (void)basis;
        if (photon < 0 || photon >= n) throw std::out_of_range("photon index out of range");
        if (mask & (1 << photon)) throw std::invalid_argument("duplicate photon in projection");
        mask |= 1 << photon;
    }
    const int rest_n = n - static_cast<int>(constraints.size());
    std::vector<Cx> v(static_cast<size_t>(detail::pow4(rest_n)), Cx{0.0, 0.0});

    for (int g = 0; g < state.dim(); ++g) {
        bool match = true;
        for (const auto& [photon, basis] : constraints) {
            if (detail::photon_digit(g, photon, n) != basis.index()) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        int r = 0;
        for (int k = 0; k < n; ++k) {
            if (mask & (1 << k)) continue;
            r = r * 4 + detail::photon_digit(g, k, n);
        }
        v[static_cast<size_t>(r)] += state.amp(g);
    }

    double prob = 0.0;
    for (const Cx& a : v) prob += std::norm(a);
    Projection result;
    result.prob = prob;
    if (rest_n > 0 && prob > kResidualProbEps)
        result.residual = PureState(rest_n, std::move(v));
    return result;
}

} // namespace hyperbell
