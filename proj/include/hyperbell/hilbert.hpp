// hilbert.hpp
//
// Multi-photon pure states over polarization and spatial-mode (dual-rail)
// qubits, plus construction and decomposition of the 16 hyperentangled
// Bell states.
//
// Basis convention, fixed globally:
//   per photon   index = 2*path + pol   with H=0, V=1, path1=0, path2=1
//   multi photon index = base-4 digits, photon 0 most significant
// All states are normalized on construction; every operation returns a new
// value (states are immutable).

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperbell {

using Cx = std::complex<double>;

enum class Polarization : int { H = 0, V = 1 };
enum class SpatialPath : int { Path1 = 0, Path2 = 1 };

// One photon's basis label: which polarization on which rail.
struct PhotonBasis {
    Polarization pol;
    SpatialPath path;

    int index() const { return 2 * static_cast<int>(path) + static_cast<int>(pol); }
    static PhotonBasis from_index(int i);
    bool operator==(const PhotonBasis&) const = default;
};

enum class Dof { Polarization, Spatial };

enum class BellKind : int { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

// A Bell state identity in one degree of freedom.
struct BellLabel {
    Dof dof;
    BellKind kind;
    bool operator==(const BellLabel&) const = default;
};

// One of the 16 products of a polarization Bell state and a spatial Bell state.
struct HyperBellLabel {
    BellKind pol;
    BellKind spat;

    int index() const { return 4 * static_cast<int>(pol) + static_cast<int>(spat); }
    static HyperBellLabel from_index(int i);
    bool operator==(const HyperBellLabel&) const = default;
};

std::string to_string(BellKind k);              // "phi+", "phi-", "psi+", "psi-"
std::string to_string(const HyperBellLabel& l); // "<pol>:<spat>", e.g. "phi+:psi-"
std::array<HyperBellLabel, 16> all_hyper_bell_labels();

// Normalized pure state of 1..4 photons; amplitude vector of length 4^n.
class PureState {
  public:
    PureState(int n_photons, std::vector<Cx> amps);

    // |b_0 b_1 ... b_{n-1}>
    static PureState basis(const std::vector<PhotonBasis>& labels);

    // (alpha|H> + beta|V>) (x) (gamma|path1> + delta|path2>), one photon.
    static PureState single_photon_product(Cx alpha, Cx beta, Cx gamma, Cx delta);

    int n_photons() const { return n_photons_; }
    int dim() const { return static_cast<int>(amps_.size()); }
    const Cx& amp(int i) const { return amps_[static_cast<size_t>(i)]; }
    const std::vector<Cx>& amps() const { return amps_; }

    // Base-4 digit of a global index belonging to the given photon.
    PhotonBasis photon_label(int global_index, int photon) const;

  private:
    int n_photons_;
    std::vector<Cx> amps_;
};

// Two-photon ket restricted to a single degree of freedom,
// index = 2*(photon-0 value) + (photon-1 value).
using DofKet = std::array<Cx, 4>;

DofKet bell_ket(BellKind kind);
DofKet dof_basis_ket(int v0, int v1); // e.g. |HH> = dof_basis_ket(0,0)

// Two-photon state that is the requested Bell state in `dof`, tensored with
// `partner` (default |phi+>) in the other degree of freedom.
PureState make_bell(Dof dof, BellKind kind);
PureState make_bell(Dof dof, BellKind kind, const DofKet& partner);
PureState make_hyper_bell(HyperBellLabel label);

// Kronecker product; a's photons come first. Combined photon count <= 4.
PureState tensor(const PureState& a, const PureState& b);

// <a|b>, conjugate-linear in the first argument.
Cx inner(const PureState& a, const PureState& b);
double fidelity(const PureState& a, const PureState& b); // |<a|b>|^2

using PhotonPair = std::pair<int, int>;

// One term of a Bell-basis expansion on a photon pair. For two-photon states
// the coefficient carries the full complex amplitude and `residual` is empty;
// with extra photons the coefficient is the branch norm (real, >= 0) and
// `residual` holds the normalized state of the remaining photons.
struct BellComponent {
    HyperBellLabel label;
    Cx coeff;
    std::optional<PureState> residual;
};

// Expansion of `state` in the 16-state hyper-Bell basis of the given photon
// pair. Always returns 16 components in label-index order; the brute-force
// oracle for the analyzer pipeline.
std::vector<BellComponent> decompose_in_bell_basis(const PureState& state, PhotonPair pair);

// Inverse of decompose_in_bell_basis.
PureState recombine_from_bell(const std::vector<BellComponent>& components,
                              PhotonPair pair, int n_photons);

// Projection of selected photons onto fixed basis labels.
struct Projection {
    double prob = 0.0;
    std::optional<PureState> residual; // remaining photons, normalized; empty
                                       // when all photons were projected or prob ~ 0
};
Projection project_photons(const PureState& state,
                           const std::vector<std::pair<int, PhotonBasis>>& constraints);

namespace detail {
int pow4(int n);
// Base-4 digit of `global` for `photon` (photon 0 most significant of n).
int photon_digit(int global, int photon, int n);
} // namespace detail

} // namespace hyperbell
