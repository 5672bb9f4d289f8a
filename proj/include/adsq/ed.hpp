#pragma once

#include <cstdint>
#include <vector>

#include "adsq/pauli.hpp"

namespace adsq {

inline constexpr int kEdSiteCap = 16;

// All N-bit patterns with fixed population k; shares the Q_flat eigenvalue
// q = (2k - N)/(2a) (even N, so the staggered offset vanishes).
struct ChargeSector {
    int population = 0;
    double charge = 0.0;
    std::vector<std::uint64_t> basis;  // sorted ascending
};

std::vector<ChargeSector> enumerate_sectors(int N, double a = 1.0);

// Index of the Neel state |0101...> (even sites occupied) within a sector basis.
int neel_index(int N, const ChargeSector& sector);

// H restricted to the sector basis. Throws if a string maps outside the sector
// with non-cancelling amplitude (a non-conserving Hamiltonian is a usage bug).
Eigen::MatrixXcd sector_matrix(const PauliSum& op, const ChargeSector& sector);

struct SpectrumResult {
    Eigen::VectorXd eigenvalues;        // ascending over the whole space
    std::vector<double> sector_labels;  // charge q per eigenvalue
    std::vector<int> sector_population;
};

SpectrumResult eigensolve(const PauliSum& H, int N, double a = 1.0);

struct GroundResult {
    double E0 = 0.0, E1 = 0.0;
    int sector0 = 0, sector1 = 0;  // population labels
    bool degenerate = false;
    Eigen::VectorXcd ground;          // in sector0 basis
    Eigen::VectorXcd first_excited;   // in sector1 basis
};

GroundResult ground_and_first_excited(const PauliSum& H, int N, double a = 1.0);

// Sector-basis state -> full 2^N amplitude vector.
Eigen::VectorXcd embed(const Eigen::VectorXcd& psi, const ChargeSector& sector, int N);

// <psi|O|psi> on a full-space state; throws if the imaginary part exceeds 1e-12.
double expectation(const Eigen::VectorXcd& state, const PauliSum& op);

// von Neumann entropy (natural log) of sites 1..l of a full-space pure state.
double entanglement_entropy(const Eigen::VectorXcd& state, int N, int l);

// Unitary evolution by eigendecomposition within one charge sector.
class SectorEvolver {
public:
    SectorEvolver(const PauliSum& H, const ChargeSector& sector);
    Eigen::VectorXcd evolve(const Eigen::VectorXcd& psi, double t) const;
    const Eigen::VectorXd& eigenvalues() const { return evals_; }
    const Eigen::MatrixXcd& eigenvectors() const { return evecs_; }

private:
    Eigen::VectorXd evals_;
    Eigen::MatrixXcd evecs_;
};

// Full-space evolution, decomposed over charge sectors (H must conserve Q_flat).
Eigen::VectorXcd evolve(const Eigen::VectorXcd& state, const PauliSum& H, int N, double t);

std::vector<Eigen::VectorXcd> evolve_series(const Eigen::VectorXcd& state, const PauliSum& H,
                                            int N, const std::vector<double>& times);

enum class OtocState { Ground, Neel, InfiniteTemperature };

// C(t) = <kappa_i(0) kappa_j(t) kappa_i(0) kappa_j(t)> on the chosen reference
// state, computed in a single charge sector (infinite temperature traces all).
std::vector<cdouble> otoc(const PauliSum& H, int N, int i, int j,
                          const std::vector<double>& times,
                          OtocState reference = OtocState::Ground, double a = 1.0);

}  // namespace adsq
