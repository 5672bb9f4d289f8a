#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace adsq {

// Discretized AdS2 black-hole background. Sites n = 1..N sit at radii
// r_n = r_h + n*a; the redshift factor alpha_n = sqrt(r_n^2 - r_h^2)/L
// rescales local energies relative to the boundary clock. Immutable.
class Geometry {
public:
    Geometry(int num_sites, double spacing = 1.0, double ads_radius = 1.0,
             double horizon_radius = 0.0)
        : N_(num_sites), a_(spacing), L_(ads_radius), rh_(horizon_radius) {
        if (N_ < 2 || N_ % 2 != 0)
            throw std::invalid_argument("Geometry: num_sites must be even and >= 2");
        if (a_ <= 0 || L_ <= 0 || rh_ < 0)
            throw std::invalid_argument("Geometry: require a > 0, L > 0, r_h >= 0");
    }

    int num_sites() const { return N_; }
    double spacing() const { return a_; }
    double ads_radius() const { return L_; }
    double horizon_radius() const { return rh_; }

    double site_radius(int n) const {
        check(n);
        return rh_ + n * a_;
    }

    double redshift(int n) const {
        check(n);
        double r = rh_ + n * a_;
        return std::sqrt(r * r - rh_ * rh_) / L_;
    }

    // alpha_n / alpha_N: equals 1 at the boundary site, independent of L.
    double effective_redshift(int n) const {
        check(n);
        return redshift(n) / redshift(N_);
    }

    std::vector<double> redshift_profile(bool effective = false) const {
        std::vector<double> alpha(N_);
        for (int n = 1; n <= N_; ++n)
            alpha[n - 1] = effective ? effective_redshift(n) : redshift(n);
        return alpha;
    }

private:
    void check(int n) const {
        if (n < 1 || n > N_)
            throw std::out_of_range("Geometry: site index out of range");
    }

    int N_;
    double a_, L_, rh_;
};

}  // namespace adsq
