#pragma once

#include "tworay/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tworay {

/// Antenna heights of the two-ray link. Both heights are in meters and
/// must be positive and finite.
struct LinkGeometry {
    double h_tx;
    double h_rx;

    LinkGeometry(double h_tx_m, double h_rx_m) : h_tx(h_tx_m), h_rx(h_rx_m) {
        if (!(h_tx > 0.0) || !std::isfinite(h_tx) || !(h_rx > 0.0) || !std::isfinite(h_rx))
            throw std::invalid_argument("LinkGeometry: antenna heights must be positive and finite");
    }

    double min_height() const { return std::min(h_tx, h_rx); }
};

/// Lengths of the direct and ground-reflected rays in meters.
struct PathLengths {
    double los;
    double reflected;
};

/// Path lengths of the direct and reflected rays at ground distance d.
PathLengths path_lengths(double d, const LinkGeometry& geom);

/// Difference reflected - los, computed as 4*h_tx*h_rx/(los + reflected).
/// The direct subtraction loses most significant digits for d much larger
/// than the antenna heights.
double path_difference(double d, const LinkGeometry& geom);

/// Relative phase shift between the two rays at angular frequency omega.
double phase_shift(double d, double omega, const LinkGeometry& geom);

/// Supremum of the phase shift, attained in the limit d -> 0.
double max_phase_shift(double omega, const LinkGeometry& geom);

}  // namespace tworay
