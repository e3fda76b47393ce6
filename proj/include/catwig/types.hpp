// Core value types shared across the toolkit.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace catwig {

using Complex = std::complex<double>;

// One weighted coherent component c|gamma> of a superposition.
struct CoherentTerm {
    Complex coeff;
    Complex amp;
};

// Unnormalized finite superposition sum_j c_j |gamma_j>.
// Term order is part of the value; constructors never reorder.
// An empty or all-zero-coefficient term list represents the zero vector.
struct SuperpositionState {
    std::vector<CoherentTerm> terms;
};

// Cat-state parameters: base amplitude alpha_L and the shift delta_alpha.
struct CatParams {
    Complex alpha_L;
    Complex delta_alpha;
};

enum class CombineMode { difference, sum };

// Phase-space point, interpreted as alpha = x + iy.
struct PhasePoint {
    double x = 0.0;
    double y = 0.0;
    Complex alpha() const { return Complex{x, y}; }
};

// Rectangular sampling geometry. Row r, column c maps to
// (x_min + c*dx, y_min + r*dy) with dx = (x_max-x_min)/(nx-1).
struct GridSpec {
    double x_min = -7.0;
    double x_max = 7.0;
    double y_min = -7.0;
    double y_max = 7.0;
    int nx = 281;
    int ny = 281;

    double dx() const { return (x_max - x_min) / (nx - 1); }
    double dy() const { return (y_max - y_min) / (ny - 1); }
    PhasePoint point(int row, int col) const {
        return PhasePoint{x_min + col * dx(), y_min + row * dy()};
    }
    bool valid() const {
        return nx >= 2 && ny >= 2 && x_min < x_max && y_min < y_max;
    }
    bool operator==(const GridSpec&) const = default;
};

// Sampled Wigner function; values are row-major, x varying fastest.
struct WignerGrid {
    GridSpec spec;
    std::vector<double> values;

    double at(int row, int col) const {
        return values[static_cast<std::size_t>(row) * spec.nx + col];
    }
    double min_value() const {
        double m = values.empty() ? 0.0 : values.front();
        for (double v : values) {
            m = v < m ? v : m;
        }
        return m;
    }
    double max_value() const {
        double m = values.empty() ? 0.0 : values.front();
        for (double v : values) {
            m = v > m ? v : m;
        }
        return m;
    }
};

}  // namespace catwig
