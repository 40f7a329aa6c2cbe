#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "bathsim/errors.hpp"

namespace bathsim {

// Uniform cell-centered structured grid over 1 to 3 axes.
// Linear storage is row-major: axis 0 slowest, last axis fastest.
class GridSpec {
public:
    GridSpec(const std::vector<double>& lengths_m, const std::vector<std::size_t>& cells);

    int dims() const { return dims_; }
    double length(int axis) const { return lengths_[static_cast<std::size_t>(axis)]; }
    std::size_t cells(int axis) const { return cells_[static_cast<std::size_t>(axis)]; }
    double spacing(int axis) const { return spacing_[static_cast<std::size_t>(axis)]; }
    std::size_t stride(int axis) const { return stride_[static_cast<std::size_t>(axis)]; }
    std::size_t total_cells() const { return total_; }

    // Product of spacings; absent axes contribute no factor (implied 1 m extent).
    double cell_volume() const { return cell_volume_; }

    // Cell-center coordinate along an axis.
    double center(int axis, std::size_t i) const {
        return (static_cast<double>(i) + 0.5) * spacing(axis);
    }

    bool operator==(const GridSpec&) const = default;

private:
    int dims_ = 0;
    std::array<double, 3> lengths_{0.0, 0.0, 0.0};
    std::array<std::size_t, 3> cells_{0, 0, 0};
    std::array<double, 3> spacing_{0.0, 0.0, 0.0};
    std::array<std::size_t, 3> stride_{0, 0, 0};
    std::size_t total_ = 0;
    double cell_volume_ = 0.0;
};

// Half-open axis-aligned cell-index box [lo, hi) on a grid.
struct IndexBox {
    std::array<std::size_t, 3> lo{0, 0, 0};
    std::array<std::size_t, 3> hi{0, 0, 0};

    bool within(const GridSpec& grid) const;
    std::size_t cell_count(const GridSpec& grid) const;
    bool contains(const GridSpec& grid, const std::array<std::size_t, 3>& idx) const;

    bool operator==(const IndexBox&) const = default;
};

} // namespace bathsim
