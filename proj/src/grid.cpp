#include "bathsim/grid.hpp"

#include <cmath>

namespace bathsim {

GridSpec::GridSpec(const std::vector<double>& lengths_m, const std::vector<std::size_t>& cells) {
    if (lengths_m.empty() || lengths_m.size() > 3)
        throw ValidationError("grid: dims must be 1, 2, or 3");
    if (cells.size() != lengths_m.size())
        throw ValidationError("grid: lengths and cell counts must have the same dimension");
    dims_ = static_cast<int>(lengths_m.size());
    total_ = 1;
    cell_volume_ = 1.0;
    for (std::size_t a = 0; a < lengths_m.size(); ++a) {
        if (!(std::isfinite(lengths_m[a]) && lengths_m[a] > 0.0))
            throw ValidationError("grid: axis lengths must be finite and > 0");
        if (cells[a] < 2)
            throw ValidationError("grid: at least 2 cells per axis");
        lengths_[a] = lengths_m[a];
        cells_[a] = cells[a];
        spacing_[a] = lengths_m[a] / static_cast<double>(cells[a]);
        total_ *= cells[a];
        cell_volume_ *= spacing_[a];
    }
    // Row-major strides, last axis fastest.
    for (int a = dims_ - 1; a >= 0; --a) {
        const auto ua = static_cast<std::size_t>(a);
        stride_[ua] = (a == dims_ - 1) ? 1 : stride_[ua + 1] * cells_[ua + 1];
    }
}

bool IndexBox::within(const GridSpec& grid) const {
    for (int a = 0; a < grid.dims(); ++a) {
        const auto ua = static_cast<std::size_t>(a);
        if (lo[ua] >= hi[ua]) return false;
        if (hi[ua] > grid.cells(a)) return false;
    }
    return true;
}

std::size_t IndexBox::cell_count(const GridSpec& grid) const {
    std::size_t n = 1;
    for (int a = 0; a < grid.dims(); ++a) {
        const auto ua = static_cast<std::size_t>(a);
        n *= hi[ua] - lo[ua];
    }
    return n;
}

bool IndexBox::contains(const GridSpec& grid, const std::array<std::size_t, 3>& idx) const {
    for (int a = 0; a < grid.dims(); ++a) {
        const auto ua = static_cast<std::size_t>(a);
        if (idx[ua] < lo[ua] || idx[ua] >= hi[ua]) return false;
    }
    return true;
}

} // namespace bathsim
