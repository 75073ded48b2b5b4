#include "vacuakit/wavefunctional.hpp"

#include "vacuakit/format.hpp"
#include "vacuakit/kernels.hpp"
#include "vacuakit/nucleation.hpp"

#include <cmath>

namespace vacuakit {

namespace {

constexpr double pi = std::numbers::pi;

} // namespace

void FieldGrid::validate() const {
    if (xs.size() != values.size()) {
        throw GridMismatch("positions and values differ in length");
    }
    if (xs.size() < 2) {
        throw DomainError("a field grid needs at least two nodes");
    }
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1])) {
            throw DomainError("grid positions must be strictly increasing");
        }
    }
}

double static_action(const PotentialParams& params, const FieldGrid& grid) {
    params.validate();
    grid.validate();
    const std::size_t n = grid.xs.size();
    std::vector<double> pot(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) num_threads(vacuakit::kernels::thread_cap())
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        pot[static_cast<std::size_t>(i)] =
            v1(params, grid.values[static_cast<std::size_t>(i)]);
    }
    std::vector<double> contrib(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double dx = grid.xs[i + 1] - grid.xs[i];
        const double slope = (grid.values[i + 1] - grid.values[i]) / dx;
        contrib[i] = (0.5 * slope * slope + 0.5 * (pot[i] + pot[i + 1])) * dx;
    }
    return kernels::block_sum(contrib);
}

double evaluate_functional(const GaussianFunctional& g, const FieldGrid& phi) {
    g.center.validate();
    phi.validate();
    if (!(g.width_alpha > 0.0) || !(g.norm_c > 0.0)) {
        throw DomainError("functional width and norm must be positive");
    }
    if (phi.xs != g.center.xs) {
        throw GridMismatch("configuration and center use different positions");
    }
    std::vector<double> sq(phi.xs.size());
    for (std::size_t i = 0; i < sq.size(); ++i) {
        const double d = phi.values[i] - g.center.values[i];
        sq[i] = d * d;
    }
    const double quad = kernels::trapezoid(phi.xs, sq);
    return g.norm_c * std::exp(-g.width_alpha * quad);
}

double topological_charge(const FieldGrid& grid) {
    grid.validate();
    return (grid.values.back() - grid.values.front()) / (2.0 * pi);
}

double thin_wall_basis(double k, double length_l) {
    if (!(length_l > 0.0)) {
        throw DomainError("thin_wall_basis needs length_l > 0");
    }
    const double amp = std::sqrt(2.0 / pi);
    if (k == 0.0) {
        return amp * 0.5 * length_l;
    }
    return amp * std::sin(0.5 * k * length_l) / k;
}

FieldGrid box_profile(double length_l, double height, std::size_t grid_n) {
    if (!(length_l > 0.0)) {
        throw DomainError("box_profile needs length_l > 0");
    }
    if (grid_n < 8) {
        throw DomainError("box_profile needs at least 8 grid points");
    }
    FieldGrid g;
    g.xs.resize(grid_n);
    g.values.resize(grid_n);
    for (std::size_t i = 0; i < grid_n; ++i) {
        const double x = kernels::grid_node(-length_l, 2.0 * length_l, grid_n, i);
        g.xs[i] = x;
        g.values[i] = (x >= 0.0 && x <= length_l) ? height : 0.0;
    }
    return g;
}

std::pair<GaussianFunctional, GaussianFunctional>
initial_final_pair(const PotentialParams& params, const VacuumPair& vacua,
                   const std::vector<double>& xs, double epsilon_scale) {
    params.validate();
    if (!vacua.length_scale.has_value()) {
        throw NonPositiveGap("transition functionals need a positive brace gap");
    }
    const double length = *vacua.length_scale;
    const double alpha = 1.0 / length;
    const double norm = normalization_constant(alpha, length);
    const double eps = epsilon_scale * (vacua.phi_true - vacua.phi_false);

    FieldGrid initial;
    initial.xs = xs;
    initial.values.assign(xs.size(), vacua.phi_false + eps);
    initial.validate();

    FieldGrid final_center;
    final_center.xs = xs;
    final_center.values.resize(xs.size());
    const double mid = 0.5 * (xs.front() + xs.back());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const bool inside = std::abs(xs[i] - mid) <= 0.5 * length;
        final_center.values[i] = inside ? vacua.phi_true : vacua.phi_false;
    }
    final_center.validate();

    return {GaussianFunctional{std::move(initial), alpha, norm},
            GaussianFunctional{std::move(final_center), alpha, norm}};
}

std::string field_grid_csv(const FieldGrid& grid) {
    grid.validate();
    std::string out = "x,phi\n";
    for (std::size_t i = 0; i < grid.xs.size(); ++i) {
        out += format_g17(grid.xs[i]);
        out += ',';
        out += format_g17(grid.values[i]);
        out += '\n';
    }
    return out;
}

} // namespace vacuakit
