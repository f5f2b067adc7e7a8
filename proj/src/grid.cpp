#include "heatpen/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heatpen {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Interval1D::Interval1D(int n_cells_) : n_cells(n_cells_) {
  if (n_cells < 2) throw std::invalid_argument("Interval1D: n_cells must be >= 2");
}

SquareGrid::SquareGrid(int nx_, int ny_) : nx(nx_), ny(ny_) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("SquareGrid: nx, ny must be >= 2");
}

PolarGrid::PolarGrid(int nr_, int ntheta_) : nr(nr_), ntheta(ntheta_) {
  if (nr < 2) throw std::invalid_argument("PolarGrid: nr must be >= 2");
  if (ntheta < 4) throw std::invalid_argument("PolarGrid: ntheta must be >= 4");
}

double PolarGrid::dtheta() const { return kTwoPi / ntheta; }

int PolarGrid::index(int i, int k) const {
  if (i == 0) return 0;
  k %= ntheta;
  if (k < 0) k += ntheta;
  return 1 + (i - 1) * ntheta + k;
}

double PolarGrid::theta(int k) const {
  k %= ntheta;
  if (k < 0) k += ntheta;
  return k * dtheta();
}

double PolarGrid::node_x(int i, int k) const { return r(i) * std::cos(theta(k)); }
double PolarGrid::node_y(int i, int k) const { return r(i) * std::sin(theta(k)); }

TimeGrid::TimeGrid(int n_steps_, double t_end_) : n_steps(n_steps_), t_end(t_end_) {
  if (n_steps < 1) throw std::invalid_argument("TimeGrid: n_steps must be >= 1");
  if (!(t_end > 0.0)) throw std::invalid_argument("TimeGrid: t_end must be > 0");
}

int node_count(const Domain& domain) {
  return std::visit([](const auto& g) { return g.node_count(); }, domain);
}

std::vector<BoundaryNode> boundary_nodes(const Interval1D& g) {
  return {{0, 0.0, 0.0}, {g.n_cells, 1.0, 0.0}};
}

std::vector<BoundaryNode> boundary_nodes(const SquareGrid& g) {
  std::vector<BoundaryNode> nodes;
  nodes.reserve(2 * (g.nx + g.ny));
  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i)
      if (g.on_boundary(i, j)) nodes.push_back({g.index(i, j), g.x(i), g.y(j)});
  return nodes;
}

std::vector<BoundaryNode> boundary_nodes(const PolarGrid& g) {
  std::vector<BoundaryNode> nodes;
  nodes.reserve(g.ntheta);
  for (int k = 0; k < g.ntheta; ++k)
    nodes.push_back({g.index(g.nr, k), g.node_x(g.nr, k), g.node_y(g.nr, k)});
  return nodes;
}

std::vector<BoundaryNode> boundary_nodes(const Domain& domain) {
  return std::visit([](const auto& g) { return boundary_nodes(g); }, domain);
}

}  // namespace heatpen
