#pragma once

#include <variant>
#include <vector>

namespace heatpen {

/// Unit interval [0,1] with nodes x_i = i/n_cells, i = 0..n_cells.
struct Interval1D {
  int n_cells = 2;

  Interval1D() = default;
  explicit Interval1D(int n_cells);

  double dx() const { return 1.0 / n_cells; }
  int node_count() const { return n_cells + 1; }
  double x(int i) const { return i * dx(); }
};

/// Unit square [0,1]^2, nodes (i/nx, j/ny), stored row-major (i fastest).
struct SquareGrid {
  int nx = 2;
  int ny = 2;

  SquareGrid() = default;
  SquareGrid(int nx, int ny);

  double dx() const { return 1.0 / nx; }
  double dy() const { return 1.0 / ny; }
  int node_count() const { return (nx + 1) * (ny + 1); }
  int index(int i, int j) const { return j * (nx + 1) + i; }
  double x(int i) const { return i * dx(); }
  double y(int j) const { return j * dy(); }
  bool on_boundary(int i, int j) const {
    return i == 0 || i == nx || j == 0 || j == ny;
  }
};

/// Unit disk in polar coordinates. Rings r_i = i/nr for i = 1..nr carry
/// ntheta nodes each at theta_k = 2*pi*k/ntheta (periodic); the origin is a
/// single shared node stored at index 0.
struct PolarGrid {
  int nr = 2;
  int ntheta = 4;

  PolarGrid() = default;
  PolarGrid(int nr, int ntheta);

  double dr() const { return 1.0 / nr; }
  double dtheta() const;
  int node_count() const { return 1 + nr * ntheta; }
  int index(int i, int k) const;  // k taken modulo ntheta; i == 0 is the origin
  double r(int i) const { return i * dr(); }
  double theta(int k) const;
  double node_x(int i, int k) const;
  double node_y(int i, int k) const;
};

/// Uniform time grid on [0, t_end] with n_steps steps.
struct TimeGrid {
  int n_steps;
  double t_end;

  explicit TimeGrid(int n_steps, double t_end = 1.0);

  double dt() const { return t_end / n_steps; }
  double time(int n) const { return n * dt(); }
};

using Domain = std::variant<Interval1D, SquareGrid, PolarGrid>;

int node_count(const Domain& domain);

/// A boundary node: flat storage index plus Cartesian coordinates.
struct BoundaryNode {
  int node;
  double x;
  double y;
};

// Deterministic boundary orderings: {left, right} in 1D, row-major on the
// square perimeter, increasing theta on the disk's outer ring.
std::vector<BoundaryNode> boundary_nodes(const Interval1D& g);
std::vector<BoundaryNode> boundary_nodes(const SquareGrid& g);
std::vector<BoundaryNode> boundary_nodes(const PolarGrid& g);
std::vector<BoundaryNode> boundary_nodes(const Domain& domain);

}  // namespace heatpen
