#pragma once

#include <functional>
#include <string>

namespace heatpen {

/// Time-dependent boundary data g(t) with analytic time derivatives where
/// the underlying function provides them. Built-ins (constants, sin t) carry
/// closed-form derivatives of every order; custom signals expose only their
/// value and force quadrature-based paths downstream.
class TimeSignal {
 public:
  enum class Kind { Constant, Sine, Custom };

  static TimeSignal zero();
  static TimeSignal constant(double c);
  static TimeSignal sine();
  static TimeSignal custom(std::string name, std::function<double(double)> fn);

  double value(double t) const;
  double operator()(double t) const { return value(t); }

  /// d^order/dt^order at time t; order 0 is the value itself.
  /// Throws std::domain_error if the order exceeds what is available.
  double derivative(int order, double t) const;
  int max_derivative_order() const;

  Kind kind() const { return kind_; }
  double constant_value() const;
  const std::string& name() const { return name_; }

 private:
  TimeSignal() = default;

  Kind kind_ = Kind::Constant;
  double c_ = 0.0;
  std::string name_ = "zero";
  std::function<double(double)> fn_;
};

/// Scalar function of space. 1D problems pass y = 0; polar grids evaluate at
/// the Cartesian image of each node. second_x is the second x-derivative,
/// needed by the 1D corrector construction; it may be empty.
struct SpaceFunction {
  std::string name;
  std::function<double(double, double)> value;
  std::function<double(double, double)> second_x;
};

/// Forcing term f(x, y, t). is_zero lets the stepping kernels skip the term.
struct Forcing {
  std::string name;
  std::function<double(double, double, double)> value;
  bool is_zero = false;
};

// Built-in registry used by configuration files and the Python bindings.
// Unknown names are rejected with std::invalid_argument.
SpaceFunction space_function(const std::string& name);
TimeSignal time_signal(const std::string& name);
Forcing forcing(const std::string& name);

}  // namespace heatpen
