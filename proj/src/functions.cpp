#include "heatpen/functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace heatpen {

TimeSignal TimeSignal::zero() { return constant(0.0); }

TimeSignal TimeSignal::constant(double c) {
  TimeSignal s;
  s.kind_ = Kind::Constant;
  s.c_ = c;
  s.name_ = c == 0.0 ? "zero" : "const";
  return s;
}

TimeSignal TimeSignal::sine() {
  TimeSignal s;
  s.kind_ = Kind::Sine;
  s.name_ = "sin_t";
  return s;
}

TimeSignal TimeSignal::custom(std::string name, std::function<double(double)> fn) {
  TimeSignal s;
  s.kind_ = Kind::Custom;
  s.name_ = std::move(name);
  s.fn_ = std::move(fn);
  return s;
}

double TimeSignal::value(double t) const {
  switch (kind_) {
    case Kind::Constant: return c_;
    case Kind::Sine: return std::sin(t);
    case Kind::Custom: return fn_(t);
  }
  return 0.0;
}

double TimeSignal::derivative(int order, double t) const {
  if (order < 0) throw std::domain_error("TimeSignal::derivative: negative order");
  if (order == 0) return value(t);
  switch (kind_) {
    case Kind::Constant: return 0.0;
    case Kind::Sine:
      // d^j/dt^j sin t = sin(t + j*pi/2)
      return std::sin(t + order * std::numbers::pi / 2.0);
    case Kind::Custom:
      throw std::domain_error("time signal '" + name_ +
                              "' has no analytic derivative of order " +
                              std::to_string(order));
  }
  return 0.0;
}

int TimeSignal::max_derivative_order() const {
  return kind_ == Kind::Custom ? 0 : std::numeric_limits<int>::max();
}

double TimeSignal::constant_value() const {
  if (kind_ != Kind::Constant)
    throw std::logic_error("TimeSignal::constant_value on non-constant signal");
  return c_;
}

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void unknown_name(const std::string& what, const std::string& name,
                               const std::string& known) {
  throw std::invalid_argument("unknown " + what + " name '" + name +
                              "'; known names: " + known);
}

}  // namespace

SpaceFunction space_function(const std::string& name) {
  if (name == "zero") {
    return {name, [](double, double) { return 0.0; },
            [](double, double) { return 0.0; }};
  }
  if (name == "xy") {
    return {name, [](double x, double y) { return x * y; },
            [](double, double) { return 0.0; }};
  }
  if (name == "paper_square_u0") {
    // sin(5*pi/4*x + 3*pi/4) * sin(5*pi/4*y + 3*pi/4)
    return {name,
            [](double x, double y) {
              return std::sin(1.25 * kPi * x + 0.75 * kPi) *
                     std::sin(1.25 * kPi * y + 0.75 * kPi);
            },
            [](double x, double y) {
              const double a = 1.25 * kPi;
              return -a * a * std::sin(a * x + 0.75 * kPi) *
                     std::sin(a * y + 0.75 * kPi);
            }};
  }
  if (name == "paper_1d_u0") {
    return {name,
            [](double x, double) { return std::sin(1.25 * kPi * x + 0.75 * kPi); },
            [](double x, double) {
              const double a = 1.25 * kPi;
              return -a * a * std::sin(a * x + 0.75 * kPi);
            }};
  }
  unknown_name("space function", name, "zero, xy, paper_square_u0, paper_1d_u0");
}

TimeSignal time_signal(const std::string& name) {
  if (name == "zero") return TimeSignal::zero();
  if (name == "sin_t") return TimeSignal::sine();
  unknown_name("time signal", name, "zero, sin_t");
}

Forcing forcing(const std::string& name) {
  if (name == "zero") {
    return {name, [](double, double, double) { return 0.0; }, true};
  }
  if (name == "sin_t") {
    return {name, [](double, double, double t) { return std::sin(t); }, false};
  }
  unknown_name("forcing", name, "zero, sin_t");
}

}  // namespace heatpen
