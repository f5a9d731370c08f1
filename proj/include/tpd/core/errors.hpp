#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpd {

// A point lies outside the chart where the metric family is defined, or a
// radicand / denominator that bounds the chart has reached zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A fractional linear map sends a point out of the W>0 half chart.
class ChartEscape : public DomainError {
 public:
  ChartEscape(const std::string& what, double denominator)
      : DomainError(what + " (denominator " + std::to_string(denominator) + ")"),
        denominator_(denominator) {}

  double denominator() const noexcept { return denominator_; }

 private:
  double denominator_;
};

// A WKB radicand went negative. `node` indexes the grid it was found on.
class TurningPoint : public DomainError {
 public:
  TurningPoint(const std::string& what, std::size_t node, double x)
      : DomainError(what + " at node " + std::to_string(node) + " (x = " + std::to_string(x) + ")"),
        node_(node),
        x_(x) {}

  std::size_t node() const noexcept { return node_; }
  double x() const noexcept { return x_; }

 private:
  std::size_t node_;
  double x_;
};

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad command line or configuration. `field` names the offending key.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what), field_(field) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace tpd
