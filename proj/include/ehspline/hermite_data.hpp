#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ehspline {

/// A value and its derivative with respect to the parameter of the current grid.
template <class V>
struct HermiteNode {
  V value{};
  V slope{};

  friend bool operator==(const HermiteNode&, const HermiteNode&) = default;
};

enum class Indexing { finite, periodic };

/// Samples a[n] = (s(n), s'(n)) on consecutive grid nodes.
///
/// Finite data covers n = first .. first + size - 1. Periodic data of
/// period M is defined for every integer n and wraps modulo M.
template <class V>
class HermiteData {
 public:
  using Node = HermiteNode<V>;

  HermiteData() = default;

  [[nodiscard]] static HermiteData finite(std::vector<Node> nodes, long first = 0) {
    return HermiteData(std::move(nodes), first, Indexing::finite);
  }
  [[nodiscard]] static HermiteData periodic(std::vector<Node> nodes) {
    if (nodes.empty()) throw std::length_error("periodic Hermite data needs at least one node");
    return HermiteData(std::move(nodes), 0, Indexing::periodic);
  }

  [[nodiscard]] Indexing indexing() const { return indexing_; }
  [[nodiscard]] bool is_periodic() const { return indexing_ == Indexing::periodic; }
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] long first_index() const { return first_; }
  [[nodiscard]] long last_index() const { return first_ + static_cast<long>(nodes_.size()) - 1; }
  [[nodiscard]] const std::vector<Node>& nodes() const { return nodes_; }

  [[nodiscard]] bool contains(long n) const {
    return is_periodic() || (n >= first_ && n <= last_index());
  }

  [[nodiscard]] const Node& at(long n) const {
    if (is_periodic()) {
      const long m = static_cast<long>(nodes_.size());
      return nodes_[static_cast<std::size_t>(((n % m) + m) % m)];
    }
    if (!contains(n)) {
      throw std::out_of_range("Hermite sample " + std::to_string(n) + " not in [" +
                              std::to_string(first_) + ", " + std::to_string(last_index()) + "]");
    }
    return nodes_[static_cast<std::size_t>(n - first_)];
  }

  friend bool operator==(const HermiteData&, const HermiteData&) = default;

 private:
  HermiteData(std::vector<Node> nodes, long first, Indexing indexing)
      : nodes_(std::move(nodes)), first_(first), indexing_(indexing) {}

  std::vector<Node> nodes_;
  long first_ = 0;
  Indexing indexing_ = Indexing::finite;
};

/// Samples f and f' at n = first .. last.
template <class F, class DF>
[[nodiscard]] HermiteData<double> sample_hermite(F&& f, DF&& df, long first, long last,
                                                 double h = 1.0) {
  std::vector<HermiteNode<double>> nodes;
  nodes.reserve(static_cast<std::size_t>(last - first + 1));
  for (long n = first; n <= last; ++n) {
    const double x = static_cast<double>(n) * h;
    nodes.push_back({f(x), df(x)});
  }
  return HermiteData<double>::finite(std::move(nodes), first);
}

}  // namespace ehspline
