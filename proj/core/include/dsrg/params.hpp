#pragma once

#include <cstdint>
#include <string>

#include "dsrg/errors.hpp"

namespace dsrg {

/// Parameter 5-tuple (v, k, t, lambda, mu) of a strongly regular digraph:
/// v vertices, in/out degree k, t closed two-paths per vertex, lambda
/// two-paths across an edge, mu two-paths across an ordered non-edge.
struct DsrgParams {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t t = 0;
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;

  /// t - lambda; positive for every family seed.
  std::int64_t s() const {
    return static_cast<std::int64_t>(t) - static_cast<std::int64_t>(lambda);
  }

  /// Validates v > k >= 1. General verification accepts any mu;
  /// family machinery additionally requires mu == t and s > 0.
  static DsrgParams checked(std::uint64_t v, std::uint64_t k, std::uint64_t t,
                            std::uint64_t lambda, std::uint64_t mu);

  /// Shorthand for the mu == t tuples the family recurrences work with.
  static DsrgParams family_seed(std::uint64_t v, std::uint64_t k,
                                std::uint64_t t, std::uint64_t lambda) {
    return checked(v, k, t, lambda, t);
  }

  std::string str() const;

  bool operator==(const DsrgParams&) const = default;
};

}  // namespace dsrg
