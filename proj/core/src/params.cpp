#include "dsrg/params.hpp"

namespace dsrg {

DsrgParams DsrgParams::checked(std::uint64_t v, std::uint64_t k,
                               std::uint64_t t, std::uint64_t lambda,
                               std::uint64_t mu) {
  if (k < 1 || v <= k) {
    throw DimensionError("parameters need v > k >= 1, got v=" +
                         std::to_string(v) + " k=" + std::to_string(k));
  }
  return DsrgParams{v, k, t, lambda, mu};
}

std::string DsrgParams::str() const {
  return std::to_string(v) + " " + std::to_string(k) + " " + std::to_string(t) +
         " " + std::to_string(lambda) + " " + std::to_string(mu);
}

}  // namespace dsrg
