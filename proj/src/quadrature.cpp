#include "bergman/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace bergman {

const GaussLegendreRule<double>& cached_gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule<double>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLegendreRule<double>>(gauss_legendre<double>(n));
  return *slot;
}

}  // namespace bergman
