#include "fundamentals.hpp"

#include <cmath>
#include <string>

namespace ringroad {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

FundamentalDiagram::FundamentalDiagram(double free_flow_speed,
                                       double wave_speed, double jam_density)
    : v_(free_flow_speed), w_(wave_speed), k_jam_(jam_density) {
  require(finite_positive(v_), "free-flow speed must be positive");
  require(finite_positive(w_), "wave speed must be positive");
  require(finite_positive(k_jam_), "jam density must be positive");
  k_crit_ = w_ * k_jam_ / (v_ + w_);
  capacity_ = v_ * k_crit_;
}

double FundamentalDiagram::flow(double density) const {
  if (!(density >= 0.0) || !(density <= k_jam_)) {
    throw std::domain_error("density outside [0, jam density]");
  }
  return std::min(v_ * density, (k_jam_ - density) * w_);
}

double effective_green_ratio(double cycle, double lost_time,
                             double green_allocation) {
  require(std::isfinite(cycle) && cycle > 0.0, "cycle length must be positive");
  require(std::isfinite(lost_time) && lost_time >= 0.0,
          "lost time must be nonnegative");
  require(green_allocation > 0.0 && green_allocation < 1.0,
          "green allocation must lie in (0, 1)");
  if (!(cycle > 2.0 * lost_time)) {
    throw std::domain_error("cycle length must exceed twice the lost time");
  }
  return (1.0 - 2.0 * lost_time / cycle) * green_allocation;
}

SignalPlan::SignalPlan(double cycle, double lost_time, double green_allocation)
    : cycle_(cycle),
      lost_time_(lost_time),
      allocation_(green_allocation),
      ratio_(effective_green_ratio(cycle, lost_time, green_allocation)),
      green_duration_(ratio_ * cycle) {}

bool SignalPlan::is_green(double t) const noexcept {
  const double phase = t - std::floor(t / cycle_) * cycle_;
  return phase <= green_duration_;
}

double SignalPlan::green_measure(double a, double b) const noexcept {
  if (!(b > a)) return 0.0;
  double total = 0.0;
  const long first = static_cast<long>(std::floor(a / cycle_));
  const long last = static_cast<long>(std::floor(b / cycle_));
  for (long i = first; i <= last; ++i) {
    const double start = static_cast<double>(i) * cycle_;
    const double lo = std::max(a, start);
    const double hi = std::min(b, start + green_duration_);
    if (hi > lo) total += hi - lo;
  }
  return total;
}

Scenario::Scenario(FundamentalDiagram fd, SignalPlan plan, RingConfig ring)
    : fd_(fd), plan_(plan), ring_(ring) {
  require(finite_positive(ring_.length), "ring length must be positive");
  require(std::isfinite(ring_.density) && ring_.density >= 0.0 &&
              ring_.density <= fd_.jam_density(),
          "initial density must lie in [0, jam density]");
  free_flow_lag_ = ring_.length / fd_.free_flow_speed();
  wave_lag_ = ring_.length / fd_.wave_speed();
}

}  // namespace ringroad
