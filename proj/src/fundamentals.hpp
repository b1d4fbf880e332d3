#pragma once

#include <stdexcept>

namespace ringroad {

// Raised when an operation is asked for data outside the range it has been
// driven to (e.g. reading a flow series beyond its populated history).
struct SequenceError : std::logic_error {
  using std::logic_error::logic_error;
};

// Triangular flow-density relation. The free-flow branch rises with slope V
// up to the critical density; the congested branch falls with slope -W and
// hits zero at the jam density K. Units are meters, seconds, vehicles
// throughout (speeds m/s, densities veh/m, flow rates veh/s).
class FundamentalDiagram {
 public:
  FundamentalDiagram(double free_flow_speed, double wave_speed,
                     double jam_density);

  double free_flow_speed() const noexcept { return v_; }   // V
  double wave_speed() const noexcept { return w_; }        // W
  double jam_density() const noexcept { return k_jam_; }   // K

  // Density of maximum flow, W*K/(V+W).
  double critical_density() const noexcept { return k_crit_; }
  // Maximum flow rate, V * critical_density().
  double capacity() const noexcept { return capacity_; }

  // Flow rate min(V*k, (K-k)*W); k must lie in [0, jam_density].
  double flow(double density) const;

 private:
  double v_;
  double w_;
  double k_jam_;
  double k_crit_;
  double capacity_;
};

// Pretimed two-phase signal. A cycle of length T loses `lost_time` seconds at
// the start of each phase, and the ring road gets the share `pi0` of what
// remains, so the effective green ratio is pi = (1 - 2*delta/T) * pi0.
// The effective green window of cycle i is [i*T, i*T + pi*T]; the rest of the
// cycle is effective red. A plan without lost time is expressed by delta = 0.
class SignalPlan {
 public:
  SignalPlan(double cycle, double lost_time, double green_allocation);

  // Plan with no start-up lost time and the given effective green ratio.
  static SignalPlan lossless(double cycle, double green_ratio) {
    return SignalPlan(cycle, 0.0, green_ratio);
  }

  double cycle() const noexcept { return cycle_; }                    // T
  double lost_time() const noexcept { return lost_time_; }            // delta
  double green_allocation() const noexcept { return allocation_; }    // pi0
  double green_ratio() const noexcept { return ratio_; }              // pi
  double green_duration() const noexcept { return green_duration_; }  // pi*T

  // Signal indicator at time t. The green window is the closed interval
  // [i*T, i*T + pi*T]; the instant the window closes still counts as green.
  bool is_green(double t) const noexcept;

  // Lebesgue measure of effective green time within [a, b), a <= b.
  double green_measure(double a, double b) const noexcept;

 private:
  double cycle_;
  double lost_time_;
  double allocation_;
  double ratio_;
  double green_duration_;
};

// (1 - 2*lost_time/cycle) * green_allocation; requires cycle > 2*lost_time.
double effective_green_ratio(double cycle, double lost_time,
                             double green_allocation);

// Ring geometry and the uniform initial density placed on it.
struct RingConfig {
  double length;   // L, m
  double density;  // k0, veh/m
};

// A fully specified experiment point: one fundamental diagram, one signal
// plan, one ring. Construction cross-validates the pieces (0 <= k0 <= K,
// L > 0). Immutable and cheap to copy.
class Scenario {
 public:
  Scenario(FundamentalDiagram fd, SignalPlan plan, RingConfig ring);

  const FundamentalDiagram& fd() const noexcept { return fd_; }
  const SignalPlan& plan() const noexcept { return plan_; }
  const RingConfig& ring() const noexcept { return ring_; }

  double free_flow_lag() const noexcept { return free_flow_lag_; }  // L/V
  double wave_lag() const noexcept { return wave_lag_; }            // L/W

  // Same physics, different density and cycle length.
  Scenario with(double density, double cycle) const {
    return Scenario(fd_, SignalPlan(cycle, plan_.lost_time(),
                                    plan_.green_allocation()),
                    RingConfig{ring_.length, density});
  }

 private:
  FundamentalDiagram fd_;
  SignalPlan plan_;
  RingConfig ring_;
  double free_flow_lag_;
  double wave_lag_;
};

}  // namespace ringroad
