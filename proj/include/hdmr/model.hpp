#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace hdmr {

/// Recruitment actions. The enum order N < L < H < B is a plain total order
/// used for deterministic tie-breaking only; the escalation order of a policy
/// comes from its PolicyStructure.
enum class Action : std::uint8_t { N = 0, L = 1, H = 2, B = 3 };

inline constexpr std::array<Action, 4> all_actions{Action::N, Action::L,
                                                   Action::H, Action::B};

std::string_view to_string(Action a);
Action action_from_string(std::string_view name);

/// One vehicle type: per-slot arrival probability, operational cost paid on
/// recruitment, and the probability that an uploaded report is qualified.
struct VehicleClass {
  double p;
  double c;
  double r;
};

struct Scenario {
  double beta;  // weight between recruitment spend and AoI loss, in (0,1)
  VehicleClass low;
  VehicleClass high;
};

/// Builds a Scenario, rejecting any violated constraint by name:
/// probabilities in range, positive costs, c_L < c_H, r_L < r_H, beta in (0,1).
Scenario validate_scenario(double beta, double p_L, double c_L, double r_L,
                           double p_H, double c_H, double r_H);

enum class StructureTag : std::uint8_t { LH, HL, NoneL, NoneH };

std::string_view to_string(StructureTag t);
StructureTag structure_tag_from_string(std::string_view name);

/// A structure tag plus its action escalation order. The order always starts
/// with N and ends with B; length 3 or 4.
struct PolicyStructure {
  StructureTag tag;
  std::vector<Action> order;

  bool contains(Action a) const;
};

PolicyStructure make_structure(StructureTag tag);

/// Probability that the chosen action yields at least one qualified report
/// in a slot. Zero for N, r*p for a single type, inclusion-exclusion for B.
double success_prob(const Scenario& s, Action a);

/// Expected recruitment spend of an action: 0 for N, p*c for a single type,
/// p_L c_L + p_H c_H for B (arrivals independent).
double expected_recruit_cost(const Scenario& s, Action a);

/// One-slot expected cost at AoI delta:
///   (1-beta) * expected_recruit_cost + beta * (1 - Q_a) * delta^2.
/// Rejects delta < 1.
double stage_cost(const Scenario& s, std::int64_t delta, Action a);

/// eta_a = p_a c_a / Q_a, the expected spend per expected successful update.
/// Rejects a = N and degenerate Q_a = 0.
double cost_effectiveness(const Scenario& s, Action a);

/// gamma_{a1,a2} = (p_{a2} c_{a2} - p_{a1} c_{a1}) / (Q_{a2} - Q_{a1}).
/// Rejects pairs with Q_{a1} = Q_{a2}.
double marginal_cost_effectiveness(const Scenario& s, Action a1, Action a2);

struct Classification {
  PolicyStructure structure;
  bool boundary;  // true when the parameters sit exactly on a
                  // strict-inequality boundary between regions
};

/// Maps a scenario to its optimal-policy structure. The four regions are
/// decided by x = eta_L/eta_H against 1 and R = (1-Q_H)/(1-Q_L):
///   None-L: x >= max(1, R);   None-H: x < min(1, R);
///   LH:     Q_L <= Q_H and R < x < 1;
///   HL:     Q_L >  Q_H and 1 < x < R.
/// The two measure-zero gaps left by the strict inequalities resolve to the
/// shorter order: x == R (with Q_L < Q_H) -> None-H, x == 1 (with Q_L > Q_H)
/// -> None-L; both are reported with boundary = true.
Classification classify_structure_detailed(const Scenario& s);
PolicyStructure classify_structure(const Scenario& s);

/// Smallest integer strictly greater than x (so strict_ceiling(2.0) == 3).
std::int64_t strict_ceiling(double x);

/// Strict-ceiling upper bounds on the optimal thresholds, keyed by the
/// structure's non-N actions in escalation order. Nondecreasing along the
/// order.
struct ThresholdBounds {
  StructureTag tag;
  std::vector<std::pair<Action, std::int64_t>> entries;

  std::int64_t bound_for(Action a) const;
  std::int64_t bound_B() const;
};

/// Computes the threshold upper bounds for the given structure. Rejects a
/// structure that does not match classify_structure(s).
ThresholdBounds threshold_bounds(const Scenario& s,
                                 const PolicyStructure& structure);

/// Actions worth minimizing over at AoI delta: the structure's full order
/// below the first bound, then dropping the leading action at each successive
/// bound, down to {B}. Actions absent from the structure's order never
/// appear. Rejects delta < 1 and mismatched bounds/structure.
std::vector<Action> reduced_feasible_set(const ThresholdBounds& bounds,
                                         const PolicyStructure& structure,
                                         std::int64_t delta);

}  // namespace hdmr
