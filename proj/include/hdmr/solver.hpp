#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hdmr/model.hpp"

namespace hdmr {

enum class Engine : std::uint8_t { Rvi, StructuralRvi, Brvi };

std::string_view to_string(Engine e);
Engine engine_from_string(std::string_view name);

struct SolverConfig {
  std::int64_t m = 1000;
  double theta = 1e-10;
  Engine engine = Engine::Brvi;
  std::int64_t max_iters = 1000000;
  // Not part of the JSON schema:
  bool check_properties = false;  // verify iterate monotonicity in delta and
                                  // B-absorption after every sweep
  bool parallel = true;           // OpenMP Jacobi sweep for the plain RVI
                                  // engine (bit-identical to serial)
};

/// Finite-state approximation with states {1, ..., m}: action N advances
/// deterministically, recruiting actions reset to 1 with probability Q_a,
/// otherwise advance; state m absorbs the advance.
struct TruncatedMdp {
  Scenario scenario;
  std::int64_t m = 0;
  Classification cls;
  ThresholdBounds bounds;
  bool truncation_warning = false;  // m does not exceed the B-threshold bound
  std::array<double, 4> q{};        // success probability per action
  std::array<double, 4> recruit{};  // expected recruitment spend per action

  double transition_prob(std::int64_t from, Action a, std::int64_t to) const;
};

TruncatedMdp build_truncated_mdp(const Scenario& s, std::int64_t m);

/// A structure tag plus, for each non-N action in its order, the first AoI at
/// which the action is taken. Actions never taken are absent; B is always
/// present. Thresholds are nondecreasing along the order.
struct ThresholdPolicy {
  PolicyStructure structure;
  std::vector<std::pair<Action, std::int64_t>> thresholds;

  std::int64_t delta_B() const;
  std::optional<std::int64_t> threshold_for(Action a) const;
  /// Latest action in the escalation order whose threshold is <= delta
  /// (N below the first threshold).
  Action action_at(std::int64_t delta) const;

  bool operator==(const ThresholdPolicy& other) const;
};

/// Rejects a policy violating the type's invariants (B present, thresholds
/// >= 1 and nondecreasing along the order, actions drawn from the order).
void validate_threshold_policy(const ThresholdPolicy& policy);

struct SolveResult {
  std::vector<Action> policy;       // per-state optimal action, state = index+1
  std::vector<double> iterate;      // final relative-value vector
  ThresholdPolicy thresholds;
  double avg_cost = 0.0;            // exact stationary evaluation of the
                                    // extracted policy, not the iterate
  std::int64_t iterations = 0;      // sweeps performed
  std::int64_t argmin_evals = 0;    // candidate-action cost evaluations
  std::int64_t shortcut_states = 0; // states assigned B without minimization
  bool converged = false;
  bool truncation_warning = false;
  bool boundary = false;            // classification sat on a region boundary
  bool properties_ok = true;        // only meaningful with check_properties
};

/// Plain relative value iteration: every sweep minimizes over all four
/// actions at every state (Jacobi updates from the previous iterate, relative
/// to state 1). Stops when the sup-norm relative change drops to theta.
SolveResult rvi_solve(const TruncatedMdp& mdp, const SolverConfig& cfg);

/// RVI exploiting B-absorption: within a sweep, every state above the first
/// argmin-B state is assigned B without minimization.
SolveResult structural_rvi_solve(const TruncatedMdp& mdp,
                                 const SolverConfig& cfg);

/// Structural RVI with the minimization restricted to the bound-reduced
/// feasible set of each state.
SolveResult brvi_solve(const TruncatedMdp& mdp, const SolverConfig& cfg);

/// Dispatches on cfg.engine.
SolveResult solve(const TruncatedMdp& mdp, const SolverConfig& cfg);

/// Reads the thresholds off a per-state action table. Rejects tables that are
/// not threshold-type for the scenario's structure (naming the first
/// violating state), tables that never take B, and thresholds exceeding their
/// bound.
ThresholdPolicy extract_thresholds(const std::vector<Action>& table,
                                   const Scenario& s);

/// One Jacobi backup pass over all states, minimizing over all four actions;
/// writes the un-shifted candidate minima and argmins. The two variants are
/// bit-identical; the parallel one uses OpenMP when available.
void bellman_sweep_serial(const TruncatedMdp& mdp,
                          const std::vector<double>& value,
                          std::vector<double>& value_next,
                          std::vector<Action>& argmin);
void bellman_sweep_parallel(const TruncatedMdp& mdp,
                            const std::vector<double>& value,
                            std::vector<double>& value_next,
                            std::vector<Action>& argmin);

}  // namespace hdmr
