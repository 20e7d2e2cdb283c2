#include "hdmr/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hdmr {

std::string_view to_string(Action a) {
  switch (a) {
    case Action::N: return "N";
    case Action::L: return "L";
    case Action::H: return "H";
    case Action::B: return "B";
  }
  throw std::logic_error("unreachable action value");
}

Action action_from_string(std::string_view name) {
  if (name == "N") return Action::N;
  if (name == "L") return Action::L;
  if (name == "H") return Action::H;
  if (name == "B") return Action::B;
  throw std::invalid_argument("unknown action \"" + std::string(name) +
                              "\", expected one of N, L, H, B");
}

std::string_view to_string(StructureTag t) {
  switch (t) {
    case StructureTag::LH: return "LH";
    case StructureTag::HL: return "HL";
    case StructureTag::NoneL: return "NoneL";
    case StructureTag::NoneH: return "NoneH";
  }
  throw std::logic_error("unreachable structure tag");
}

StructureTag structure_tag_from_string(std::string_view name) {
  if (name == "LH") return StructureTag::LH;
  if (name == "HL") return StructureTag::HL;
  if (name == "NoneL") return StructureTag::NoneL;
  if (name == "NoneH") return StructureTag::NoneH;
  throw std::invalid_argument("unknown structure tag \"" + std::string(name) +
                              "\", expected LH, HL, NoneL or NoneH");
}

bool PolicyStructure::contains(Action a) const {
  return std::find(order.begin(), order.end(), a) != order.end();
}

PolicyStructure make_structure(StructureTag tag) {
  switch (tag) {
    case StructureTag::LH:
      return {tag, {Action::N, Action::L, Action::H, Action::B}};
    case StructureTag::HL:
      return {tag, {Action::N, Action::H, Action::L, Action::B}};
    case StructureTag::NoneL:
      return {tag, {Action::N, Action::H, Action::B}};
    case StructureTag::NoneH:
      return {tag, {Action::N, Action::L, Action::B}};
  }
  throw std::logic_error("unreachable structure tag");
}

namespace {

void check_class(const char* name, const VehicleClass& v) {
  const std::string n(name);
  if (!(v.p > 0.0 && v.p < 1.0))
    throw std::invalid_argument("0 < p_" + n + " < 1 violated");
  if (!(v.c > 0.0)) throw std::invalid_argument("c_" + n + " > 0 violated");
  if (!(v.r > 0.0 && v.r <= 1.0))
    throw std::invalid_argument("0 < r_" + n + " <= 1 violated");
}

}  // namespace

Scenario validate_scenario(double beta, double p_L, double c_L, double r_L,
                           double p_H, double c_H, double r_H) {
  Scenario s{beta, {p_L, c_L, r_L}, {p_H, c_H, r_H}};
  if (!(s.beta > 0.0 && s.beta < 1.0))
    throw std::invalid_argument("0 < beta < 1 violated");
  check_class("L", s.low);
  check_class("H", s.high);
  if (!(s.low.c < s.high.c)) throw std::invalid_argument("c_L < c_H violated");
  if (!(s.low.r < s.high.r)) throw std::invalid_argument("r_L < r_H violated");
  return s;
}

double success_prob(const Scenario& s, Action a) {
  switch (a) {
    case Action::N: return 0.0;
    case Action::L: return s.low.r * s.low.p;
    case Action::H: return s.high.r * s.high.p;
    case Action::B: {
      const double ql = s.low.r * s.low.p;
      const double qh = s.high.r * s.high.p;
      return ql + qh - ql * qh;
    }
  }
  throw std::logic_error("unreachable action value");
}

double expected_recruit_cost(const Scenario& s, Action a) {
  switch (a) {
    case Action::N: return 0.0;
    case Action::L: return s.low.p * s.low.c;
    case Action::H: return s.high.p * s.high.c;
    case Action::B: return s.low.p * s.low.c + s.high.p * s.high.c;
  }
  throw std::logic_error("unreachable action value");
}

double stage_cost(const Scenario& s, std::int64_t delta, Action a) {
  if (delta < 1) throw std::invalid_argument("stage cost requires delta >= 1");
  const double dd = static_cast<double>(delta) * static_cast<double>(delta);
  return (1.0 - s.beta) * expected_recruit_cost(s, a) +
         s.beta * (1.0 - success_prob(s, a)) * dd;
}

double cost_effectiveness(const Scenario& s, Action a) {
  if (a == Action::N)
    throw std::invalid_argument("cost-effectiveness is undefined for action N");
  const double q = success_prob(s, a);
  if (q == 0.0)
    throw std::invalid_argument(
        "cost-effectiveness is undefined for zero success probability");
  return expected_recruit_cost(s, a) / q;
}

double marginal_cost_effectiveness(const Scenario& s, Action a1, Action a2) {
  const double dq = success_prob(s, a2) - success_prob(s, a1);
  if (dq == 0.0) {
    std::ostringstream msg;
    msg << "degenerate action pair (" << to_string(a1) << ", " << to_string(a2)
        << "): equal success probabilities";
    throw std::invalid_argument(msg.str());
  }
  return (expected_recruit_cost(s, a2) - expected_recruit_cost(s, a1)) / dq;
}

Classification classify_structure_detailed(const Scenario& s) {
  const double q_l = success_prob(s, Action::L);
  const double q_h = success_prob(s, Action::H);
  const double x = cost_effectiveness(s, Action::L) /
                   cost_effectiveness(s, Action::H);
  const double ratio = (1.0 - q_h) / (1.0 - q_l);

  if (x >= std::max(1.0, ratio))
    return {make_structure(StructureTag::NoneL), false};
  if (x < std::min(1.0, ratio))
    return {make_structure(StructureTag::NoneH), false};
  if (q_l <= q_h && ratio < x && x < 1.0)
    return {make_structure(StructureTag::LH), false};
  if (q_l > q_h && 1.0 < x && x < ratio)
    return {make_structure(StructureTag::HL), false};

  // Exactly on a strict-inequality boundary. x == ratio (Q_L < Q_H) means the
  // L-then-H and L-then-B escalation paths tie; x == 1 (Q_L > Q_H) means the
  // single-type actions tie. Both resolve to the shorter order.
  if (x == ratio) return {make_structure(StructureTag::NoneH), true};
  return {make_structure(StructureTag::NoneL), true};
}

PolicyStructure classify_structure(const Scenario& s) {
  return classify_structure_detailed(s).structure;
}

std::int64_t strict_ceiling(double x) {
  return static_cast<std::int64_t>(std::floor(x)) + 1;
}

namespace {

std::int64_t threshold_bound(double numerator, double beta,
                             double denominator_scale) {
  return strict_ceiling(
      std::sqrt((1.0 - beta) * numerator / (beta * denominator_scale)));
}

}  // namespace

ThresholdBounds threshold_bounds(const Scenario& s,
                                 const PolicyStructure& structure) {
  const Classification cls = classify_structure_detailed(s);
  if (cls.structure.tag != structure.tag)
    throw std::invalid_argument(
        "structure mismatch: scenario classifies as " +
        std::string(to_string(cls.structure.tag)) + ", got " +
        std::string(to_string(structure.tag)));

  const double beta = s.beta;
  const double q_l = success_prob(s, Action::L);
  const double q_h = success_prob(s, Action::H);
  const double eta_l = cost_effectiveness(s, Action::L);
  const double eta_h = cost_effectiveness(s, Action::H);
  // (eta_H Q_H - eta_L Q_L) / (Q_H - Q_L), the marginal cost-effectiveness of
  // switching between the single-type actions.
  const double gamma_lh = (eta_h * q_h - eta_l * q_l) / (q_h - q_l);

  ThresholdBounds b{structure.tag, {}};
  switch (structure.tag) {
    case StructureTag::LH:
      b.entries = {{Action::L, threshold_bound(eta_l, beta, 1.0)},
                   {Action::H, threshold_bound(gamma_lh, beta, 1.0)},
                   {Action::B, threshold_bound(eta_l, beta, 1.0 - q_h)}};
      break;
    case StructureTag::HL:
      b.entries = {{Action::H, threshold_bound(eta_h, beta, 1.0)},
                   {Action::L, threshold_bound(gamma_lh, beta, 1.0)},
                   {Action::B, threshold_bound(eta_h, beta, 1.0 - q_l)}};
      break;
    case StructureTag::NoneL:
      b.entries = {{Action::H, threshold_bound(eta_h, beta, 1.0)},
                   {Action::B, threshold_bound(eta_l, beta, 1.0 - q_h)}};
      break;
    case StructureTag::NoneH:
      b.entries = {{Action::L, threshold_bound(eta_l, beta, 1.0)},
                   {Action::B, threshold_bound(eta_h, beta, 1.0 - q_l)}};
      break;
  }
  return b;
}

std::int64_t ThresholdBounds::bound_for(Action a) const {
  for (const auto& [action, value] : entries)
    if (action == a) return value;
  throw std::invalid_argument("action " + std::string(to_string(a)) +
                              " has no bound in structure " +
                              std::string(to_string(tag)));
}

std::int64_t ThresholdBounds::bound_B() const { return bound_for(Action::B); }

std::vector<Action> reduced_feasible_set(const ThresholdBounds& bounds,
                                         const PolicyStructure& structure,
                                         std::int64_t delta) {
  if (delta < 1)
    throw std::invalid_argument("reduced feasible set requires delta >= 1");
  if (bounds.tag != structure.tag)
    throw std::invalid_argument("bounds computed for structure " +
                                std::string(to_string(bounds.tag)) +
                                ", feasible set requested for " +
                                std::string(to_string(structure.tag)));

  // Drop the leading action of the order for every bound already crossed.
  std::size_t dropped = 0;
  for (const auto& [action, value] : bounds.entries)
    if (delta >= value) ++dropped;
  dropped = std::min(dropped, structure.order.size() - 1);
  return {structure.order.begin() + static_cast<std::ptrdiff_t>(dropped),
          structure.order.end()};
}

}  // namespace hdmr
