#pragma once

#include <functional>
#include <optional>
#include <string>

#include "latroute/graph.hpp"

namespace latroute {

enum class Sense { minimize, maximize };

/// A low-rank path objective: a strictly positive function of the d criteria
/// sums. lipschitz_beta, when known, is the Lipschitz constant of log g in
/// the L1 norm of log criteria; it drives the solver's reported worst-case
/// factor.
struct Objective {
  int criteria_count = 0;
  Sense sense = Sense::minimize;
  std::function<double(const CriteriaVector&)> evaluate;
  std::optional<double> lipschitz_beta;
  std::string name;
};

/// Cost-to-time ratio l_1 / l_2 (d = 2, minimized).
double eval_ratio(const CriteriaVector& criteria);

/// Standard normal CDF, absolute error well under 1e-12.
double std_normal_cdf(double x);
double std_normal_pdf(double x);

/// Parameters of the on-time-arrival objective. deadline is D;
/// variance_floor is a lower bound S on the variance of every s-t path;
/// regime selects which guarantee clause applies: 3 when the returned
/// probability exceeds Phi(-3), 2 when it exceeds Phi(-2).
struct DeadlineSpec {
  double deadline = 0;
  double variance_floor = 0;
  int regime = 3;
};

/// Probability of arriving by the deadline when criteria = (sum of means,
/// sum of variances): Phi((D - l_1) / sqrt(l_2)). Maximized.
double eval_deadline(const CriteriaVector& criteria, const DeadlineSpec& spec);

// Caps on the deadline guarantee factor: 0.5 over the (rounded) tail
// probabilities Phi(-3) and Phi(-2).
inline constexpr double kDeadlineCapRegime3 = 384.62;
inline constexpr double kDeadlineCapRegime2 = 21.93;

// Bound on Phi'(x)/Phi(x) over [-3, 0).
inline constexpr double kPhiRatioBound = 3.284;

/// Log-log Lipschitz constant of the deadline objective on the all-late
/// region: 3.284*(3 + D/sqrt(S)) for regime 3, and the regime-2 analog
/// 4.745*(2 + D/sqrt(S))/2.
double deadline_lipschitz_bound(const DeadlineSpec& spec);

/// Worst-case factor for a deadline solve that returned returned_value:
///   min(384.62, (1+eps)^(6.568*(3 + D/sqrt(S))*gamma))   if value > Phi(-3)
///   min(21.93,  (1+eps)^(4.745*(2 + D/sqrt(S))*gamma))   if value > Phi(-2)
/// reporting the tighter of the applicable clauses, or nullopt when the
/// returned probability is too small (or >= 0.5) for either to apply.
std::optional<double> deadline_guarantee(double epsilon, int gamma,
                                         const DeadlineSpec& spec,
                                         double returned_value);

Objective make_ratio_objective();
Objective make_deadline_objective(const DeadlineSpec& spec);

/// Single-criterion objective g(y) = y_k (0-based column k), minimized,
/// with beta = 1.
Objective make_linear_objective(int criteria_count, int criterion);

Objective make_generic_objective(
    int criteria_count, Sense sense,
    std::function<double(const CriteriaVector&)> evaluate,
    std::optional<double> lipschitz_beta = std::nullopt,
    std::string name = "generic");

/// Deterministic candidate ranking shared by the solver's final scan and the
/// enumeration oracle: better objective value first (per sense), then
/// lexicographically smaller criteria, then fewer hops.
bool ranks_before(Sense sense, double value_a, const CriteriaVector& ca,
                  int hops_a, double value_b, const CriteriaVector& cb,
                  int hops_b);

/// Deadline instance preparation. Computes the variance floor S as the
/// variance of the minimum-variance s-t path (a valid lower bound for every
/// s-t path) and checks the regime: all_late means even the minimum-mean
/// s-t path misses the deadline, the regime where the guarantee machinery
/// applies.
struct DeadlineContext {
  DeadlineSpec spec;
  bool all_late = false;
  double min_mean = 0;
};

DeadlineContext prepare_deadline(const Graph& graph, VertexId s, VertexId t,
                                 double deadline, int regime = 3);

/// Parsed form of a CLI/config objective name:
///   ratio | deadline:D=<real>[,regime=2|3] | deadline:dfrac=<real>[,...]
///   | linear:k=<1-based column>
/// dfrac sets D as a fraction of the instance's minimum-mean s-t path.
struct ObjectiveSpec {
  enum class Kind { ratio, deadline, linear };

  Kind kind = Kind::ratio;
  std::optional<double> deadline_d;
  std::optional<double> deadline_dfrac;
  int regime = 3;
  int linear_criterion = 0;  // 0-based
};

ObjectiveSpec parse_objective_spec(const std::string& text);

struct NamedObjective {
  Objective objective;
  std::optional<DeadlineContext> deadline;
};

/// Instantiates a parsed objective against a concrete instance and route.
NamedObjective instantiate_objective(const ObjectiveSpec& spec,
                                     const Graph& graph, VertexId s,
                                     VertexId t);

}  // namespace latroute
