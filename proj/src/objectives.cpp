#include "latroute/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "latroute/baselines.hpp"
#include "latroute/errors.hpp"

namespace latroute {

double eval_ratio(const CriteriaVector& criteria) {
  return criteria[0] / criteria[1];
}

double std_normal_cdf(double x) {
  return 0.5 * std::erfc(-x * 0.7071067811865475244);  // 1/sqrt(2)
}

double std_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) * 0.3989422804014326779;  // 1/sqrt(2*pi)
}

double eval_deadline(const CriteriaVector& criteria,
                     const DeadlineSpec& spec) {
  return std_normal_cdf((spec.deadline - criteria[0]) /
                        std::sqrt(criteria[1]));
}

double deadline_lipschitz_bound(const DeadlineSpec& spec) {
  const double drift = spec.deadline / std::sqrt(spec.variance_floor);
  if (spec.regime == 2) {
    return 4.745 * (2.0 + drift) / 2.0;
  }
  return kPhiRatioBound * (3.0 + drift);
}

std::optional<double> deadline_guarantee(double epsilon, int gamma,
                                         const DeadlineSpec& spec,
                                         double returned_value) {
  if (!(returned_value > 0) || returned_value >= 0.5) {
    return std::nullopt;
  }
  const double drift = spec.deadline / std::sqrt(spec.variance_floor);
  const double g = static_cast<double>(gamma);
  std::optional<double> alpha;
  if (returned_value > std_normal_cdf(-3.0)) {
    alpha = std::min(kDeadlineCapRegime3,
                     std::pow(1.0 + epsilon, 6.568 * (3.0 + drift) * g));
  }
  if (returned_value > std_normal_cdf(-2.0)) {
    const double tighter =
        std::min(kDeadlineCapRegime2,
                 std::pow(1.0 + epsilon, 4.745 * (2.0 + drift) * g));
    alpha = alpha ? std::min(*alpha, tighter) : tighter;
  }
  return alpha;
}

Objective make_ratio_objective() {
  Objective obj;
  obj.criteria_count = 2;
  obj.sense = Sense::minimize;
  obj.evaluate = eval_ratio;
  obj.name = "ratio";
  return obj;
}

Objective make_deadline_objective(const DeadlineSpec& spec) {
  Objective obj;
  obj.criteria_count = 2;
  obj.sense = Sense::maximize;
  obj.evaluate = [spec](const CriteriaVector& criteria) {
    return eval_deadline(criteria, spec);
  };
  obj.lipschitz_beta = deadline_lipschitz_bound(spec);
  obj.name = "deadline";
  return obj;
}

Objective make_linear_objective(int criteria_count, int criterion) {
  if (criterion < 0 || criterion >= criteria_count) {
    throw Error("linear objective: criterion out of range");
  }
  Objective obj;
  obj.criteria_count = criteria_count;
  obj.sense = Sense::minimize;
  obj.evaluate = [criterion](const CriteriaVector& criteria) {
    return criteria[static_cast<std::size_t>(criterion)];
  };
  obj.lipschitz_beta = 1.0;
  obj.name = "linear:k=" + std::to_string(criterion + 1);
  return obj;
}

Objective make_generic_objective(
    int criteria_count, Sense sense,
    std::function<double(const CriteriaVector&)> evaluate,
    std::optional<double> lipschitz_beta, std::string name) {
  Objective obj;
  obj.criteria_count = criteria_count;
  obj.sense = sense;
  obj.evaluate = std::move(evaluate);
  obj.lipschitz_beta = lipschitz_beta;
  obj.name = std::move(name);
  return obj;
}

bool ranks_before(Sense sense, double value_a, const CriteriaVector& ca,
                  int hops_a, double value_b, const CriteriaVector& cb,
                  int hops_b) {
  if (value_a != value_b) {
    return sense == Sense::minimize ? value_a < value_b : value_a > value_b;
  }
  if (ca != cb) {
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(),
                                        cb.end());
  }
  return hops_a < hops_b;
}

DeadlineContext prepare_deadline(const Graph& graph, VertexId s, VertexId t,
                                 double deadline, int regime) {
  if (graph.criteria_count() != 2) {
    throw Error("deadline objective needs d = 2 (mean, variance)");
  }
  if (regime != 2 && regime != 3) {
    throw Error("deadline regime must be 2 or 3");
  }
  DeadlineContext ctx;
  ctx.spec.deadline = deadline;
  ctx.spec.regime = regime;
  ctx.spec.variance_floor = shortest_path_single_criterion(graph, s, t, 1).value;
  ctx.min_mean = shortest_path_single_criterion(graph, s, t, 0).value;
  ctx.all_late = ctx.min_mean > deadline;
  return ctx;
}

namespace {

double parse_real(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) {
      throw Error("");
    }
    return v;
  } catch (...) {
    throw Error("objective: bad " + what + " value '" + text + "'");
  }
}

}  // namespace

ObjectiveSpec parse_objective_spec(const std::string& text) {
  ObjectiveSpec spec;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : text.substr(colon + 1);

  if (head == "ratio") {
    if (!args.empty()) {
      throw Error("objective: ratio takes no parameters");
    }
    spec.kind = ObjectiveSpec::Kind::ratio;
    return spec;
  }

  if (head == "deadline") {
    spec.kind = ObjectiveSpec::Kind::deadline;
    std::size_t pos = 0;
    while (pos < args.size()) {
      auto comma = args.find(',', pos);
      if (comma == std::string::npos) {
        comma = args.size();
      }
      const std::string item = args.substr(pos, comma - pos);
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw Error("objective: expected key=value, got '" + item + "'");
      }
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "D") {
        spec.deadline_d = parse_real(value, "D");
      } else if (key == "dfrac") {
        spec.deadline_dfrac = parse_real(value, "dfrac");
      } else if (key == "regime") {
        if (value == "2") {
          spec.regime = 2;
        } else if (value == "3") {
          spec.regime = 3;
        } else {
          throw Error("objective: regime must be 2 or 3");
        }
      } else {
        throw Error("objective: unknown deadline parameter '" + key + "'");
      }
      pos = comma + 1;
    }
    if (spec.deadline_d.has_value() == spec.deadline_dfrac.has_value()) {
      throw Error("objective: deadline needs exactly one of D= or dfrac=");
    }
    return spec;
  }

  if (head == "linear") {
    spec.kind = ObjectiveSpec::Kind::linear;
    if (args.rfind("k=", 0) != 0) {
      throw Error("objective: linear needs k=<column>");
    }
    const double k = parse_real(args.substr(2), "k");
    if (k < 1 || k != std::floor(k)) {
      throw Error("objective: linear column must be a positive integer");
    }
    spec.linear_criterion = static_cast<int>(k) - 1;
    return spec;
  }

  throw Error("unknown objective '" + text +
              "' (expected ratio, deadline:..., or linear:k=...)");
}

NamedObjective instantiate_objective(const ObjectiveSpec& spec,
                                     const Graph& graph, VertexId s,
                                     VertexId t) {
  NamedObjective named;
  switch (spec.kind) {
    case ObjectiveSpec::Kind::ratio:
      if (graph.criteria_count() != 2) {
        throw Error("ratio objective needs d = 2");
      }
      named.objective = make_ratio_objective();
      return named;
    case ObjectiveSpec::Kind::linear:
      named.objective =
          make_linear_objective(graph.criteria_count(), spec.linear_criterion);
      return named;
    case ObjectiveSpec::Kind::deadline: {
      double deadline = 0;
      if (spec.deadline_d) {
        deadline = *spec.deadline_d;
      } else {
        const double min_mean =
            shortest_path_single_criterion(graph, s, t, 0).value;
        deadline = *spec.deadline_dfrac * min_mean;
      }
      if (!(deadline > 0)) {
        throw Error("deadline must be positive");
      }
      named.deadline = prepare_deadline(graph, s, t, deadline, spec.regime);
      named.objective = make_deadline_objective(named.deadline->spec);
      return named;
    }
  }
  throw Error("unreachable objective kind");
}

}  // namespace latroute
