#pragma once

// Exact probabilistic evaluation over a validated CausalModel: forward
// simulation, abduction over the joint exogenous domain, and three-step
// counterfactual queries (abduction, action, prediction).
//
// All inference is exact enumeration; there is no sampling path. Operations
// are pure functions of immutable inputs and deterministic.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cfaudit/scm.hpp"

namespace cfaudit {

// Context probabilities at or below this are treated as floating round-off
// and the context is not enumerated.
inline constexpr double kSupportEpsilon = 1e-15;

using ExogenousAssignment = std::map<std::string, std::string>;
using TotalAssignment = std::map<std::string, std::string>;

// P(u | e): weighted support over joint exogenous assignments.
struct ExogenousPosterior {
  std::vector<std::pair<ExogenousAssignment, double>> support;
};

// Joint distribution over a variable tuple. Rows cover the full product
// domain in canonical order (first variable slowest, values in domain order).
struct Distribution {
  std::vector<std::string> variables;
  std::vector<std::pair<std::vector<std::string>, double>> rows;

  double probability(const std::vector<std::string>& values) const {
    for (const auto& [key, p] : rows) {
      if (key == values) return p;
    }
    return 0.0;
  }
};

// Largest element-wise probability difference between two distributions over
// the same variable tuple.
inline double max_deviation(const Distribution& a, const Distribution& b) {
  if (a.variables != b.variables || a.rows.size() != b.rows.size()) {
    throw Error("distributions are over different variable tuples");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].first != b.rows[i].first) {
      throw Error("distributions are over different variable tuples");
    }
    worst = std::max(worst, std::abs(a.rows[i].second - b.rows[i].second));
  }
  return worst;
}

// One positive-probability observational context: a joint feature assignment
// together with a protected-attribute value.
struct ObservationalContext {
  std::map<std::string, std::string> features;
  std::string protected_value;
  double probability = 0.0;
};

class Engine {
 public:
  // The model must have passed validate() and must outlive the engine.
  explicit Engine(const CausalModel& model) : model_(&model) {
    for (std::size_t i = 0; i < model.variables.size(); ++i) {
      const VariableDecl& v = model.variables[i];
      var_index_.emplace(v.name, static_cast<int>(i));
      std::unordered_map<std::string, int> values;
      for (std::size_t k = 0; k < v.domain.size(); ++k) {
        values.emplace(v.domain[k], static_cast<int>(k));
      }
      value_index_.push_back(std::move(values));
      if (v.kind == VarKind::exogenous) exogenous_.push_back(static_cast<int>(i));
    }
    function_of_.assign(model.variables.size(), nullptr);
    prior_of_.assign(model.variables.size(), nullptr);
    for (const auto& f : model.functions) function_of_[index_of(f.target)] = &f;
    for (const auto& p : model.priors) prior_of_[index_of(p.variable)] = &p;
    auto order = detail::topological_order(model);
    if (!order) throw Error("model '" + model.name + "' has a cyclic parent graph");
    for (const auto& name : *order) topo_.push_back(index_of(name));
  }

  const CausalModel& model() const { return *model_; }

  // Deterministic forward simulation of every variable from a total
  // exogenous assignment.
  TotalAssignment evaluate(const ExogenousAssignment& u) const {
    std::vector<int> values = evaluate_indices(resolve_exogenous(u));
    TotalAssignment out;
    for (std::size_t i = 0; i < model_->variables.size(); ++i) {
      out[model_->variables[i].name] = model_->variables[i].domain[values[i]];
    }
    return out;
  }

  // Step 1: update the exogenous prior by conditioning on evidence.
  ExogenousPosterior abduce(const Evidence& evidence) const {
    ExogenousPosterior out;
    for (const auto& [u, w] : abduce_indices(resolve_evidence(evidence))) {
      ExogenousAssignment named;
      for (std::size_t k = 0; k < exogenous_.size(); ++k) {
        const VariableDecl& v = model_->variables[exogenous_[k]];
        named[v.name] = v.domain[u[k]];
      }
      out.support.emplace_back(std::move(named), w);
    }
    return out;
  }

  // Steps 1-3: P(query_x = values | evidence).
  Distribution counterfactual_query(const Evidence& evidence, const Intervention& intervention,
                                    const std::vector<std::string>& query_vars) const {
    return query_posterior(abduce_indices(resolve_evidence(evidence)), intervention, query_vars);
  }

  // Same as counterfactual_query but reusing an already-computed posterior,
  // for callers issuing several queries against the same evidence.
  Distribution counterfactual_with_posterior(const ExogenousPosterior& posterior,
                                             const Intervention& intervention,
                                             const std::vector<std::string>& query_vars) const {
    std::vector<std::pair<std::vector<int>, double>> support;
    support.reserve(posterior.support.size());
    for (const auto& [u, w] : posterior.support) {
      support.emplace_back(resolve_exogenous(u), w);
    }
    return query_posterior(support, intervention, query_vars);
  }

  // Every (features, protected value) pair with positive observational
  // probability, in canonical domain order.
  std::vector<ObservationalContext> observational_contexts() const {
    std::vector<int> features;
    for (const auto& x : model_->roles.features) features.push_back(index_of(x));
    int protected_var = index_of(model_->roles.protected_attribute);

    std::map<std::vector<int>, double> mass;
    for_each_exogenous([&](const std::vector<int>& u, double w) {
      std::vector<int> values = evaluate_indices(u);
      std::vector<int> key;
      key.reserve(features.size() + 1);
      for (int fx : features) key.push_back(values[fx]);
      key.push_back(values[protected_var]);
      mass[key] += w;
    });

    std::vector<ObservationalContext> out;
    for (const auto& [key, p] : mass) {
      if (p <= kSupportEpsilon) continue;
      ObservationalContext ctx;
      for (std::size_t k = 0; k < features.size(); ++k) {
        const VariableDecl& v = model_->variables[features[k]];
        ctx.features[v.name] = v.domain[key[k]];
      }
      const VariableDecl& a = model_->variables[protected_var];
      ctx.protected_value = a.domain[key.back()];
      ctx.probability = p;
      out.push_back(std::move(ctx));
    }
    return out;
  }

 private:
  int index_of(const std::string& name) const {
    auto it = var_index_.find(name);
    if (it == var_index_.end()) {
      throw UnknownVariableError("unknown variable '" + name + "'");
    }
    return it->second;
  }

  int value_of(int var, const std::string& value) const {
    auto it = value_index_[var].find(value);
    if (it == value_index_[var].end()) {
      throw ValueOutsideDomainError("value '" + value + "' is outside the domain of '" +
                                    model_->variables[var].name + "'");
    }
    return it->second;
  }

  // Exogenous assignment as value indices aligned with exogenous_.
  std::vector<int> resolve_exogenous(const ExogenousAssignment& u) const {
    std::vector<int> out(exogenous_.size());
    for (std::size_t k = 0; k < exogenous_.size(); ++k) {
      const VariableDecl& v = model_->variables[exogenous_[k]];
      auto it = u.find(v.name);
      if (it == u.end()) {
        throw Error("exogenous assignment is missing '" + v.name + "'");
      }
      out[k] = value_of(exogenous_[k], it->second);
    }
    for (const auto& [name, value] : u) {
      int var = index_of(name);
      if (model_->variables[var].kind != VarKind::exogenous) {
        throw UnknownVariableError("no exogenous variable '" + name + "'");
      }
    }
    return out;
  }

  std::vector<std::pair<int, int>> resolve_evidence(const Evidence& evidence) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [name, value] : evidence.assignments) {
      int var = index_of(name);
      if (model_->variables[var].kind != VarKind::endogenous) {
        throw UnknownVariableError("no endogenous variable '" + name + "'");
      }
      out.emplace_back(var, value_of(var, value));
    }
    return out;
  }

  // Forward simulation in topological order; u indexed like exogenous_.
  std::vector<int> evaluate_indices(const std::vector<int>& u) const {
    std::vector<int> values(model_->variables.size(), -1);
    for (std::size_t k = 0; k < exogenous_.size(); ++k) values[exogenous_[k]] = u[k];
    auto lookup = [&](const std::string& name) -> std::string_view {
      int var = index_of(name);
      return model_->variables[var].domain[values[var]];
    };
    for (int var : topo_) {
      std::string_view out = eval_function(*function_of_[var], lookup);
      values[var] = value_of(var, std::string(out));
    }
    return values;
  }

  // Enumerates the joint exogenous domain in canonical (odometer) order,
  // calling fn with each assignment of positive prior mass and its weight.
  template <class Fn>
  void for_each_exogenous(Fn&& fn) const {
    if (exogenous_.empty()) {
      fn(std::vector<int>{}, 1.0);
      return;
    }
    std::vector<int> u(exogenous_.size(), 0);
    bool more = true;
    while (more) {
      double w = 1.0;
      for (std::size_t k = 0; k < exogenous_.size(); ++k) {
        w *= prior_of_[exogenous_[k]]->probabilities[u[k]];
      }
      if (w > 0.0) fn(u, w);
      more = false;
      for (std::size_t k = exogenous_.size(); k-- > 0;) {
        if (++u[k] < static_cast<int>(model_->variables[exogenous_[k]].domain.size())) {
          more = true;
          break;
        }
        u[k] = 0;
      }
    }
  }

  std::vector<std::pair<std::vector<int>, double>> abduce_indices(
      const std::vector<std::pair<int, int>>& evidence) const {
    std::vector<std::pair<std::vector<int>, double>> support;
    double total = 0.0;
    for_each_exogenous([&](const std::vector<int>& u, double w) {
      std::vector<int> values = evaluate_indices(u);
      for (const auto& [var, val] : evidence) {
        if (values[var] != val) return;
      }
      support.emplace_back(u, w);
      total += w;
    });
    if (support.empty() || total <= 0.0) {
      throw InconsistentEvidenceError("evidence has probability zero");
    }
    for (auto& [u, w] : support) w /= total;
    return support;
  }

  Distribution query_posterior(const std::vector<std::pair<std::vector<int>, double>>& posterior,
                               const Intervention& intervention,
                               const std::vector<std::string>& query_vars) const {
    std::vector<int> query;
    for (const auto& q : query_vars) query.push_back(index_of(q));

    // Action: replace intervened functions, then predict in the submodel.
    CausalModel intervened = submodel(*model_, intervention);
    Engine sub(intervened);

    std::map<std::vector<int>, double> mass;
    for (const auto& [u, w] : posterior) {
      std::vector<int> values = sub.evaluate_indices(u);
      std::vector<int> key;
      key.reserve(query.size());
      for (int q : query) key.push_back(values[q]);
      mass[key] += w;
    }

    // Materialize the full product domain in canonical order.
    Distribution dist;
    dist.variables = query_vars;
    std::vector<int> odo(query.size(), 0);
    while (true) {
      std::vector<std::string> key_values;
      key_values.reserve(query.size());
      for (std::size_t k = 0; k < query.size(); ++k) {
        key_values.push_back(model_->variables[query[k]].domain[odo[k]]);
      }
      auto it = mass.find(odo);
      dist.rows.emplace_back(std::move(key_values), it == mass.end() ? 0.0 : it->second);
      std::size_t k = query.size();
      bool carry = true;
      while (carry && k-- > 0) {
        if (++odo[k] < static_cast<int>(model_->variables[query[k]].domain.size())) {
          carry = false;
        } else {
          odo[k] = 0;
        }
      }
      if (carry) break;
    }
    return dist;
  }

  const CausalModel* model_;
  std::unordered_map<std::string, int> var_index_;
  std::vector<std::unordered_map<std::string, int>> value_index_;
  std::vector<int> exogenous_;                          // variable indices
  std::vector<int> topo_;                               // endogenous, evaluation order
  std::vector<const StructuralFunction*> function_of_;  // per variable
  std::vector<const ExogenousPrior*> prior_of_;         // per variable
};

// Free-function forms of the engine operations.

inline TotalAssignment evaluate(const CausalModel& m, const ExogenousAssignment& u) {
  return Engine(m).evaluate(u);
}

inline ExogenousPosterior abduce(const CausalModel& m, const Evidence& evidence) {
  return Engine(m).abduce(evidence);
}

inline Distribution counterfactual_query(const CausalModel& m, const Evidence& evidence,
                                         const Intervention& intervention,
                                         const std::vector<std::string>& query_vars) {
  return Engine(m).counterfactual_query(evidence, intervention, query_vars);
}

inline std::vector<ObservationalContext> observational_contexts(const CausalModel& m) {
  return Engine(m).observational_contexts();
}

}  // namespace cfaudit
