#pragma once

// Independent brute-force reference for cross-validating the engine.
//
// Every probability is computed by materializing the full joint table over
// all exogenous assignments. Variables are resolved by repeated sweeps until
// a fixed point, not by topological ordering, and nothing is cached. The only
// code shared with the engine is the structural-function evaluator itself.
// Intended for test scale.

#include <map>
#include <string>
#include <vector>

#include "cfaudit/engine.hpp"
#include "cfaudit/scm.hpp"

namespace cfaudit::oracle {

struct JointRow {
  ExogenousAssignment exogenous;
  TotalAssignment values;  // exogenous and endogenous together
  double probability = 0.0;
};

struct JointTable {
  std::vector<JointRow> rows;  // one per exogenous assignment in prior support
};

namespace detail {

// Resolves all endogenous values by sweeping the function list until no
// variable remains unassigned. Acyclic models settle within |F| sweeps.
inline TotalAssignment solve_equations(const CausalModel& m, const ExogenousAssignment& u) {
  TotalAssignment env = u;
  std::size_t assigned = 0;
  for (std::size_t sweep = 0; sweep <= m.functions.size(); ++sweep) {
    for (const auto& f : m.functions) {
      if (env.count(f.target)) continue;
      bool ready = true;
      for (const auto& p : f.parents) {
        if (!env.count(p)) {
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      std::string_view out =
          eval_function(f, [&](const std::string& name) -> std::string_view { return env.at(name); });
      env[f.target] = std::string(out);
      ++assigned;
    }
    if (assigned == m.functions.size()) return env;
  }
  throw Error("equations did not settle; model is not acyclic");
}

inline void check_evidence(const CausalModel& m, const Evidence& evidence) {
  for (const auto& [name, value] : evidence.assignments) {
    const VariableDecl* decl = m.find_variable(name);
    if (!decl) throw UnknownVariableError("unknown variable '" + name + "'");
    if (decl->kind != VarKind::endogenous) {
      throw UnknownVariableError("no endogenous variable '" + name + "'");
    }
    if (std::find(decl->domain.begin(), decl->domain.end(), value) == decl->domain.end()) {
      throw ValueOutsideDomainError("value '" + value + "' is outside the domain of '" + name +
                                    "'");
    }
  }
}

}  // namespace detail

inline JointTable build_joint_table(const CausalModel& m) {
  std::vector<const VariableDecl*> exo;
  for (const auto& v : m.variables) {
    if (v.kind == VarKind::exogenous) exo.push_back(&v);
  }
  JointTable table;
  std::vector<std::size_t> odo(exo.size(), 0);
  bool more = true;
  while (more) {
    double w = 1.0;
    ExogenousAssignment u;
    for (std::size_t k = 0; k < exo.size(); ++k) {
      u[exo[k]->name] = exo[k]->domain[odo[k]];
      w *= m.find_prior(exo[k]->name)->probabilities[odo[k]];
    }
    if (w > 0.0) {
      table.rows.push_back({u, detail::solve_equations(m, u), w});
    }
    more = false;
    for (std::size_t k = exo.size(); k-- > 0;) {
      if (++odo[k] < exo[k]->domain.size()) {
        more = true;
        break;
      }
      odo[k] = 0;
    }
  }
  return table;
}

// Same contract as Engine::counterfactual_query: filter the joint table by
// the evidence, renormalize, and push every surviving row through the
// intervened model.
inline Distribution oracle_counterfactual(const CausalModel& m, const Evidence& evidence,
                                          const Intervention& intervention,
                                          const std::vector<std::string>& query_vars) {
  detail::check_evidence(m, evidence);

  JointTable table = build_joint_table(m);
  std::vector<const JointRow*> surviving;
  double total = 0.0;
  for (const auto& row : table.rows) {
    bool consistent = true;
    for (const auto& [name, value] : evidence.assignments) {
      if (row.values.at(name) != value) {
        consistent = false;
        break;
      }
    }
    if (consistent) {
      surviving.push_back(&row);
      total += row.probability;
    }
  }
  if (surviving.empty() || total <= 0.0) {
    throw InconsistentEvidenceError("evidence has probability zero");
  }

  std::vector<const VariableDecl*> query;
  for (const auto& q : query_vars) {
    const VariableDecl* decl = m.find_variable(q);
    if (!decl) throw UnknownVariableError("unknown variable '" + q + "'");
    query.push_back(decl);
  }

  CausalModel intervened = submodel(m, intervention);
  std::map<std::vector<std::string>, double> mass;
  for (const JointRow* row : surviving) {
    TotalAssignment values = detail::solve_equations(intervened, row->exogenous);
    std::vector<std::string> key;
    key.reserve(query.size());
    for (const VariableDecl* q : query) key.push_back(values.at(q->name));
    mass[key] += row->probability / total;
  }

  Distribution dist;
  dist.variables = query_vars;
  std::vector<std::size_t> odo(query.size(), 0);
  bool more = true;
  while (more) {
    std::vector<std::string> key;
    key.reserve(query.size());
    for (std::size_t k = 0; k < query.size(); ++k) key.push_back(query[k]->domain[odo[k]]);
    auto it = mass.find(key);
    dist.rows.emplace_back(std::move(key), it == mass.end() ? 0.0 : it->second);
    more = false;
    for (std::size_t k = query.size(); k-- > 0;) {
      if (++odo[k] < query[k]->domain.size()) {
        more = true;
        break;
      }
      odo[k] = 0;
    }
  }
  return dist;
}

}  // namespace cfaudit::oracle
