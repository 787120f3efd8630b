#pragma once

// Core representation of finite discrete structural causal models:
// variable declarations, exogenous priors, structural functions as small
// expression trees, role designations (protected / features / predictor /
// target), model validation, and graph surgery (submodel construction).
//
// A validated CausalModel is immutable and safe for concurrent reads.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cfaudit {

// Tolerance for prior normalization checks.
inline constexpr double kPriorTolerance = 1e-9;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class UnknownVariableError : public Error {
 public:
  explicit UnknownVariableError(const std::string& what) : Error(what) {}
};

class ValueOutsideDomainError : public Error {
 public:
  explicit ValueOutsideDomainError(const std::string& what) : Error(what) {}
};

// Raised when conditioning on evidence of probability zero.
class InconsistentEvidenceError : public Error {
 public:
  explicit InconsistentEvidenceError(const std::string& what) : Error(what) {}
};

// ---------------------------------------------------------------------------
// Model vocabulary

enum class VarKind { exogenous, endogenous };

struct VariableDecl {
  std::string name;
  std::vector<std::string> domain;  // ordered, distinct symbolic values
  VarKind kind = VarKind::endogenous;
};

struct ExogenousPrior {
  std::string variable;
  std::vector<double> probabilities;  // aligned with the variable's domain
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Expression tree for structural function bodies. Nodes are immutable and
// shared; copying a model shares subtrees.
class Expr {
 public:
  struct Const {
    std::string value;
  };
  struct Ref {
    std::string variable;
  };
  struct If {
    std::string variable;  // tested parent
    std::string value;     // compared against
    ExprPtr then_branch;
    ExprPtr else_branch;
  };
  struct TableRow {
    std::vector<std::string> key;  // one value per declared parent, in order
    std::string value;
  };
  struct Table {
    std::vector<TableRow> rows;  // kept sorted by key
    std::optional<std::string> default_value;
  };
  using Node = std::variant<Const, Ref, If, Table>;

  explicit Expr(Node node) : node(std::move(node)) {}

  Node node;

  static ExprPtr constant(std::string value) {
    return std::make_shared<Expr>(Const{std::move(value)});
  }
  static ExprPtr ref(std::string variable) {
    return std::make_shared<Expr>(Ref{std::move(variable)});
  }
  static ExprPtr if_eq(std::string variable, std::string value, ExprPtr then_branch,
                       ExprPtr else_branch) {
    return std::make_shared<Expr>(
        If{std::move(variable), std::move(value), std::move(then_branch), std::move(else_branch)});
  }
  // Rows are normalized to canonical (sorted-by-key) order.
  static ExprPtr table(std::vector<TableRow> rows, std::optional<std::string> default_value) {
    std::sort(rows.begin(), rows.end(),
              [](const TableRow& a, const TableRow& b) { return a.key < b.key; });
    return std::make_shared<Expr>(Table{std::move(rows), std::move(default_value)});
  }
};

bool operator==(const Expr& a, const Expr& b);

inline bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

inline bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* ca = std::get_if<Expr::Const>(&a.node)) {
    return ca->value == std::get<Expr::Const>(b.node).value;
  }
  if (const auto* ra = std::get_if<Expr::Ref>(&a.node)) {
    return ra->variable == std::get<Expr::Ref>(b.node).variable;
  }
  if (const auto* ia = std::get_if<Expr::If>(&a.node)) {
    const auto& ib = std::get<Expr::If>(b.node);
    return ia->variable == ib.variable && ia->value == ib.value &&
           equal(ia->then_branch, ib.then_branch) && equal(ia->else_branch, ib.else_branch);
  }
  const auto& ta = std::get<Expr::Table>(a.node);
  const auto& tb = std::get<Expr::Table>(b.node);
  if (ta.default_value != tb.default_value) return false;
  if (ta.rows.size() != tb.rows.size()) return false;
  for (std::size_t i = 0; i < ta.rows.size(); ++i) {
    if (ta.rows[i].key != tb.rows[i].key || ta.rows[i].value != tb.rows[i].value) return false;
  }
  return true;
}

struct StructuralFunction {
  std::string target;                // endogenous variable this function defines
  std::vector<std::string> parents;  // ordered; exogenous or endogenous
  ExprPtr body;
};

struct Roles {
  std::string protected_attribute;   // A
  std::vector<std::string> features; // X
  std::string predictor;             // the algorithm's output
  std::string target;                // the real-world variable it estimates
};

struct CausalModel {
  std::string name;
  std::vector<VariableDecl> variables;
  std::vector<ExogenousPrior> priors;        // one per exogenous variable
  std::vector<StructuralFunction> functions; // one per endogenous variable
  Roles roles;

  const VariableDecl* find_variable(std::string_view name) const {
    for (const auto& v : variables)
      if (v.name == name) return &v;
    return nullptr;
  }
  const StructuralFunction* find_function(std::string_view target) const {
    for (const auto& f : functions)
      if (f.target == target) return &f;
    return nullptr;
  }
  const ExogenousPrior* find_prior(std::string_view variable) const {
    for (const auto& p : priors)
      if (p.variable == variable) return &p;
    return nullptr;
  }
};

// Assignment sets. Interventions target endogenous variables only; evidence
// is likewise restricted to endogenous variables.
struct Intervention {
  std::map<std::string, std::string> assignments;
};

struct Evidence {
  std::map<std::string, std::string> assignments;
};

// ---------------------------------------------------------------------------
// Structural function evaluation
//
// The one evaluator shared by every inference path. `lookup` maps a parent
// name to its current value.

template <class Lookup>
std::string_view eval_expr(const Expr& e, const std::vector<std::string>& parents,
                           Lookup&& lookup) {
  if (const auto* c = std::get_if<Expr::Const>(&e.node)) return c->value;
  if (const auto* r = std::get_if<Expr::Ref>(&e.node)) return lookup(r->variable);
  if (const auto* i = std::get_if<Expr::If>(&e.node)) {
    const Expr& branch =
        lookup(i->variable) == i->value ? *i->then_branch : *i->else_branch;
    return eval_expr(branch, parents, lookup);
  }
  const auto& t = std::get<Expr::Table>(e.node);
  for (const auto& row : t.rows) {
    bool match = row.key.size() == parents.size();
    for (std::size_t k = 0; match && k < row.key.size(); ++k) {
      match = lookup(parents[k]) == row.key[k];
    }
    if (match) return row.value;
  }
  if (t.default_value) return *t.default_value;
  throw Error("table lookup fell through without a default row");
}

template <class Lookup>
std::string_view eval_function(const StructuralFunction& f, Lookup&& lookup) {
  return eval_expr(*f.body, f.parents, std::forward<Lookup>(lookup));
}

// ---------------------------------------------------------------------------
// Validation

struct ValidationIssue {
  std::string subject;  // offending variable or role
  std::string aspect;   // variable | prior | function | graph | roles
  std::string message;
};

struct ValidationResult {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const {
    std::ostringstream out;
    for (const auto& i : issues) out << i.message << "\n";
    return out.str();
  }
};

namespace detail {

// Reserved words of the model language; variable names and domain values
// must avoid them so every valid model has an unambiguous textual form.
inline const std::set<std::string_view>& reserved_words() {
  static const std::set<std::string_view> words{
      "model",   "exogenous", "variable",  "domain", "prior",  "parents",
      "fn",      "if",        "then",      "else",   "table",  "default",
      "protected", "feature", "predictor", "target"};
  return words;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
  if (!alpha(s[0])) return false;
  for (char c : s.substr(1))
    if (!alnum(c)) return false;
  return !reserved_words().count(s);
}

inline void collect_refs(const Expr& e, std::set<std::string>& refs) {
  if (const auto* r = std::get_if<Expr::Ref>(&e.node)) {
    refs.insert(r->variable);
  } else if (const auto* i = std::get_if<Expr::If>(&e.node)) {
    refs.insert(i->variable);
    collect_refs(*i->then_branch, refs);
    collect_refs(*i->else_branch, refs);
  }
  // Const and Table reference parents positionally, not by name.
}

// Endogenous dependency order via repeated selection; returns endogenous
// names in evaluation order, or nullopt when the parent graph has a cycle.
inline std::optional<std::vector<std::string>> topological_order(const CausalModel& m) {
  std::vector<const StructuralFunction*> pending;
  for (const auto& f : m.functions) pending.push_back(&f);
  std::set<std::string> placed;  // endogenous variables already ordered
  std::vector<std::string> order;
  while (!pending.empty()) {
    bool progress = false;
    for (auto it = pending.begin(); it != pending.end();) {
      bool ready = true;
      for (const auto& p : (*it)->parents) {
        const VariableDecl* decl = m.find_variable(p);
        if (decl && decl->kind == VarKind::endogenous && !placed.count(p)) {
          ready = false;
          break;
        }
      }
      if (ready) {
        order.push_back((*it)->target);
        placed.insert((*it)->target);
        it = pending.erase(it);
        progress = true;
      } else {
        ++it;
      }
    }
    if (!progress) return std::nullopt;
  }
  return order;
}

// Finds one directed cycle among the endogenous parent edges, for reporting.
inline std::vector<std::string> find_cycle(const CausalModel& m) {
  std::map<std::string, std::vector<std::string>> endo_parents;
  for (const auto& f : m.functions) {
    for (const auto& p : f.parents) {
      const VariableDecl* decl = m.find_variable(p);
      if (decl && decl->kind == VarKind::endogenous) endo_parents[f.target].push_back(p);
    }
  }
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  std::vector<std::string> stack;
  std::vector<std::string> cycle;
  std::function<bool(const std::string&)> visit = [&](const std::string& v) -> bool {
    state[v] = 1;
    stack.push_back(v);
    for (const auto& p : endo_parents[v]) {
      if (state[p] == 1) {
        auto it = std::find(stack.begin(), stack.end(), p);
        cycle.assign(it, stack.end());
        cycle.push_back(p);
        return true;
      }
      if (state[p] == 0 && visit(p)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (const auto& f : m.functions) {
    if (state[f.target] == 0 && visit(f.target)) break;
  }
  return cycle;
}

// Endogenous ancestors of `roots` through the parent relation (roots excluded
// unless reachable from themselves, which validation rules out).
inline std::set<std::string> endogenous_ancestors(const CausalModel& m,
                                                  const std::set<std::string>& roots) {
  std::set<std::string> seen;
  std::vector<std::string> frontier(roots.begin(), roots.end());
  while (!frontier.empty()) {
    std::string v = frontier.back();
    frontier.pop_back();
    const StructuralFunction* f = m.find_function(v);
    if (!f) continue;
    for (const auto& p : f->parents) {
      const VariableDecl* decl = m.find_variable(p);
      if (decl && decl->kind == VarKind::endogenous && seen.insert(p).second) {
        frontier.push_back(p);
      }
    }
  }
  return seen;
}

}  // namespace detail

inline ValidationResult validate(const CausalModel& m) {
  ValidationResult result;
  auto issue = [&](std::string subject, std::string aspect, std::string message) {
    result.issues.push_back({std::move(subject), std::move(aspect), std::move(message)});
  };

  // Variable declarations: identifier shape, unique names, non-empty distinct domains.
  std::set<std::string> names;
  for (const auto& v : m.variables) {
    if (!detail::is_identifier(v.name)) {
      issue(v.name, "variable", "variable name '" + v.name + "' is not a valid identifier");
    }
    if (!names.insert(v.name).second) {
      issue(v.name, "variable", "duplicate variable name '" + v.name + "'");
    }
    if (v.domain.empty()) {
      issue(v.name, "variable", "domain of '" + v.name + "' is empty");
    }
    std::set<std::string> values;
    for (const auto& val : v.domain) {
      if (!detail::is_identifier(val)) {
        issue(v.name, "variable",
              "domain value '" + val + "' of '" + v.name + "' is not a valid identifier");
      }
      if (!values.insert(val).second) {
        issue(v.name, "variable", "domain of '" + v.name + "' repeats value '" + val + "'");
      }
    }
  }

  // Priors: exactly one per exogenous variable, aligned, non-negative, normalized.
  std::set<std::string> prior_targets;
  for (const auto& p : m.priors) {
    const VariableDecl* decl = m.find_variable(p.variable);
    if (!decl) {
      issue(p.variable, "prior", "prior for undeclared variable '" + p.variable + "'");
      continue;
    }
    if (decl->kind != VarKind::exogenous) {
      issue(p.variable, "prior", "prior on endogenous variable '" + p.variable + "'");
      continue;
    }
    if (!prior_targets.insert(p.variable).second) {
      issue(p.variable, "prior", "duplicate prior for '" + p.variable + "'");
      continue;
    }
    if (p.probabilities.size() != decl->domain.size()) {
      issue(p.variable, "prior",
            "prior for '" + p.variable + "' has " + std::to_string(p.probabilities.size()) +
                " entries for a domain of size " + std::to_string(decl->domain.size()));
      continue;
    }
    double sum = 0.0;
    bool negative = false;
    for (double q : p.probabilities) {
      if (q < 0.0) negative = true;
      sum += q;
    }
    if (negative) {
      issue(p.variable, "prior", "prior for '" + p.variable + "' has a negative entry");
    }
    if (std::abs(sum - 1.0) > kPriorTolerance) {
      std::ostringstream msg;
      msg << "prior for '" << p.variable << "' not normalized (sum " << sum << ")";
      issue(p.variable, "prior", msg.str());
    }
  }
  for (const auto& v : m.variables) {
    if (v.kind == VarKind::exogenous && !prior_targets.count(v.name)) {
      issue(v.name, "prior", "exogenous variable '" + v.name + "' has no prior");
    }
  }

  // Functions: exactly one per endogenous variable, declared parents, total bodies.
  std::set<std::string> function_targets;
  for (const auto& f : m.functions) {
    const VariableDecl* decl = m.find_variable(f.target);
    if (!decl) {
      issue(f.target, "function", "function for undeclared variable '" + f.target + "'");
      continue;
    }
    if (decl->kind != VarKind::endogenous) {
      issue(f.target, "function", "function on exogenous variable '" + f.target + "'");
      continue;
    }
    if (!function_targets.insert(f.target).second) {
      issue(f.target, "function", "duplicate function for '" + f.target + "'");
      continue;
    }

    bool parents_ok = true;
    std::set<std::string> parent_set;
    for (const auto& p : f.parents) {
      if (!m.find_variable(p)) {
        issue(f.target, "function",
              "function for '" + f.target + "' lists undeclared parent '" + p + "'");
        parents_ok = false;
      }
      if (!parent_set.insert(p).second) {
        issue(f.target, "function",
              "function for '" + f.target + "' repeats parent '" + p + "'");
        parents_ok = false;
      }
    }
    if (!f.body) {
      issue(f.target, "function", "function for '" + f.target + "' has no body");
      continue;
    }

    std::set<std::string> refs;
    detail::collect_refs(*f.body, refs);
    for (const auto& r : refs) {
      if (!parent_set.count(r)) {
        issue(f.target, "function",
              "function for '" + f.target + "' references '" + r +
                  "', which is not a declared parent");
        parents_ok = false;
      }
    }

    // Table shape checks: arity, key membership, duplicates.
    std::function<bool(const Expr&)> check_shape = [&](const Expr& e) -> bool {
      bool ok = true;
      if (const auto* i = std::get_if<Expr::If>(&e.node)) {
        const VariableDecl* pd = m.find_variable(i->variable);
        if (pd && std::find(pd->domain.begin(), pd->domain.end(), i->value) == pd->domain.end()) {
          issue(f.target, "function",
                "function for '" + f.target + "' tests '" + i->variable + "' against '" +
                    i->value + "', which is outside its domain");
          ok = false;
        }
        ok &= check_shape(*i->then_branch);
        ok &= check_shape(*i->else_branch);
      } else if (const auto* t = std::get_if<Expr::Table>(&e.node)) {
        std::set<std::vector<std::string>> seen_keys;
        for (const auto& row : t->rows) {
          if (row.key.size() != f.parents.size()) {
            issue(f.target, "function",
                  "table row in '" + f.target + "' has " + std::to_string(row.key.size()) +
                      " key values for " + std::to_string(f.parents.size()) + " parents");
            ok = false;
            continue;
          }
          if (!seen_keys.insert(row.key).second) {
            issue(f.target, "function", "table in '" + f.target + "' repeats a key");
            ok = false;
          }
          for (std::size_t k = 0; k < row.key.size(); ++k) {
            const VariableDecl* pd = m.find_variable(f.parents[k]);
            if (pd &&
                std::find(pd->domain.begin(), pd->domain.end(), row.key[k]) == pd->domain.end()) {
              issue(f.target, "function",
                    "table key value '" + row.key[k] + "' in '" + f.target +
                        "' is outside the domain of '" + f.parents[k] + "'");
              ok = false;
            }
          }
        }
      }
      return ok;
    };
    bool shape_ok = check_shape(*f.body);

    // Totality: exhaustive evaluation over every parent-value combination.
    if (parents_ok && shape_ok) {
      std::vector<const VariableDecl*> parent_decls;
      for (const auto& p : f.parents) parent_decls.push_back(m.find_variable(p));
      std::vector<std::size_t> odo(f.parents.size(), 0);
      bool more = true;
      while (more) {
        std::map<std::string, std::string> env;
        for (std::size_t k = 0; k < f.parents.size(); ++k) {
          env[f.parents[k]] = parent_decls[k]->domain[odo[k]];
        }
        try {
          std::string_view out = eval_function(
              f, [&](const std::string& v) -> std::string_view { return env.at(v); });
          if (std::find(decl->domain.begin(), decl->domain.end(), out) == decl->domain.end()) {
            std::ostringstream msg;
            msg << "function for '" << f.target << "' produces '" << out
                << "', outside its domain, for (";
            for (std::size_t k = 0; k < f.parents.size(); ++k) {
              msg << (k ? ", " : "") << env[f.parents[k]];
            }
            msg << ")";
            issue(f.target, "function", msg.str());
            break;
          }
        } catch (const Error&) {
          std::ostringstream msg;
          msg << "function for '" << f.target << "' is not total: no row matches (";
          for (std::size_t k = 0; k < f.parents.size(); ++k) {
            msg << (k ? ", " : "") << env[f.parents[k]];
          }
          msg << ")";
          issue(f.target, "function", msg.str());
          break;
        }
        more = false;
        for (std::size_t k = f.parents.size(); k-- > 0;) {
          if (++odo[k] < parent_decls[k]->domain.size()) {
            more = true;
            break;
          }
          odo[k] = 0;
        }
      }
    }
  }
  for (const auto& v : m.variables) {
    if (v.kind == VarKind::endogenous && !function_targets.count(v.name)) {
      issue(v.name, "function", "endogenous variable '" + v.name + "' has no function");
    }
  }

  // Acyclicity of the endogenous parent graph.
  if (!detail::topological_order(m)) {
    std::vector<std::string> cycle = detail::find_cycle(m);
    std::ostringstream msg;
    msg << "cycle:";
    for (std::size_t i = 0; i < cycle.size(); ++i) msg << (i ? " -> " : " ") << cycle[i];
    issue(cycle.empty() ? "" : cycle.front(), "graph", msg.str());
  }

  // Roles.
  auto role_endogenous = [&](const std::string& name, const std::string& role) -> bool {
    if (name.empty()) {
      issue(role, "roles", "no " + role + " variable designated");
      return false;
    }
    const VariableDecl* decl = m.find_variable(name);
    if (!decl) {
      issue(role, "roles", role + " variable '" + name + "' is not declared");
      return false;
    }
    if (decl->kind != VarKind::endogenous) {
      issue(role, "roles", role + " variable '" + name + "' must be endogenous");
      return false;
    }
    return true;
  };
  bool roles_ok = true;
  roles_ok &= role_endogenous(m.roles.protected_attribute, "protected");
  roles_ok &= role_endogenous(m.roles.predictor, "predictor");
  roles_ok &= role_endogenous(m.roles.target, "target");
  std::set<std::string> feature_set;
  for (const auto& x : m.roles.features) {
    roles_ok &= role_endogenous(x, "feature");
    if (!feature_set.insert(x).second) {
      issue(x, "roles", "feature '" + x + "' listed twice");
      roles_ok = false;
    }
  }
  if (!m.roles.predictor.empty() && m.roles.predictor == m.roles.target) {
    issue(m.roles.predictor, "roles", "predictor and target must be distinct variables");
    roles_ok = false;
  }
  if (feature_set.count(m.roles.protected_attribute)) {
    issue(m.roles.protected_attribute, "roles",
          "protected attribute '" + m.roles.protected_attribute + "' cannot be a feature");
    roles_ok = false;
  }
  if (feature_set.count(m.roles.predictor)) {
    issue(m.roles.predictor, "roles",
          "predictor '" + m.roles.predictor + "' cannot be a feature");
    roles_ok = false;
  }

  // The predictor sees features, not latent state: no exogenous parent, and
  // every endogenous variable it transitively reads must be the protected
  // attribute, a feature, or one of their endogenous ancestors.
  if (roles_ok && result.ok()) {
    const StructuralFunction* pf = m.find_function(m.roles.predictor);
    if (pf) {
      for (const auto& p : pf->parents) {
        const VariableDecl* decl = m.find_variable(p);
        if (decl && decl->kind == VarKind::exogenous) {
          issue(m.roles.predictor, "roles",
                "predictor '" + m.roles.predictor + "' reads exogenous variable '" + p +
                    "' directly");
        }
      }
      std::set<std::string> allowed{m.roles.protected_attribute};
      for (const auto& x : m.roles.features) allowed.insert(x);
      std::set<std::string> anc = detail::endogenous_ancestors(m, allowed);
      allowed.insert(anc.begin(), anc.end());
      std::set<std::string> reach =
          detail::endogenous_ancestors(m, std::set<std::string>{m.roles.predictor});
      for (const auto& v : reach) {
        if (!allowed.count(v)) {
          issue(m.roles.predictor, "roles",
                "predictor '" + m.roles.predictor + "' depends on '" + v +
                    "', which is neither the protected attribute, a feature, nor one of "
                    "their ancestors");
        }
      }
    }
  }

  return result;
}

// ---------------------------------------------------------------------------
// Submodel construction (graph surgery)

inline void check_intervention(const CausalModel& m, const Intervention& intervention) {
  for (const auto& [var, value] : intervention.assignments) {
    const VariableDecl* decl = m.find_variable(var);
    if (!decl || decl->kind != VarKind::endogenous) {
      throw UnknownVariableError("no endogenous variable '" + var + "'");
    }
    if (std::find(decl->domain.begin(), decl->domain.end(), value) == decl->domain.end()) {
      throw ValueOutsideDomainError("value '" + value + "' is outside the domain of '" + var +
                                    "'");
    }
  }
}

// Replaces each intervened variable's function with the assigned constant;
// everything else is unchanged.
inline CausalModel submodel(const CausalModel& m, const Intervention& intervention) {
  check_intervention(m, intervention);
  CausalModel result = m;
  for (auto& f : result.functions) {
    auto it = intervention.assignments.find(f.target);
    if (it != intervention.assignments.end()) {
      f.parents.clear();
      f.body = Expr::constant(it->second);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Structural equality, insensitive to declaration order.

inline bool structurally_equal(const CausalModel& a, const CausalModel& b) {
  if (a.name != b.name) return false;
  if (a.variables.size() != b.variables.size()) return false;
  for (const auto& va : a.variables) {
    const VariableDecl* vb = b.find_variable(va.name);
    if (!vb || vb->kind != va.kind || vb->domain != va.domain) return false;
  }
  if (a.priors.size() != b.priors.size()) return false;
  for (const auto& pa : a.priors) {
    const ExogenousPrior* pb = b.find_prior(pa.variable);
    if (!pb || pb->probabilities != pa.probabilities) return false;
  }
  if (a.functions.size() != b.functions.size()) return false;
  for (const auto& fa : a.functions) {
    const StructuralFunction* fb = b.find_function(fa.target);
    if (!fb || fb->parents != fa.parents || !equal(fa.body, fb->body)) return false;
  }
  if (a.roles.protected_attribute != b.roles.protected_attribute) return false;
  if (a.roles.predictor != b.roles.predictor) return false;
  if (a.roles.target != b.roles.target) return false;
  std::vector<std::string> fx = a.roles.features, fy = b.roles.features;
  std::sort(fx.begin(), fx.end());
  std::sort(fy.begin(), fy.end());
  return fx == fy;
}

}  // namespace cfaudit
