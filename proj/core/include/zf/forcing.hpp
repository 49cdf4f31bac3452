#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "zf/hypergraph.hpp"
#include "zf/vertex_set.hpp"

namespace zf {

/// Colour change rules. R0 is the classical graph rule (a black vertex with
/// exactly one white neighbour forces it). R1 and R2 act on hypergraphs: a
/// black trigger X inside an edge e blackens all of e, where R1 demands that
/// every white vertex adjacent to X lies in e, and R2 demands that no other
/// edge containing X still has white vertices.
enum class Rule { R0, R1, R2 };

/// Accepts "r0", "r1", "r2" (case-insensitive). Throws ParseError otherwise.
Rule parse_rule(std::string_view name);
const char* rule_name(Rule rule);

struct ForcingStep {
    VertexSet edge;
    VertexSet trigger;     // black part of the edge when it fired, nonempty
    VertexSet newly_black; // white part of the edge when it fired, nonempty
};

struct ForcingTrace {
    std::vector<ForcingStep> steps;
};

struct FireableStep {
    VertexSet edge;
    VertexSet trigger;
};

/// All edges that can fire from `black`, with their maximal triggers, in
/// canonical edge order. An edge fires on some trigger iff it fires on its
/// maximal one (rule conditions are monotone in the trigger), so only maximal
/// triggers are reported. Throws RuleNotApplicable for R0 on a non-graph.
std::vector<FireableStep> fireable(const Hypergraph& h, Rule rule, VertexSet black);

struct ClosureResult {
    VertexSet black;
    ForcingTrace trace;
};

/// Least fixed point of the rule above `black`, together with the firing
/// sequence taken. Deterministic: always fires the first fireable edge in
/// canonical order. The final set is independent of firing order.
ClosureResult closure(const Hypergraph& h, Rule rule, VertexSet black);

/// Closure with an injected choice of which fireable step to take; backs the
/// order-independence tests. `choose` receives the nonempty fireable list.
ClosureResult closure_with_choice(
    const Hypergraph& h, Rule rule, VertexSet black,
    const std::function<std::size_t(const std::vector<FireableStep>&)>& choose);

/// Closure without trace bookkeeping; the hot path for enumeration.
VertexSet closure_set(const Hypergraph& h, Rule rule, VertexSet black);

/// True when the closure of f is the whole ground set. f must be nonempty
/// (EmptySet) and within the ground set (VertexOutOfRange).
bool is_forcing(const Hypergraph& h, Rule rule, VertexSet f);

/// True when the all-but-i colouring is already closed, i.e. nothing fires
/// from the complement of i. Same preconditions as is_forcing.
bool is_immune(const Hypergraph& h, Rule rule, VertexSet i);

/// Edges a' containing a-x with (a' & x) - a nonempty. a must be an edge.
std::vector<VertexSet> sigma1(const Hypergraph& h, VertexSet x, VertexSet a);

/// Edges a' containing a-x meeting x. a must be an edge.
std::vector<VertexSet> sigma2(const Hypergraph& h, VertexSet x, VertexSet a);

/// Immunity decided through the neighbourhood characterizations instead of
/// running the dynamics: R1 needs |sigma1(x,a)| >= 1 and R2 needs
/// |sigma2(x,a)| >= 2 for every edge a meeting both x and its complement;
/// R0 needs every vertex outside x to have != 1 neighbours in x.
bool is_immune_nbhd(const Hypergraph& h, Rule rule, VertexSet x);

/// Smallest size of a forcing set. The ground set always forces, so this is
/// defined whenever n >= 1 (EmptySet otherwise).
int forcing_number(const Hypergraph& h, Rule rule);

} // namespace zf
