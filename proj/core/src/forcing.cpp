#include "zf/forcing.hpp"

#include <cctype>

#include "zf/errors.hpp"

namespace zf {

Rule parse_rule(std::string_view name) {
    std::string lower;
    for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "r0") return Rule::R0;
    if (lower == "r1") return Rule::R1;
    if (lower == "r2") return Rule::R2;
    throw ParseError("unknown rule '" + std::string(name) + "', expected r0, r1 or r2");
}

const char* rule_name(Rule rule) {
    switch (rule) {
        case Rule::R0: return "r0";
        case Rule::R1: return "r1";
        case Rule::R2: return "r2";
    }
    return "?";
}

namespace {

void require_applicable(const Hypergraph& h, Rule rule) {
    if (rule == Rule::R0 && !h.is_graph())
        throw RuleNotApplicable("the graph rule needs every edge to have size 2");
}

void require_in_ground_set(const Hypergraph& h, VertexSet s, const char* what) {
    if (!s.subset_of(h.ground_set()))
        throw VertexOutOfRange(std::string(what) + " " + s.to_string() +
                               " leaves the ground set {1,...," + std::to_string(h.n()) + "}");
}

/// White vertices adjacent to the (black) trigger: union of e - black over
/// the edges e containing the trigger.
VertexSet white_adjacent(const Hypergraph& h, VertexSet trigger, VertexSet black) {
    VertexSet white;
    for (VertexSet e : h.edges())
        if (trigger.subset_of(e)) white |= e - black;
    return white;
}

/// Whether `edge` fires from `black` on the maximal trigger (edge & black,
/// known nonempty, with edge not fully black).
bool fires(const Hypergraph& h, Rule rule, VertexSet edge, VertexSet trigger, VertexSet black) {
    switch (rule) {
        case Rule::R1:
            // every white vertex adjacent to the trigger lies inside the edge
            return (white_adjacent(h, trigger, black) - edge).empty();
        case Rule::R2:
            // no other edge containing the trigger still has white vertices
            for (VertexSet other : h.edges()) {
                if (other == edge) continue;
                if (trigger.subset_of(other) && !other.subset_of(black)) return false;
            }
            return true;
        case Rule::R0:
            // graph rule: the white endpoint is the trigger's only white
            // neighbour anywhere in the graph
            return white_adjacent(h, trigger, black) == edge - black;
    }
    return false;
}

} // namespace

std::vector<FireableStep> fireable(const Hypergraph& h, Rule rule, VertexSet black) {
    require_applicable(h, rule);
    require_in_ground_set(h, black, "black set");

    std::vector<FireableStep> out;
    for (VertexSet e : h.edges()) {
        const VertexSet trigger = e & black;
        if (trigger.empty() || e.subset_of(black)) continue;
        if (fires(h, rule, e, trigger, black)) out.push_back({e, trigger});
    }
    return out;
}

ClosureResult closure_with_choice(
    const Hypergraph& h, Rule rule, VertexSet black,
    const std::function<std::size_t(const std::vector<FireableStep>&)>& choose) {
    ClosureResult result{black, {}};
    for (;;) {
        const auto steps = fireable(h, rule, result.black);
        if (steps.empty()) break;
        const FireableStep& s = steps[choose(steps) % steps.size()];
        result.trace.steps.push_back({s.edge, s.trigger, s.edge - result.black});
        result.black |= s.edge;
    }
    return result;
}

ClosureResult closure(const Hypergraph& h, Rule rule, VertexSet black) {
    return closure_with_choice(h, rule, black,
                               [](const std::vector<FireableStep>&) { return std::size_t{0}; });
}

VertexSet closure_set(const Hypergraph& h, Rule rule, VertexSet black) {
    require_applicable(h, rule);
    require_in_ground_set(h, black, "black set");

    // Fires all currently fireable edges per round. Each single firing is a
    // valid step and closures are order-independent, so the fixed point is
    // the same as for one-at-a-time firing.
    for (;;) {
        VertexSet next = black;
        for (VertexSet e : h.edges()) {
            const VertexSet trigger = e & black;
            if (trigger.empty() || e.subset_of(black)) continue;
            if (fires(h, rule, e, trigger, black)) next |= e;
        }
        if (next == black) return black;
        black = next;
    }
}

bool is_forcing(const Hypergraph& h, Rule rule, VertexSet f) {
    if (f.empty()) throw EmptySet("forcing sets are nonempty by definition");
    require_in_ground_set(h, f, "candidate");
    return closure_set(h, rule, f) == h.ground_set();
}

bool is_immune(const Hypergraph& h, Rule rule, VertexSet i) {
    if (i.empty()) throw EmptySet("immune sets are nonempty by definition");
    require_in_ground_set(h, i, "candidate");
    const VertexSet rest = h.ground_set() - i;
    return closure_set(h, rule, rest) == rest;
}

namespace {

std::vector<VertexSet> sigma(const Hypergraph& h, VertexSet x, VertexSet a, bool exclude_a) {
    require_in_ground_set(h, x, "set");
    if (!h.has_edge(a)) throw NotAnEdge(a.to_string() + " is not an edge");

    std::vector<VertexSet> out;
    const VertexSet base = a - x;
    for (VertexSet e : h.edges()) {
        if (!base.subset_of(e)) continue;
        const VertexSet hit = exclude_a ? (e & x) - a : e & x;
        if (!hit.empty()) out.push_back(e);
    }
    return out;
}

} // namespace

std::vector<VertexSet> sigma1(const Hypergraph& h, VertexSet x, VertexSet a) {
    return sigma(h, x, a, true);
}

std::vector<VertexSet> sigma2(const Hypergraph& h, VertexSet x, VertexSet a) {
    return sigma(h, x, a, false);
}

bool is_immune_nbhd(const Hypergraph& h, Rule rule, VertexSet x) {
    if (x.empty()) throw EmptySet("immune sets are nonempty by definition");
    require_applicable(h, rule);
    require_in_ground_set(h, x, "candidate");

    if (rule == Rule::R0) {
        // no vertex outside x may see exactly one member of x
        for (int v = 1; v <= h.n(); ++v) {
            if (x.contains(v)) continue;
            VertexSet nbrs;
            for (VertexSet e : h.edges())
                if (e.contains(v)) nbrs |= e.without(v);
            if ((nbrs & x).size() == 1) return false;
        }
        return true;
    }

    for (VertexSet a : h.edges()) {
        if (!a.intersects(x) || (a - x).empty()) continue;
        if (rule == Rule::R1) {
            if (sigma1(h, x, a).empty()) return false;
        } else {
            if (sigma2(h, x, a).size() < 2) return false;
        }
    }
    return true;
}

int forcing_number(const Hypergraph& h, Rule rule) {
    if (h.n() == 0) throw EmptySet("the ground set is empty");
    if (h.n() >= 64)
        throw GroundSetTooLarge("the subset scan needs n < 64");
    require_applicable(h, rule);

    const VertexSet omega = h.ground_set();
    for (int k = 1; k <= h.n(); ++k) {
        // Gosper's hack walks the k-subsets in increasing word order.
        std::uint64_t mask = (1ULL << k) - 1;
        const std::uint64_t limit = 1ULL << h.n();
        while (mask < limit) {
            if (closure_set(h, rule, VertexSet::from_bits(mask)) == omega) return k;
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return h.n(); // the ground set always forces
}

} // namespace zf
