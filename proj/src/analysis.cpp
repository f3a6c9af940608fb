#include "rcvc/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "rcvc/errors.hpp"

namespace rcvc {

const char* to_string(Units units) { return units == Units::Tau ? "tau" : "extra_degree"; }

BranchingVector BranchingVector::to_tau_units() const {
    if (units == Units::Tau) return *this;
    BranchingVector out{{}, Units::Tau};
    for (int a : components) {
        require(a % 2 == 0, "to_tau_units: odd extra-degree component");
        out.components.push_back(a / 2);
    }
    return out;
}

double branching_residual(const BranchingVector& v, double x) {
    double sum = 0.0;
    for (int a : v.components) sum += std::pow(x, -a);
    return sum - 1.0;
}

double branching_number(const BranchingVector& v) {
    require(v.components.size() >= 2, "branching_number: need at least two branches");
    require(std::all_of(v.components.begin(), v.components.end(), [](int a) { return a >= 1; }),
            "branching_number: components must be positive");
    // f(x) = Σ x^(-a_i) - 1 is strictly decreasing on (1, ∞), positive near 1
    // and non-positive at x = r, the number of branches.
    double lo = 1.0 + 1e-12;
    double hi = std::max(2.0, static_cast<double>(v.components.size()));
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        double mid = 0.5 * (lo + hi);
        if (branching_residual(v, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double branching_number(std::initializer_list<int> components) {
    return branching_number(BranchingVector{components, Units::Tau});
}

InterleaveResult interleave_base(double base, double kernel_growth) {
    require(base > 1.0 && kernel_growth > 1.0, "interleave_base: arguments must exceed 1");
    const double lb = std::log(base);
    const double alpha = lb / (std::log(kernel_growth) + 2.0 * lb);
    return {alpha, std::pow(base, 1.0 - alpha)};
}

namespace {

CatalogEntry ex(std::string id, std::string description, std::vector<int> v, std::vector<std::string> classes) {
    return {std::move(id), std::move(description), {std::move(v), Units::ExtraDegree}, std::move(classes)};
}

CatalogEntry tau(std::string id, std::string description, std::vector<int> v, std::vector<std::string> classes) {
    return {std::move(id), std::move(description), {std::move(v), Units::Tau}, std::move(classes)};
}

std::vector<CatalogEntry> build_catalog() {
    return {
        ex("b.1.1", "degree-4 center, deg(s)=3, deg(x)=3, deg(y)=3", {10, 14}, {"G4", "G3"}),
        ex("b.1.2", "degree-4 center, deg(s)=3, deg(x)=3, deg(y)>3", {12, 12}, {"G4", "G3"}),
        ex("b.2.1", "degree-4 center, deg(s)=3, deg(x)=4, deg(y)=3", {10, 16}, {"G3", "G3"}),
        ex("b.2.2", "degree-4 center, deg(s)=3, deg(x)=4, deg(y)>3", {12, 14}, {"G3", "G3"}),
        ex("d.1", "no shared degree-3 vertex, deg(f)=deg(g)=3", {14, 12}, {"G4", "G3"}),
        ex("d.2", "deg(f)=deg(g)=4", {10, 16}, {"G4", "G3"}),
        ex("d.3", "deg(f)=3, deg(g)=4", {12, 14}, {"G4", "G3"}),
        ex("d.4", "deg(f)=deg(g)=3, deg(q)>3", {14, 14}, {"G3", "G3"}),
        ex("d.5", "deg(f)=deg(g)=4, deg(q)>3", {10, 18}, {"G3", "G3"}),
        ex("d.6", "deg(f)=3, deg(g)=4, deg(q)>3", {12, 16}, {"G3", "G3"}),
        ex("e.1a", "shared degree-4 w on two neighbors, deg(s)=deg(z)=4", {6, 18}, {"G4", "G3"}),
        ex("e.1b", "shared degree-4 w on two neighbors, deg(s)=deg(z)=3", {6, 14}, {"G6", "G3"}),
        ex("e.1c.i", "deg(s)=4, deg(z)=3, a degree-3 neighbor of s; branch on s", {6, 18}, {"G4", "G3"}),
        ex("e.1c.ii", "deg(s)=4, deg(z)=3, degree-4 neighbors of s", {6, 24}, {"G3", "G3"}),
        ex("g", "triangles around u, degree-4 vertex survives both branches", {6, 14}, {"G4", "G4"}),
        ex("g.4a.include", "branch on w5, included, after two structions", {12, 34}, {"G4", "G3"}),
        ex("g.4a", "branch on w5, combined", {34, 12, 10}, {"G3", "G4", "G4"}),
        ex("j.worst", "3-regular worst case", {4, 10}, {"G4", "G4"}),
        ex("j.1.5a", "one triangle, branch on v4", {4, 12}, {"G4", "G4"}),
        ex("j.1.a", "one triangle, v1 joined to a neighbor of v3/v4", {8, 14}, {"G3", "G3"}),
        ex("j.1.b", "one triangle, neighbors of v3, v4 paired", {4, 14}, {"G4", "G4"}),
        ex("j.2.5d", "triangle-free, branch on w3", {16, 10}, {"G4", "G4"}),
        ex("j.2.5e", "triangle-free, branch on the third neighbor of w", {14, 10}, {"G4", "G4"}),
        ex("j.2", "triangle-free pentagon structure, combined", {24, 20, 20, 14}, {"G4", "G4", "G4", "G4"}),
        ex("j.3reg.safe", "3-regular fallback when no degree-4 vertex is guaranteed", {6, 14}, {"G3", "G3"}),
        tau("combo.b", "case b (5,7) followed by the 3-regular worst (2,5) on the second branch", {5, 9, 12},
            {"G4", "G4", "G4"}),
        tau("combo.g", "case g (17,6,5) followed by the 3-regular worst (2,5) on the first branch", {22, 19, 6, 5},
            {"G4", "G4", "G4", "G4"}),
        tau("worst.tau", "worst vector over subgraphs that keep a degree->=4 vertex", {3, 7}, {"G4", "G4"}),
    };
}

}  // namespace

const std::vector<CatalogEntry>& case_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

}  // namespace rcvc
