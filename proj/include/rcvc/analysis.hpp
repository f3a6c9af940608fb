#pragma once

#include <string>
#include <vector>

namespace rcvc {

enum class Units { ExtraDegree, Tau };

const char* to_string(Units units);

/// Per-branch decrease of a measure. Two extra-degrees are worth one unit of τ.
struct BranchingVector {
    std::vector<int> components;
    Units units = Units::Tau;

    /// Halves every component of an extra-degree vector; components must be even.
    BranchingVector to_tau_units() const;
};

/// The root x > 1 of Σ x^(-a_i) = 1, by bisection to 1e-12. Needs at least two
/// components, all >= 1.
double branching_number(const BranchingVector& v);
double branching_number(std::initializer_list<int> components);

/// Σ x^(-a_i) - 1.
double branching_residual(const BranchingVector& v, double x);

struct InterleaveResult {
    double alpha = 0.0;
    double effective_base = 1.0;
};

/// Balances base^((1-α)k) against (kernel_growth·base)^(αk):
/// α = ln(base) / (ln(kernel_growth) + 2 ln(base)), effective base = base^(1-α).
InterleaveResult interleave_base(double base, double kernel_growth);

inline constexpr double kWorstBranchingNumber = 1.15855;
inline constexpr double kInterleavedBase = 1.1504;
inline constexpr double kKernelGrowth = 16.0;

struct CatalogEntry {
    std::string case_id;
    std::string description;
    BranchingVector vector;
    std::vector<std::string> subgraph_classes;  // e.g. {"G4", "G3"}, one per branch
};

/// Every branching vector stated in the case analysis, verbatim and in the
/// units it was printed in, plus the combined τ-vectors built from them.
const std::vector<CatalogEntry>& case_catalog();

}  // namespace rcvc
