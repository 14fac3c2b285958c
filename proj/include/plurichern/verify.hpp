#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plurichern/surface.hpp"

namespace plurichern {

/// Identities the self-check can be told to corrupt, to prove it notices.
enum class InjectedFault { None, AbcClosedForm, ChiClosedForm, CatalogNoether, Threshold };

struct VerifyOptions {
    int n_max = 200;
    std::vector<SurfaceInvariants> grid;  // empty = built-in grid
    InjectedFault fault = InjectedFault::None;
};

struct VerifyCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerifyOutcome {
    std::vector<VerifyCheck> checks;

    bool passed() const;
    /// First failing check, if any.
    std::optional<VerifyCheck> first_failure() const;
};

/// Built-in surface grid for the χ identity.
std::vector<SurfaceInvariants> default_verification_grid();

/// Runs the closed-form/oracle comparisons, the χ identity, the catalog
/// Noether checks and the threshold cross-checks.
VerifyOutcome run_verification(const VerifyOptions& options);

}  // namespace plurichern
