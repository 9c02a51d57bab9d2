#pragma once

// Exact invariants of Seifert fibered homology spheres: Dedekind and
// Dedekind-Rademacher sums, the eta-invariant combination, the mu-bar
// invariant by three independent routes, and the plumbing-side index checks.

#include "mubar/rational.hpp"
#include "mubar/dedekind.hpp"
#include "mubar/seifert.hpp"
#include "mubar/invariants.hpp"
#include "mubar/plumbing.hpp"
#include "mubar/report.hpp"
#include "mubar/verify.hpp"
