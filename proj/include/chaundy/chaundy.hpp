#pragma once

// Exact verification toolkit for the Chaundy-Bullard partition of unity and
// its companions: Bezout polynomial pairs for (x^(m+1), (1-x)^(n+1)), the
// combinatorial lemmas behind the coefficient-cancellation proof, the
// incomplete-beta form of the identity, and the rising-factorial twin.

#include "chaundy/bezout.hpp"
#include "chaundy/bipoly.hpp"
#include "chaundy/check_report.hpp"
#include "chaundy/combinatorics.hpp"
#include "chaundy/errors.hpp"
#include "chaundy/identities.hpp"
#include "chaundy/polynomial.hpp"
#include "chaundy/rational.hpp"
#include "chaundy/special_fn.hpp"
#include "chaundy/sweep.hpp"
