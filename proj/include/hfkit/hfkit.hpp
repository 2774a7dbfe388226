#pragma once

// Hereditarily finite sets under the Ackermann coding, first-order formulas
// over the arithmetic and set-theoretic languages, the existential/universal
// formula hierarchy, relativizing interpretations between the two languages,
// and finite-stage model checking.

#include "hfkit/ackcode.hpp"
#include "hfkit/bigint.hpp"
#include "hfkit/corpus.hpp"
#include "hfkit/eval.hpp"
#include "hfkit/formula.hpp"
#include "hfkit/graphs.hpp"
#include "hfkit/hfset.hpp"
#include "hfkit/hierarchy.hpp"
#include "hfkit/hierarchy_oracle.hpp"
#include "hfkit/interp.hpp"
#include "hfkit/model.hpp"
#include "hfkit/oracles.hpp"
#include "hfkit/parser.hpp"
#include "hfkit/printer.hpp"
#include "hfkit/selftest.hpp"
#include "hfkit/signature.hpp"
