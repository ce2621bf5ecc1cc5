#pragma once

#include "cxk/formula.hpp"
#include "cxk/sequent.hpp"
#include "cxk/closure.hpp"
#include "cxk/calculus.hpp"
#include "cxk/proof.hpp"
#include "cxk/check.hpp"
#include "cxk/structural.hpp"
#include "cxk/valuation.hpp"
#include "cxk/prover.hpp"
#include "cxk/natded.hpp"
#include "cxk/reduction.hpp"
#include "cxk/bridge.hpp"
#include "cxk/embedding.hpp"
