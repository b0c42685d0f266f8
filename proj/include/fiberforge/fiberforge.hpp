#pragma once

#include "fiberforge/error.hpp"
#include "fiberforge/variable.hpp"
#include "fiberforge/ring.hpp"
#include "fiberforge/polynomial.hpp"
#include "fiberforge/io.hpp"
#include "fiberforge/symmat.hpp"
#include "fiberforge/budget.hpp"
#include "fiberforge/groebner.hpp"
#include "fiberforge/linalg.hpp"
#include "fiberforge/lambda.hpp"
#include "fiberforge/hilbert.hpp"
#include "fiberforge/combinat.hpp"
#include "fiberforge/rees.hpp"
#include "fiberforge/report.hpp"
#include "fiberforge/verify.hpp"
