#pragma once

// Convenience umbrella: the whole library.

#include "defcalc/boundary.hpp"
#include "defcalc/channels.hpp"
#include "defcalc/expression.hpp"
#include "defcalc/extended.hpp"
#include "defcalc/halfplane.hpp"
#include "defcalc/index_calculus.hpp"
#include "defcalc/kernel_counts.hpp"
#include "defcalc/liouville.hpp"
#include "defcalc/ode.hpp"
#include "defcalc/parse.hpp"
#include "defcalc/polynomial.hpp"
#include "defcalc/power_expansion.hpp"
#include "defcalc/rational.hpp"
#include "defcalc/report.hpp"
#include "defcalc/roots.hpp"
#include "defcalc/stirling.hpp"
#include "defcalc/symbolic.hpp"
#include "defcalc/verify.hpp"
#include "defcalc/weyl.hpp"
