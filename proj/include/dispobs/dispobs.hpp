#pragma once

#include "dispobs/rational.hpp"
#include "dispobs/symbol.hpp"
#include "dispobs/integer_roots.hpp"
#include "dispobs/diophantine.hpp"
#include "dispobs/graph.hpp"
#include "dispobs/decision.hpp"
#include "dispobs/numeric.hpp"
#include "dispobs/witness.hpp"
#include "dispobs/applications.hpp"
#include "dispobs/report.hpp"
