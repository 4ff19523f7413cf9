#pragma once

#include "enumerate.hpp"
#include "forests.hpp"
#include "formal_sum.hpp"
#include "graph.hpp"
#include "laplace.hpp"
#include "minors.hpp"
#include "parallel.hpp"
#include "poly.hpp"
#include "potts.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "suite.hpp"
#include "text_io.hpp"
#include "verify.hpp"
