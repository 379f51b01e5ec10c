#pragma once

#include "gdim/bounds.hpp"
#include "gdim/common.hpp"
#include "gdim/constructive.hpp"
#include "gdim/domination.hpp"
#include "gdim/generators.hpp"
#include "gdim/graph.hpp"
#include "gdim/io.hpp"
#include "gdim/metric.hpp"
#include "gdim/report.hpp"
#include "gdim/spectral.hpp"
#include "gdim/verify.hpp"
#include "gdim/vertex_set.hpp"
