#pragma once

#include "hyperwiener/error.hpp"
#include "hyperwiener/hypergraph.hpp"
#include "hyperwiener/metric.hpp"
#include "hyperwiener/pc_structure.hpp"
#include "hyperwiener/wiener_cut.hpp"
#include "hyperwiener/io.hpp"
#include "hyperwiener/generators.hpp"
