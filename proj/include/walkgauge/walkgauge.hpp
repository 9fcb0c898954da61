#ifndef WALKGAUGE_WALKGAUGE_HPP
#define WALKGAUGE_WALKGAUGE_HPP

#include "walkgauge/canonical.hpp"
#include "walkgauge/enumerate.hpp"
#include "walkgauge/errors.hpp"
#include "walkgauge/forest_oracle.hpp"
#include "walkgauge/graph.hpp"
#include "walkgauge/graph_io.hpp"
#include "walkgauge/linalg.hpp"
#include "walkgauge/matrix.hpp"
#include "walkgauge/metrics.hpp"
#include "walkgauge/rational.hpp"
#include "walkgauge/report.hpp"
#include "walkgauge/report_json.hpp"
#include "walkgauge/resistance.hpp"
#include "walkgauge/simulate.hpp"
#include "walkgauge/theorems.hpp"
#include "walkgauge/unicyclic.hpp"
#include "walkgauge/version.hpp"
#include "walkgauge/walk.hpp"

#endif
