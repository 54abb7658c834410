#pragma once

#include "timescore/error.hpp"
#include "timescore/indicators.hpp"
#include "timescore/ingest.hpp"
#include "timescore/rational.hpp"
#include "timescore/report.hpp"
#include "timescore/scoring.hpp"
#include "timescore/standings.hpp"
#include "timescore/timeline.hpp"
