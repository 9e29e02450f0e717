#pragma once

// Umbrella header.

#include "synthdata/correlation.hpp"
#include "synthdata/dataset.hpp"
#include "synthdata/error.hpp"
#include "synthdata/evaluation.hpp"
#include "synthdata/gan.hpp"
#include "synthdata/gen_abm.hpp"
#include "synthdata/gen_statistical.hpp"
#include "synthdata/matrix.hpp"
#include "synthdata/pipeline.hpp"
#include "synthdata/rng.hpp"
#include "synthdata/special.hpp"
#include "synthdata/svg_report.hpp"
#include "synthdata/version.hpp"
