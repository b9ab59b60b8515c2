#pragma once

// Umbrella header.

#include "ktp/chordal.hpp"
#include "ktp/dot_export.hpp"
#include "ktp/graph.hpp"
#include "ktp/harness.hpp"
#include "ktp/json_io.hpp"
#include "ktp/oriented.hpp"
#include "ktp/partition.hpp"
