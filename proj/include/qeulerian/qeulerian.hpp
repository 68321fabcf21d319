#pragma once

// Umbrella header.
#include "qeulerian/bigint.hpp"
#include "qeulerian/qpoly.hpp"
#include "qeulerian/trqpoly.hpp"
#include "qeulerian/perm.hpp"
#include "qeulerian/transforms.hpp"
#include "qeulerian/eulerian.hpp"
#include "qeulerian/qseries.hpp"
#include "qeulerian/report.hpp"
#include "qeulerian/identities.hpp"
