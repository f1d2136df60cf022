#pragma once

// Everything except the CLI, which pulls in CLI11.
#include "lefcalc/catalog.hpp"
#include "lefcalc/category.hpp"
#include "lefcalc/error.hpp"
#include "lefcalc/hpd.hpp"
#include "lefcalc/identity.hpp"
#include "lefcalc/io.hpp"
#include "lefcalc/join.hpp"
#include "lefcalc/ladder.hpp"
#include "lefcalc/partition.hpp"
#include "lefcalc/projection.hpp"
#include "lefcalc/random.hpp"
#include "lefcalc/rank_expr.hpp"
#include "lefcalc/render.hpp"
#include "lefcalc/sections.hpp"
