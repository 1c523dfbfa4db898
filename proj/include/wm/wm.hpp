#pragma once

#include "wm/checks.hpp"
#include "wm/coxeter.hpp"
#include "wm/flags.hpp"
#include "wm/fq.hpp"
#include "wm/limits.hpp"
#include "wm/poly.hpp"
#include "wm/poly_io.hpp"
#include "wm/reference_tables.hpp"
#include "wm/rothe.hpp"
#include "wm/series.hpp"
#include "wm/signed_perm.hpp"
#include "wm/statistics.hpp"
