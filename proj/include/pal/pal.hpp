// Everything in one include.

#pragma once

#include "pal/checker.hpp"
#include "pal/direct.hpp"
#include "pal/enumerate.hpp"
#include "pal/error.hpp"
#include "pal/formula.hpp"
#include "pal/generate.hpp"
#include "pal/model.hpp"
#include "pal/model_json.hpp"
#include "pal/relation.hpp"
#include "pal/sse.hpp"
#include "pal/suites.hpp"
#include "pal/syntax.hpp"
#include "pal/wisemen.hpp"
#include "pal/world_set.hpp"
