#pragma once

#include "bracekit/errors.hpp"
#include "bracekit/element_set.hpp"
#include "bracekit/finite_group.hpp"
#include "bracekit/group_catalog.hpp"
#include "bracekit/brace.hpp"
#include "bracekit/ideals.hpp"
#include "bracekit/invariants.hpp"
#include "bracekit/ybe.hpp"
#include "bracekit/enumeration.hpp"
#include "bracekit/report.hpp"
#include "bracekit/sweep.hpp"
#include "bracekit/io.hpp"
#include "bracekit/cache.hpp"
