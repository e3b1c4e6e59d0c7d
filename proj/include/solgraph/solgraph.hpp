#pragma once

#include "solgraph/catalog.hpp"
#include "solgraph/errors.hpp"
#include "solgraph/graph.hpp"
#include "solgraph/group.hpp"
#include "solgraph/pair_cache.hpp"
#include "solgraph/perm.hpp"
#include "solgraph/radical.hpp"
#include "solgraph/solubilizer.hpp"
#include "solgraph/structure.hpp"
#include "solgraph/verify.hpp"
