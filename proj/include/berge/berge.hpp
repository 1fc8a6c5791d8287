#pragma once

#include "berge/berge_search.hpp"
#include "berge/canonical.hpp"
#include "berge/embedding.hpp"
#include "berge/enumerate.hpp"
#include "berge/error.hpp"
#include "berge/extremal.hpp"
#include "berge/graph_structure.hpp"
#include "berge/hypergraph.hpp"
#include "berge/io.hpp"
#include "berge/matching.hpp"
#include "berge/rational.hpp"
#include "berge/sdrp.hpp"
#include "berge/vertex_set.hpp"
