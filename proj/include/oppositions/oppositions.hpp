#pragma once

#include "errors.hpp"
#include "relation.hpp"
#include "formula.hpp"
#include "parser.hpp"
#include "graph.hpp"
#include "semantics.hpp"
#include "segment.hpp"
#include "emit.hpp"
