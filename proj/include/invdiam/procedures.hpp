#pragma once

#include "invdiam/procedures/best.hpp"
#include "invdiam/procedures/common.hpp"
#include "invdiam/procedures/compose.hpp"
#include "invdiam/procedures/connected3.hpp"
#include "invdiam/procedures/degenerate.hpp"
#include "invdiam/procedures/planar.hpp"
#include "invdiam/procedures/trees.hpp"
#include "invdiam/procedures/uppergen.hpp"
