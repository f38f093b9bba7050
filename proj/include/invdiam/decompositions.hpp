#pragma once

#include "invdiam/decompositions/colouring.hpp"
#include "invdiam/decompositions/degeneracy.hpp"
#include "invdiam/decompositions/good5.hpp"
#include "invdiam/decompositions/kotzig.hpp"
#include "invdiam/decompositions/matching.hpp"
#include "invdiam/decompositions/tree4.hpp"
#include "invdiam/decompositions/tree_extract.hpp"
#include "invdiam/decompositions/tree_view.hpp"
#include "invdiam/decompositions/triangles.hpp"
