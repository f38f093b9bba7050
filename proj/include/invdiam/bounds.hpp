#pragma once

#include "invdiam/bounds/certificate.hpp"
#include "invdiam/bounds/families.hpp"
#include "invdiam/bounds/lower.hpp"
