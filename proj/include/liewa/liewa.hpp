#pragma once

#include "liewa/rational.hpp"
#include "liewa/matrix.hpp"
#include "liewa/linalg.hpp"
#include "liewa/lie_algebra.hpp"
#include "liewa/constructions.hpp"
#include "liewa/structure.hpp"
#include "liewa/real_forms.hpp"
#include "liewa/verdict.hpp"
#include "liewa/explicit_groups.hpp"
#include "liewa/orbit_lab.hpp"
#include "liewa/io.hpp"
#include "liewa/report.hpp"
#include "liewa/properties.hpp"
