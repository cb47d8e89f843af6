#pragma once

#include "scalar.hpp"
#include "linalg.hpp"
#include "projective.hpp"
#include "ckspace.hpp"
#include "quadext.hpp"
#include "metric.hpp"
#include "transforms.hpp"
#include "quadrics.hpp"
#include "simplex.hpp"
#include "clifford.hpp"
#include "io.hpp"
#include "cli.hpp"
