#pragma once

#include "hopfrank/error.hpp"
#include "hopfrank/field.hpp"
#include "hopfrank/matrix.hpp"
#include "hopfrank/poly.hpp"
#include "hopfrank/projective_line.hpp"
#include "hopfrank/algebra.hpp"
#include "hopfrank/structure.hpp"
#include "hopfrank/families.hpp"
#include "hopfrank/hopf.hpp"
#include "hopfrank/rep.hpp"
#include "hopfrank/modules.hpp"
#include "hopfrank/resolution.hpp"
#include "hopfrank/ext.hpp"
#include "hopfrank/varieties.hpp"
#include "hopfrank/io.hpp"
#include "hopfrank/suites.hpp"
